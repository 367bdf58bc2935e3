#pragma once

#include "idealforge/circle_map.hpp"

#include <set>
#include <vector>

namespace idealforge {

/// A dyadic circle point with a pair of residues mod n. Carries its modulus.
struct MarkedPoint {
    Dyadic x;  // in [0,1)
    int i = 0;
    int j = 0;
    int n = 1;

    MarkedPoint(Dyadic x_, int i_, int j_, int n_);

    friend bool operator==(const MarkedPoint& a, const MarkedPoint& b) {
        return a.n == b.n && a.i == b.i && a.j == b.j && a.x == b.x;
    }
    friend bool operator<(const MarkedPoint& a, const MarkedPoint& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

/// g . (x, i, j) = (g(x), i + D-(g)(x), j + D+(g)(x)), residues mod n.
MarkedPoint act(const CircleHomeo& g, const MarkedPoint& p);

/// Breadth-first closure of {p0} under the generators and their inverses,
/// discarding points whose x-denominator exceeds 2^denom_exp_bound.
/// Deterministic: the frontier is processed in sorted order with a fixed
/// generator order (g_1, g_1^{-1}, g_2, ...).
std::set<MarkedPoint> orbit_explore(const std::vector<CircleHomeo>& generators, const MarkedPoint& p0,
                                    int denom_exp_bound);

/// Which marked points (x, *, *) does g move, for x dyadic? Exactly those
/// with x in the moved set of the underlying circle map, plus the fixed
/// dyadic points whose one-sided log-slope pair is not (0,0) mod n. The
/// latter include fixed breakpoints and fixed dyadic points interior to
/// non-unit-slope pieces.
struct ActionSupport {
    SupportSet moved_arcs;                  // closure of the circle-moved set
    std::vector<Dyadic> exceptional_points; // fixed, but slope data != 0 mod n
};

ActionSupport action_support(const CircleHomeo& g, int n);

/// Direct check: does g move the marked point (x, i, j) for some (equivalently
/// every) choice of residues?
bool action_moves(const CircleHomeo& g, int n, const Dyadic& x);

/// No dyadic x is moved, in the action sense, by both g and h.
bool supports_disjoint_mod(const CircleHomeo& g, const CircleHomeo& h, int n);

}  // namespace idealforge
