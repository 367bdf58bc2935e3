#pragma once

#include "idealforge/circle_map.hpp"
#include "idealforge/interval_map.hpp"

#include <vector>

namespace idealforge {

/// Open arc of the circle avoiding the basepoint x, in cut coordinates: the
/// endpoints are dyadic reals with x < a < b < x + 1, representing
/// (a, b) + Z inside R/Z minus {x}. The basepoint may be any rational.
struct Arc {
    Rat basepoint;
    Dyadic a;
    Dyadic b;

    Arc(Rat x, Dyadic lo, Dyadic hi);

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// Smallest arc at the same basepoint containing both (their hull).
Arc arc_hull(const Arc& u1, const Arc& u2);

/// Increasing PL bijection [a,b] -> [c,d] with dyadic breakpoints and slopes
/// in 2^Z. Deterministic: each length is decomposed greedily into binary
/// parts (largest first), the shorter part list is equalized by repeatedly
/// halving its first part, and part i is mapped to part i linearly.
IntervalHomeo dyadic_interval_homeo(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d);

/// Assembles a circle element from interval pieces laid out in cut
/// coordinates inside [t, t+1], with identity on the gaps. Pieces must be
/// non-overlapping and value-compatible where they meet the identity
/// regions; the union must close up to a degree-one map.
CircleHomeo glue_to_circle(const Rat& basepoint, std::vector<IntervalHomeo> pieces);

/// An element fixing a neighborhood of x that maps the closure of u1 onto
/// the closure of u2 (and (a,b) onto (c,d)).
CircleHomeo compress_witness(const Rat& x, const Arc& u1, const Arc& u2);

/// An element g fixing a neighborhood of x with g(u1) disjoint from u3 and
/// supp(g) disjoint from u2. Requires the closures of u1 and u2 disjoint.
CircleHomeo separate_witness(const Rat& x, const Arc& u1, const Arc& u2, const Arc& u3);

/// An arc at basepoint x containing the support of g. Requires g to fix a
/// neighborhood of x.
Arc enclosing_arc_witness(const Rat& x, const CircleHomeo& g);

enum class WindowSide { left, right };

/// An element supported in [a,b] fixing both endpoints whose one-sided log
/// slope at the chosen endpoint is m: D+ at a for side::right, D- at b for
/// side::left. m = 0 yields the identity.
CircleHomeo slope_window_witness(const Dyadic& a, const Dyadic& b, WindowSide side, int m);

/// The pair (g, h): g supported in [1/2, 3/4] with D+(g)(1/2) = m, h
/// supported in [1/4, 1/2] with D-(h)(1/2) = m. Both lie in F; g is the
/// identity left of 1/2 and h right of it.
std::pair<CircleHomeo, CircleHomeo> thm46_pair(int m);

/// Conjugates an element fixing neighborhoods of 0 into the complement of
/// the window [y, z]: identity on [y, z], phi o g o phi^{-1} on [z, y+1]
/// where phi = dyadic_interval_homeo([0,1], [z, y+1]). A homomorphism in g.
CircleHomeo embed_commFF(const CircleHomeo& g, const Dyadic& y, const Dyadic& z);

}  // namespace idealforge
