#pragma once

#include "idealforge/dyadic.hpp"
#include "idealforge/interval_map.hpp"
#include "idealforge/rational.hpp"

#include <utility>
#include <vector>

namespace idealforge {

/// Closure of the moved set of a circle homeomorphism: pairwise disjoint
/// closed arcs, or the whole circle. Arcs are stored as [start, end] with
/// 0 <= start < 1 and start < end <= start + 1 (end > 1 encodes wrapping
/// through 0), sorted by start. Endpoints are rationals: fixed points of
/// slope-2^k pieces need not be dyadic.
struct SupportSet {
    bool whole_circle = false;
    std::vector<std::pair<Rat, Rat>> arcs;

    bool empty() const { return !whole_circle && arcs.empty(); }

    /// Closed membership of the circle point x mod 1.
    bool contains(const Rat& x) const;

    /// Does the closed set meet the open arc (lo, hi) mod 1? Requires hi - lo <= 1.
    bool meets_open_arc(const Rat& lo, const Rat& hi) const;

    /// Do the interiors of the two closed sets intersect?
    bool interiors_intersect(const SupportSet& other) const;

    friend bool operator==(const SupportSet& a, const SupportSet& b) = default;
};

struct LogSlopes {
    int minus = 0;  // log2 of the left derivative
    int plus = 0;   // log2 of the right derivative
};

struct MembershipFlags {
    bool in_F = false;        // stabilizes the circle point 0
    bool in_comm_FF = false;  // fixes a neighborhood of 0 pointwise
};

/// Element of Thompson's group T: an orientation-preserving PL homeomorphism
/// of R/Z with dyadic breakpoints and slopes in 2^Z, stored as the canonical
/// lift on [0,1]: breakpoints (x_i, y_i) with x_0 = 0, x_m = 1, both
/// coordinates strictly increasing, y_m = y_0 + 1 and y_0 in [0,1), no
/// interior breakpoint with equal slopes on both sides. Two values represent
/// the same element of T iff their breakpoint lists are identical, so the
/// word problem is structural equality.
class CircleHomeo {
public:
    /// Validates a raw lift (monotone, dyadic, power-of-two slopes, degree
    /// one), shifts y into the fundamental domain, and normalizes away
    /// redundant breakpoints. Throws std::invalid_argument on bad data.
    static CircleHomeo make(BreakList raw);

    static CircleHomeo identity();
    static CircleHomeo rotation(const Dyadic& d);

    const BreakList& breaks() const { return breaks_; }

    /// Evaluation of the canonical lift extended equivariantly to R
    /// (L(t + 1) = L(t) + 1).
    Dyadic lift_eval(const Dyadic& t) const;
    Rat lift_eval(const Rat& t) const;

    /// The circle map itself: value in [0,1) of the image of x mod 1.
    Dyadic eval(const Dyadic& x) const;
    Rat eval(const Rat& x) const;

    /// g(h(x)).
    static CircleHomeo compose(const CircleHomeo& g, const CircleHomeo& h);
    CircleHomeo inverse() const;

    /// Base-2 logs of the one-sided derivatives at a dyadic circle point;
    /// the left slope at 0 wraps to the final piece.
    LogSlopes log_slopes_at(const Dyadic& x) const;

    bool in_F() const { return breaks_.front().second.is_zero(); }

    /// Fixes a neighborhood of 0 pointwise (the commutator subgroup of F).
    bool in_comm_FF() const;

    MembershipFlags classify() const { return {in_F(), in_comm_FF()}; }

    /// In F with both one-sided log-slopes at 0 divisible by n; the
    /// stabilizer of the marked origin (0,0,0) for the mod-n action.
    bool in_Fn(int n) const;

    /// Pointwise fixes some neighborhood of the circle point x mod 1.
    bool fixes_neighborhood_of(const Rat& x) const;

    /// Closure of \{x : g(x) != x\}.
    SupportSet support() const;

    /// Isolated fixed points (circle points in [0,1)) interior to moved
    /// pieces; rational but not necessarily dyadic.
    std::vector<Rat> isolated_fixed_points() const;

    /// Number of affine pieces.
    size_t piece_count() const { return breaks_.size() - 1; }
    int piece_slope(size_t i) const { return slopes_[i]; }

    friend bool operator==(const CircleHomeo& a, const CircleHomeo& b) { return a.breaks_ == b.breaks_; }
    friend bool operator!=(const CircleHomeo& a, const CircleHomeo& b) { return !(a == b); }
    friend bool operator<(const CircleHomeo& a, const CircleHomeo& b);

    /// Canonical element from an arbitrary exact lift of a degree-one PL
    /// circle map: points strictly increasing in both coordinates on some
    /// fundamental domain [t0, t0+1] with t0 in [0,1), closing up by +1.
    /// Non-dyadic collinear sample points are tolerated and dropped; a
    /// genuine non-dyadic breakpoint is an error.
    static CircleHomeo from_lift_points(const std::vector<std::pair<Rat, Rat>>& pts);

private:
    CircleHomeo() = default;
    size_t piece_at(const Dyadic& u) const;  // piece with x_i <= u < x_{i+1}

    BreakList breaks_;
    std::vector<int> slopes_;  // log2 slope per piece
};

inline CircleHomeo operator*(const CircleHomeo& g, const CircleHomeo& h) { return CircleHomeo::compose(g, h); }

}  // namespace idealforge
