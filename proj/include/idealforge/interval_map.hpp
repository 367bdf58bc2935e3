#pragma once

#include "idealforge/dyadic.hpp"
#include "idealforge/rational.hpp"

#include <utility>
#include <vector>

namespace idealforge {

using BreakList = std::vector<std::pair<Dyadic, Dyadic>>;

/// log2 of (dy/dx) when the quotient is an exact power of two; throws
/// std::invalid_argument otherwise. Requires dx > 0, dy > 0.
int log2_slope(const Dyadic& dx, const Dyadic& dy);

/// Increasing piecewise-linear bijection between two closed intervals with
/// dyadic breakpoints and slopes in 2^Z. Stored as a normalized breakpoint
/// graph: strictly increasing in both coordinates, no interior breakpoint
/// whose adjacent slopes agree.
class IntervalHomeo {
public:
    /// Validates and normalizes a raw breakpoint list.
    static IntervalHomeo make(BreakList raw);

    static IntervalHomeo segment(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d);

    const BreakList& breaks() const { return breaks_; }
    const Dyadic& src_lo() const { return breaks_.front().first; }
    const Dyadic& src_hi() const { return breaks_.back().first; }
    const Dyadic& dst_lo() const { return breaks_.front().second; }
    const Dyadic& dst_hi() const { return breaks_.back().second; }

    Dyadic eval(const Dyadic& x) const;
    Rat eval(const Rat& x) const;

    /// Graph transpose; the inverse bijection.
    IntervalHomeo inverse() const;

    /// Translate both coordinates by an integer.
    IntervalHomeo shifted(const BigInt& k) const;

    /// f(g(x)); requires range(g) = domain(f).
    static IntervalHomeo compose(const IntervalHomeo& f, const IntervalHomeo& g);

    friend bool operator==(const IntervalHomeo& a, const IntervalHomeo& b) { return a.breaks_ == b.breaks_; }
    friend bool operator!=(const IntervalHomeo& a, const IntervalHomeo& b) { return !(a == b); }

private:
    IntervalHomeo() = default;
    BreakList breaks_;
};

}  // namespace idealforge
