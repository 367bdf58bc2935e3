#include "idealforge/interval_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealforge {

int log2_slope(const Dyadic& dx, const Dyadic& dy) {
    if (!(Dyadic(0) < dx) || !(Dyadic(0) < dy))
        throw std::invalid_argument("log2_slope: breakpoints not strictly increasing");
    // dy/dx = (ny/nx) * 2^(ex-ey) with nx, ny odd (or exponent 0); a power of
    // two forces ny = nx.
    Rat q = dy.to_rat() / dx.to_rat();
    const BigInt &p = q.num(), &d = q.den();
    if (p == 1) {
        BigInt t = d;
        int s = 0;
        while (t > 1) {
            if ((t & 1) != 0) throw std::invalid_argument("slope is not a power of two");
            t >>= 1;
            --s;
        }
        return s;
    }
    if (d == 1) {
        BigInt t = p;
        int s = 0;
        while (t > 1) {
            if ((t & 1) != 0) throw std::invalid_argument("slope is not a power of two");
            t >>= 1;
            ++s;
        }
        return s;
    }
    throw std::invalid_argument("slope is not a power of two");
}

namespace {

// Drops interior breakpoints whose adjacent slopes agree. Assumes validated
// monotone dyadic data.
BreakList normalize_breaks(BreakList pts) {
    BreakList out;
    out.reserve(pts.size());
    out.push_back(pts.front());
    for (size_t i = 1; i + 1 < pts.size(); ++i) {
        const auto& prev = out.back();
        int sl = log2_slope(pts[i].first - prev.first, pts[i].second - prev.second);
        int sr = log2_slope(pts[i + 1].first - pts[i].first, pts[i + 1].second - pts[i].second);
        if (sl != sr) out.push_back(pts[i]);
    }
    out.push_back(pts.back());
    return out;
}

Dyadic interp(const BreakList& breaks, const Dyadic& x) {
    size_t i = 0;
    while (i + 2 < breaks.size() && !(x < breaks[i + 1].first)) ++i;
    int s = log2_slope(breaks[i + 1].first - breaks[i].first, breaks[i + 1].second - breaks[i].second);
    return breaks[i].second + (x - breaks[i].first).mul_pow2(s);
}

Rat interp(const BreakList& breaks, const Rat& x) {
    size_t i = 0;
    while (i + 2 < breaks.size() && !(x < breaks[i + 1].first.to_rat())) ++i;
    int s = log2_slope(breaks[i + 1].first - breaks[i].first, breaks[i + 1].second - breaks[i].second);
    return breaks[i].second.to_rat() + (x - breaks[i].first.to_rat()).mul_pow2(s);
}

}  // namespace

IntervalHomeo IntervalHomeo::make(BreakList raw) {
    if (raw.size() < 2) throw std::invalid_argument("IntervalHomeo: need at least two breakpoints");
    for (size_t i = 0; i + 1 < raw.size(); ++i) {
        if (!(raw[i].first < raw[i + 1].first) || !(raw[i].second < raw[i + 1].second))
            throw std::invalid_argument("IntervalHomeo: breakpoints not strictly increasing");
        log2_slope(raw[i + 1].first - raw[i].first, raw[i + 1].second - raw[i].second);
    }
    IntervalHomeo h;
    h.breaks_ = normalize_breaks(std::move(raw));
    return h;
}

IntervalHomeo IntervalHomeo::segment(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d) {
    return make({{a, c}, {b, d}});
}

Dyadic IntervalHomeo::eval(const Dyadic& x) const {
    if (x < src_lo() || src_hi() < x) throw std::invalid_argument("IntervalHomeo: point outside domain");
    return interp(breaks_, x);
}

Rat IntervalHomeo::eval(const Rat& x) const {
    if (x < src_lo().to_rat() || src_hi().to_rat() < x)
        throw std::invalid_argument("IntervalHomeo: point outside domain");
    return interp(breaks_, x);
}

IntervalHomeo IntervalHomeo::inverse() const {
    BreakList swapped;
    swapped.reserve(breaks_.size());
    for (const auto& [x, y] : breaks_) swapped.emplace_back(y, x);
    return make(std::move(swapped));
}

IntervalHomeo IntervalHomeo::shifted(const BigInt& k) const {
    BreakList out;
    out.reserve(breaks_.size());
    Dyadic d(k);
    for (const auto& [x, y] : breaks_) out.emplace_back(x + d, y + d);
    return make(std::move(out));
}

IntervalHomeo IntervalHomeo::compose(const IntervalHomeo& f, const IntervalHomeo& g) {
    if (g.dst_lo() != f.src_lo() || g.dst_hi() != f.src_hi())
        throw std::invalid_argument("IntervalHomeo::compose: range(g) != domain(f)");
    std::vector<Dyadic> xs;
    for (const auto& [x, y] : g.breaks_) xs.push_back(x);
    IntervalHomeo ginv = g.inverse();
    for (const auto& [u, v] : f.breaks_) xs.push_back(ginv.eval(u));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    BreakList pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.emplace_back(x, f.eval(g.eval(x)));
    return make(std::move(pts));
}

}  // namespace idealforge
