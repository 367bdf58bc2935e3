#include "idealforge/circle_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealforge {

namespace {

const Dyadic kZero(0);
const Dyadic kOne(1);

// Open-interval overlap of [p,q] (closed) with (a,b), both on the real line.
bool closed_meets_open(const Rat& p, const Rat& q, const Rat& a, const Rat& b) {
    return p < b && a < q;
}

bool open_meets_open(const Rat& p, const Rat& q, const Rat& a, const Rat& b) {
    return p < b && a < q && p < q && a < b;
}

}  // namespace

bool SupportSet::contains(const Rat& x) const {
    if (whole_circle) return true;
    Rat u = x - Rat(x.floor());
    for (const auto& [p, q] : arcs) {
        if (!(u < p) && !(q < u)) return true;
        Rat u1 = u + Rat(1);
        if (!(u1 < p) && !(q < u1)) return true;
    }
    return false;
}

bool SupportSet::meets_open_arc(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi)) return false;
    if (whole_circle) return true;
    Rat shift(lo.floor());
    Rat a = lo - shift, b = hi - shift;  // a in [0,1), b in (a, a+1]
    for (const auto& [p, q] : arcs) {
        for (int k = -1; k <= 1; ++k) {
            Rat d(k);
            if (closed_meets_open(p + d, q + d, a, b)) return true;
        }
    }
    return false;
}

bool SupportSet::interiors_intersect(const SupportSet& other) const {
    if (empty() || other.empty()) return false;
    if (whole_circle || other.whole_circle) return true;
    for (const auto& [p, q] : arcs) {
        for (const auto& [r, s] : other.arcs) {
            for (int k = -1; k <= 1; ++k) {
                Rat d(k);
                if (open_meets_open(p + d, q + d, r, s)) return true;
            }
        }
    }
    return false;
}

CircleHomeo CircleHomeo::make(BreakList raw) {
    if (raw.size() < 2) throw std::invalid_argument("CircleHomeo: need at least two breakpoints");
    if (raw.front().first != kZero || raw.back().first != kOne)
        throw std::invalid_argument("CircleHomeo: lift domain must be [0,1]");
    for (size_t i = 0; i + 1 < raw.size(); ++i)
        if (!(raw[i].first < raw[i + 1].first) || !(raw[i].second < raw[i + 1].second))
            throw std::invalid_argument("CircleHomeo: breakpoints not strictly increasing");
    if (raw.back().second - raw.front().second != kOne)
        throw std::invalid_argument("CircleHomeo: degree-one condition violated (y_m != y_0 + 1)");

    // Shift the lift so y_0 lands in the fundamental domain [0,1).
    BigInt k = raw.front().second.floor();
    if (k != 0) {
        Dyadic d(k);
        for (auto& [x, y] : raw) y = y - d;
    }

    std::vector<int> slopes(raw.size() - 1);
    for (size_t i = 0; i + 1 < raw.size(); ++i)
        slopes[i] = log2_slope(raw[i + 1].first - raw[i].first, raw[i + 1].second - raw[i].second);

    // An interior breakpoint with equal slopes on both sides is not a
    // breakpoint of the map; equal-slope runs collapse transitively.
    CircleHomeo g;
    g.breaks_.push_back(raw.front());
    for (size_t i = 1; i + 1 < raw.size(); ++i)
        if (slopes[i - 1] != slopes[i]) g.breaks_.push_back(raw[i]);
    g.breaks_.push_back(raw.back());
    g.slopes_.resize(g.breaks_.size() - 1);
    for (size_t i = 0; i + 1 < g.breaks_.size(); ++i)
        g.slopes_[i] =
            log2_slope(g.breaks_[i + 1].first - g.breaks_[i].first, g.breaks_[i + 1].second - g.breaks_[i].second);
    return g;
}

CircleHomeo CircleHomeo::identity() { return make({{kZero, kZero}, {kOne, kOne}}); }

CircleHomeo CircleHomeo::rotation(const Dyadic& d) { return make({{kZero, d}, {kOne, d + kOne}}); }

size_t CircleHomeo::piece_at(const Dyadic& u) const {
    size_t i = 0;
    while (i + 2 < breaks_.size() && !(u < breaks_[i + 1].first)) ++i;
    return i;
}

Dyadic CircleHomeo::lift_eval(const Dyadic& t) const {
    BigInt k = t.floor();
    Dyadic u = t - Dyadic(k);
    size_t i = piece_at(u);
    Dyadic v = breaks_[i].second + (u - breaks_[i].first).mul_pow2(slopes_[i]);
    return v + Dyadic(k);
}

Rat CircleHomeo::lift_eval(const Rat& t) const {
    BigInt k = t.floor();
    Rat u = t - Rat(k);
    size_t i = 0;
    while (i + 2 < breaks_.size() && !(u < breaks_[i + 1].first.to_rat())) ++i;
    Rat v = breaks_[i].second.to_rat() + (u - breaks_[i].first.to_rat()).mul_pow2(slopes_[i]);
    return v + Rat(k);
}

Dyadic CircleHomeo::eval(const Dyadic& x) const {
    Dyadic v = lift_eval(x);
    return v - Dyadic(v.floor());
}

Rat CircleHomeo::eval(const Rat& x) const {
    Rat v = lift_eval(x);
    return v - Rat(v.floor());
}

CircleHomeo CircleHomeo::compose(const CircleHomeo& g, const CircleHomeo& h) {
    // Breakpoints of g∘h sit at breakpoints of h and at h-preimages of
    // breakpoints of g; sampling the composed lift there is exact.
    std::vector<Dyadic> xs;
    for (const auto& [x, y] : h.breaks_) xs.push_back(x);
    CircleHomeo hinv = h.inverse();
    for (const auto& [u, v] : g.breaks_)
        if (u < kOne) xs.push_back(hinv.eval(u));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    BreakList pts;
    pts.reserve(xs.size());
    for (const auto& x : xs) pts.emplace_back(x, g.lift_eval(h.lift_eval(x)));
    return make(std::move(pts));
}

CircleHomeo CircleHomeo::inverse() const {
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(breaks_.size());
    for (const auto& [x, y] : breaks_) pts.emplace_back(y.to_rat(), x.to_rat());
    return from_lift_points(pts);
}

CircleHomeo CircleHomeo::from_lift_points(const std::vector<std::pair<Rat, Rat>>& pts) {
    if (pts.size() < 2) throw std::invalid_argument("from_lift_points: need at least two points");
    const Rat t0 = pts.front().first;
    if (t0 < Rat(0) || !(t0 < Rat(1))) throw std::invalid_argument("from_lift_points: t0 must lie in [0,1)");
    if (pts.back().first - t0 != Rat(1) || pts.back().second - pts.front().second != Rat(1))
        throw std::invalid_argument("from_lift_points: not a degree-one fundamental domain");
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (!(pts[i].first < pts[i + 1].first) || !(pts[i].second < pts[i + 1].second))
            throw std::invalid_argument("from_lift_points: not strictly increasing");

    // Value of the PL graph at t (t inside [t0, t0+1]).
    auto graph_at = [&pts](const Rat& t) -> Rat {
        size_t i = 0;
        while (i + 2 < pts.size() && !(t < pts[i + 1].first)) ++i;
        Rat dx = pts[i + 1].first - pts[i].first;
        Rat dy = pts[i + 1].second - pts[i].second;
        return pts[i].second + (t - pts[i].first) * dy / dx;
    };

    std::vector<std::pair<Rat, Rat>> cand;
    for (const auto& [t, s] : pts) {
        if (!(Rat(1) < t)) cand.emplace_back(t, s);
        if (!(t < Rat(1))) cand.emplace_back(t - Rat(1), s - Rat(1));
    }
    Rat v1 = graph_at(Rat(1));
    cand.emplace_back(Rat(1), v1);
    cand.emplace_back(Rat(0), v1 - Rat(1));
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Rat, Rat>> uniq;
    for (const auto& p : cand) {
        if (!uniq.empty() && uniq.back().first == p.first) {
            if (uniq.back().second != p.second)
                throw std::invalid_argument("from_lift_points: inconsistent duplicate point");
            continue;
        }
        uniq.push_back(p);
    }

    // Drop collinear interior samples (these may be non-dyadic; true
    // breakpoints may not be).
    std::vector<std::pair<Rat, Rat>> slim;
    slim.push_back(uniq.front());
    for (size_t i = 1; i + 1 < uniq.size(); ++i) {
        const auto& a = slim.back();
        const auto& b = uniq[i];
        const auto& c = uniq[i + 1];
        if ((b.second - a.second) * (c.first - b.first) == (c.second - b.second) * (b.first - a.first)) continue;
        slim.push_back(b);
    }
    slim.push_back(uniq.back());

    BreakList out;
    out.reserve(slim.size());
    for (const auto& [t, s] : slim) {
        auto dt = Dyadic::from_rat(t);
        auto ds = Dyadic::from_rat(s);
        if (!dt || !ds) throw std::invalid_argument("from_lift_points: non-dyadic breakpoint");
        out.emplace_back(*dt, *ds);
    }
    return make(std::move(out));
}

LogSlopes CircleHomeo::log_slopes_at(const Dyadic& x) const {
    Dyadic u = x.frac();
    size_t right = piece_at(u);
    int plus = slopes_[right];
    int minus;
    if (u == breaks_[right].first)
        minus = right == 0 ? slopes_.back() : slopes_[right - 1];
    else
        minus = plus;
    return {minus, plus};
}

bool CircleHomeo::in_comm_FF() const { return in_F() && slopes_.front() == 0 && slopes_.back() == 0; }

bool CircleHomeo::in_Fn(int n) const {
    if (n < 1) throw std::invalid_argument("in_Fn: n must be positive");
    if (!in_F()) return false;
    LogSlopes d = log_slopes_at(kZero);
    return d.minus % n == 0 && d.plus % n == 0;
}

namespace {

// An affine lift piece y = x + c is the identity on the circle iff c is an integer.
bool identity_piece(const CircleHomeo& g, size_t i) {
    if (g.piece_slope(i) != 0) return false;
    return (g.breaks()[i].second - g.breaks()[i].first).is_integer();
}

}  // namespace

bool CircleHomeo::fixes_neighborhood_of(const Rat& x) const {
    Rat u = x - Rat(x.floor());
    auto du = Dyadic::from_rat(u);
    if (du) {
        for (size_t i = 0; i < breaks_.size() - 1; ++i) {
            if (breaks_[i].first == *du) {
                size_t left = i == 0 ? slopes_.size() - 1 : i - 1;
                return identity_piece(*this, i) && identity_piece(*this, left);
            }
        }
    }
    size_t i = 0;
    while (i + 2 < breaks_.size() && !(u < breaks_[i + 1].first.to_rat())) ++i;
    return identity_piece(*this, i);
}

SupportSet CircleHomeo::support() const {
    // Per piece: slope-1 pieces with integer offset are pointwise fixed;
    // every other piece has a dense moved set, so its closure is the whole
    // piece. Support arcs therefore have dyadic breakpoint endpoints, but the
    // type carries Rat per contract.
    std::vector<std::pair<Rat, Rat>> segs;
    for (size_t i = 0; i < slopes_.size(); ++i) {
        if (identity_piece(*this, i)) continue;
        Rat a = breaks_[i].first.to_rat();
        Rat b = breaks_[i + 1].first.to_rat();
        if (!segs.empty() && segs.back().second == a)
            segs.back().second = b;
        else
            segs.emplace_back(a, b);
    }
    SupportSet s;
    if (segs.empty()) return s;
    if (segs.size() == 1 && segs[0].first == Rat(0) && segs[0].second == Rat(1)) {
        s.whole_circle = true;
        return s;
    }
    // Merge across the wrap point 0 ~ 1.
    if (segs.size() >= 2 && segs.front().first == Rat(0) && segs.back().second == Rat(1)) {
        segs.back().second = segs.front().second + Rat(1);
        segs.erase(segs.begin());
    }
    s.arcs = std::move(segs);
    return s;
}

std::vector<Rat> CircleHomeo::isolated_fixed_points() const {
    std::vector<Rat> out;
    for (size_t i = 0; i < slopes_.size(); ++i) {
        int sl = slopes_[i];
        if (sl == 0) continue;
        // Fixed points of the lift piece modulo 1: (2^s - 1)(x - x_i) + (y_i - x_i) = k.
        Rat xi = breaks_[i].first.to_rat();
        Rat c = breaks_[i].second.to_rat() - xi;
        Rat denom = Rat(1).mul_pow2(sl) - Rat(1);
        for (int k = 0; k <= 1; ++k) {
            Rat x = xi + (Rat(k) - c) / denom;
            if (xi < x && x < breaks_[i + 1].first.to_rat()) out.push_back(x - Rat(x.floor()));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool operator<(const CircleHomeo& a, const CircleHomeo& b) {
    return std::lexicographical_compare(a.breaks().begin(), a.breaks().end(), b.breaks().begin(), b.breaks().end(),
                                        [](const auto& p, const auto& q) {
                                            if (p.first != q.first) return p.first < q.first;
                                            return p.second < q.second;
                                        });
}

}  // namespace idealforge
