#include "idealforge/witness.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>

namespace idealforge {

namespace {

using boost::multiprecision::msb;

Dyadic min_d(const Dyadic& a, const Dyadic& b) { return a < b ? a : b; }
Dyadic max_d(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

// Binary decomposition of a positive dyadic length, largest part first.
std::vector<Dyadic> binary_parts(const Dyadic& len) {
    std::vector<Dyadic> parts;
    BigInt n = len.num();
    int e = len.exp();
    for (int t = static_cast<int>(msb(n)); t >= 0; --t)
        if (((n >> t) & 1) != 0) parts.push_back(Dyadic(BigInt(1) << t, e));
    return parts;
}

}  // namespace

Arc::Arc(Rat x, Dyadic lo, Dyadic hi) : basepoint(std::move(x)), a(std::move(lo)), b(std::move(hi)) {
    if (!(basepoint < a.to_rat()) || !(a < b) || !(b.to_rat() < basepoint + Rat(1)))
        throw std::invalid_argument("Arc: endpoints must satisfy x < a < b < x+1 in cut coordinates");
}

Arc arc_hull(const Arc& u1, const Arc& u2) {
    if (u1.basepoint != u2.basepoint) throw std::invalid_argument("arc_hull: basepoints differ");
    return Arc(u1.basepoint, min_d(u1.a, u2.a), max_d(u1.b, u2.b));
}

IntervalHomeo dyadic_interval_homeo(const Dyadic& a, const Dyadic& b, const Dyadic& c, const Dyadic& d) {
    if (!(a < b) || !(c < d)) throw std::invalid_argument("dyadic_interval_homeo: degenerate interval");
    auto src = binary_parts(b - a);
    auto dst = binary_parts(d - c);
    while (src.size() < dst.size()) {
        Dyadic half = src.front().mul_pow2(-1);
        src.front() = half;
        src.insert(src.begin(), half);
    }
    while (dst.size() < src.size()) {
        Dyadic half = dst.front().mul_pow2(-1);
        dst.front() = half;
        dst.insert(dst.begin(), half);
    }
    BreakList pts;
    pts.reserve(src.size() + 1);
    Dyadic x = a, y = c;
    pts.emplace_back(x, y);
    for (size_t i = 0; i < src.size(); ++i) {
        x = x + src[i];
        y = y + dst[i];
        pts.emplace_back(x, y);
    }
    return IntervalHomeo::make(std::move(pts));
}

CircleHomeo glue_to_circle(const Rat& basepoint, std::vector<IntervalHomeo> pieces) {
    if (pieces.empty()) return CircleHomeo::identity();
    std::sort(pieces.begin(), pieces.end(),
              [](const IntervalHomeo& p, const IntervalHomeo& q) { return p.src_lo() < q.src_lo(); });

    const Rat t0 = basepoint;
    const Rat t1 = basepoint + Rat(1);
    std::vector<std::pair<Rat, Rat>> pts;

    Rat cx = t0, cy = t0;
    if (pieces.front().src_lo().to_rat() == t0) cy = pieces.front().dst_lo().to_rat();
    pts.emplace_back(cx, cy);
    const Rat v_start = cy;

    for (const auto& piece : pieces) {
        Rat a = piece.src_lo().to_rat(), b = piece.src_hi().to_rat();
        Rat c = piece.dst_lo().to_rat(), dv = piece.dst_hi().to_rat();
        if (a < cx) throw std::invalid_argument("glue_to_circle: overlapping pieces");
        if (t1 < b) throw std::invalid_argument("glue_to_circle: piece leaves [t, t+1]");
        if (cx < a) {
            // Identity gap: only valid if we are currently on the diagonal.
            if (cy != cx) throw std::invalid_argument("glue_to_circle: endpoint mismatch at gap");
            pts.emplace_back(a, a);
            cy = a;
        }
        if (c != cy) throw std::invalid_argument("glue_to_circle: endpoint mismatch entering piece");
        for (size_t i = 1; i < piece.breaks().size(); ++i)
            pts.emplace_back(piece.breaks()[i].first.to_rat(), piece.breaks()[i].second.to_rat());
        cx = b;
        cy = dv;
    }

    if (cx < t1) {
        if (cy != cx) throw std::invalid_argument("glue_to_circle: endpoint mismatch at final gap");
        pts.emplace_back(t1, t1);
        cy = t1;
    }
    if (cy != v_start + Rat(1)) throw std::invalid_argument("glue_to_circle: degree-one condition violated");

    // Reduce the fundamental domain start into [0,1).
    BigInt k = t0.floor();
    if (k != 0) {
        Rat d(k);
        for (auto& [u, v] : pts) {
            u = u - d;
            v = v - d;
        }
    }
    return CircleHomeo::from_lift_points(pts);
}

CircleHomeo compress_witness(const Rat& x, const Arc& u1, const Arc& u2) {
    if (u1.basepoint != x || u2.basepoint != x)
        throw std::invalid_argument("compress_witness: arcs must share the basepoint");
    Dyadic y1 = dyadic_in_open_interval(x, min_d(u1.a, u2.a).to_rat());
    Dyadic y2 = dyadic_in_open_interval(max_d(u1.b, u2.b).to_rat(), x + Rat(1));
    std::vector<IntervalHomeo> pieces;
    pieces.push_back(dyadic_interval_homeo(y1, u1.a, y1, u2.a));
    pieces.push_back(dyadic_interval_homeo(u1.a, u1.b, u2.a, u2.b));
    pieces.push_back(dyadic_interval_homeo(u1.b, y2, u2.b, y2));
    return glue_to_circle(x, std::move(pieces));
}

CircleHomeo separate_witness(const Rat& x, const Arc& u1, const Arc& u2, const Arc& u3) {
    if (u1.basepoint != x || u2.basepoint != x || u3.basepoint != x)
        throw std::invalid_argument("separate_witness: arcs must share the basepoint");
    std::vector<IntervalHomeo> pieces;
    if (u2.b < u1.a) {
        // u2 < u1: push u1 to the right, past both its own right end and u3.
        Dyadic y1 = dyadic_in_open_interval(u2.b.to_rat(), u1.a.to_rat());
        Dyadic top = max_d(u1.b, u3.b);
        Dyadic y2 = dyadic_in_open_interval(top.to_rat(), x + Rat(1));
        pieces.push_back(dyadic_interval_homeo(y1, u1.a, y1, top));
        pieces.push_back(dyadic_interval_homeo(u1.a, y2, top, y2));
    } else if (u1.b < u2.a) {
        // u1 < u2: push u1 to the left, below both its own left end and u3.
        Dyadic bot = min_d(u1.a, u3.a);
        Dyadic y1 = dyadic_in_open_interval(x, bot.to_rat());
        Dyadic y2 = dyadic_in_open_interval(u1.b.to_rat(), u2.a.to_rat());
        pieces.push_back(dyadic_interval_homeo(y1, u1.b, y1, bot));
        pieces.push_back(dyadic_interval_homeo(u1.b, y2, bot, y2));
    } else {
        throw std::invalid_argument("separate_witness: closures of u1 and u2 must be disjoint");
    }
    return glue_to_circle(x, std::move(pieces));
}

Arc enclosing_arc_witness(const Rat& x, const CircleHomeo& g) {
    if (!g.fixes_neighborhood_of(x))
        throw std::invalid_argument("enclosing_arc_witness: element does not fix a neighborhood of x");
    SupportSet supp = g.support();
    Rat x0 = x - Rat(x.floor());
    if (supp.empty()) {
        Dyadic a = dyadic_in_open_interval(x0, x0 + Rat(1));
        Dyadic b = dyadic_in_open_interval(a.to_rat(), x0 + Rat(1));
        return Arc(x0, a, b);
    }
    // Lift each support arc into the cut window (x, x+1).
    bool first = true;
    Rat lo, hi;
    for (const auto& [p, q] : supp.arcs) {
        Rat shift = x0 < p ? Rat(0) : Rat(1);
        Rat ps = p + shift, qs = q + shift;
        if (!(x0 < ps) || !(qs < x0 + Rat(1)))
            throw std::logic_error("enclosing_arc_witness: support not separated from x");
        if (first || ps < lo) lo = ps;
        if (first || hi < qs) hi = qs;
        first = false;
    }
    Dyadic a = dyadic_in_open_interval(x0, lo);
    Dyadic b = dyadic_in_open_interval(hi, x0 + Rat(1));
    return Arc(x0, a, b);
}

CircleHomeo slope_window_witness(const Dyadic& a, const Dyadic& b, WindowSide side, int m) {
    if (a < Dyadic(0) || !(a < b) || Dyadic(1) < b)
        throw std::invalid_argument("slope_window_witness: window must satisfy 0 <= a < b <= 1");
    if (m < 0) throw std::invalid_argument("slope_window_witness: m must be non-negative");
    if (m == 0) return CircleHomeo::identity();
    int k = 2;
    while (!(Dyadic(BigInt(1), k) < b - a)) ++k;
    Dyadic shallow(BigInt(1), k);    // target length 2^-k
    Dyadic steep(BigInt(1), k + m);  // source length 2^-(k+m); slope 2^m
    std::vector<IntervalHomeo> pieces;
    if (side == WindowSide::right) {
        pieces.push_back(IntervalHomeo::segment(a, a + steep, a, a + shallow));
        pieces.push_back(dyadic_interval_homeo(a + steep, b, a + shallow, b));
    } else {
        pieces.push_back(dyadic_interval_homeo(a, b - steep, a, b - shallow));
        pieces.push_back(IntervalHomeo::segment(b - steep, b, b - shallow, b));
    }
    if (Dyadic(0) < a || b == Dyadic(1)) return glue_to_circle(Rat(0), std::move(pieces));
    // Window starts at 0: cut at b instead and place the window at [1, 1+b].
    for (auto& p : pieces) p = p.shifted(1);
    return glue_to_circle(b.to_rat(), std::move(pieces));
}

std::pair<CircleHomeo, CircleHomeo> thm46_pair(int m) {
    if (m < 1) throw std::invalid_argument("thm46_pair: m must be positive");
    CircleHomeo g = slope_window_witness(Dyadic(BigInt(1), 1), Dyadic(BigInt(3), 2), WindowSide::right, m);
    CircleHomeo h = slope_window_witness(Dyadic(BigInt(1), 2), Dyadic(BigInt(1), 1), WindowSide::left, m);
    return {g, h};
}

CircleHomeo embed_commFF(const CircleHomeo& g, const Dyadic& y, const Dyadic& z) {
    if (!g.in_comm_FF()) throw std::invalid_argument("embed_commFF: element must fix a neighborhood of 0");
    if (y < Dyadic(0) || !(y < z) || !(z < Dyadic(1)))
        throw std::invalid_argument("embed_commFF: window must satisfy 0 <= y < z < 1");
    if (g == CircleHomeo::identity()) return g;
    IntervalHomeo g01 = IntervalHomeo::make(g.breaks());  // g in F: lift is [0,1] -> [0,1]
    IntervalHomeo phi = dyadic_interval_homeo(Dyadic(0), Dyadic(1), z, y + Dyadic(1));
    IntervalHomeo conj = IntervalHomeo::compose(phi, IntervalHomeo::compose(g01, phi.inverse()));
    return glue_to_circle(y.to_rat(), {conj});
}

}  // namespace idealforge
