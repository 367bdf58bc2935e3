#include "idealforge/orbit.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealforge {

namespace {

int mod_n(long long v, int n) {
    int r = static_cast<int>(v % n);
    return r < 0 ? r + n : r;
}

}  // namespace

MarkedPoint::MarkedPoint(Dyadic x_, int i_, int j_, int n_) : x(std::move(x_)), i(i_), j(j_), n(n_) {
    if (n < 1) throw std::invalid_argument("MarkedPoint: modulus must be positive");
    if (x < Dyadic(0) || !(x < Dyadic(1))) throw std::invalid_argument("MarkedPoint: x must lie in [0,1)");
    i = mod_n(i, n);
    j = mod_n(j, n);
}

MarkedPoint act(const CircleHomeo& g, const MarkedPoint& p) {
    LogSlopes d = g.log_slopes_at(p.x);
    return MarkedPoint(g.eval(p.x), mod_n(static_cast<long long>(p.i) + d.minus, p.n),
                       mod_n(static_cast<long long>(p.j) + d.plus, p.n), p.n);
}

std::set<MarkedPoint> orbit_explore(const std::vector<CircleHomeo>& generators, const MarkedPoint& p0,
                                    int denom_exp_bound) {
    std::vector<CircleHomeo> moves;
    moves.reserve(generators.size() * 2);
    for (const auto& g : generators) {
        moves.push_back(g);
        moves.push_back(g.inverse());
    }
    std::set<MarkedPoint> seen{p0};
    std::vector<MarkedPoint> frontier{p0};
    while (!frontier.empty()) {
        std::vector<MarkedPoint> next;
        for (const auto& p : frontier) {
            for (const auto& g : moves) {
                MarkedPoint q = act(g, p);
                if (q.x.exp() > denom_exp_bound) continue;
                if (seen.insert(q).second) next.push_back(q);
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    return seen;
}

ActionSupport action_support(const CircleHomeo& g, int n) {
    if (n < 1) throw std::invalid_argument("action_support: n must be positive");
    ActionSupport s;
    s.moved_arcs = g.support();

    std::vector<Dyadic> exceptional;
    // Fixed breakpoints with slope data not congruent to (0,0).
    for (size_t i = 0; i + 1 < g.breaks().size(); ++i) {
        const Dyadic& x = g.breaks()[i].first;
        if (g.eval(x) != x) continue;
        LogSlopes d = g.log_slopes_at(x);
        if (d.minus % n != 0 || d.plus % n != 0) exceptional.push_back(x);
    }
    // Fixed dyadic points interior to pieces of slope 2^s, s != 0: both
    // one-sided slopes are s there, so they are exceptional iff n does not
    // divide s.
    for (const Rat& fx : g.isolated_fixed_points()) {
        auto dx = Dyadic::from_rat(fx);
        if (!dx) continue;
        bool is_break = false;
        for (size_t i = 0; i + 1 < g.breaks().size(); ++i)
            if (g.breaks()[i].first == *dx) is_break = true;
        if (is_break) continue;
        LogSlopes d = g.log_slopes_at(*dx);
        if (d.minus % n != 0 || d.plus % n != 0) exceptional.push_back(*dx);
    }
    std::sort(exceptional.begin(), exceptional.end());
    exceptional.erase(std::unique(exceptional.begin(), exceptional.end()), exceptional.end());
    s.exceptional_points = std::move(exceptional);
    return s;
}

bool action_moves(const CircleHomeo& g, int n, const Dyadic& x) {
    Dyadic u = x.frac();
    if (g.eval(u) != u) return true;
    LogSlopes d = g.log_slopes_at(u);
    return d.minus % n != 0 || d.plus % n != 0;
}

bool supports_disjoint_mod(const CircleHomeo& g, const CircleHomeo& h, int n) {
    if (n < 1) throw std::invalid_argument("supports_disjoint_mod: n must be positive");
    ActionSupport sg = action_support(g, n);
    ActionSupport sh = action_support(h, n);
    // Dyadics moved by both circle maps exist iff the support interiors
    // overlap: the circle-moved sets are the support interiors minus finitely
    // many fixed punctures, and a nonempty open set survives removing them.
    if (sg.moved_arcs.interiors_intersect(sh.moved_arcs)) return false;
    for (const Dyadic& x : sg.exceptional_points)
        if (action_moves(h, n, x)) return false;
    for (const Dyadic& x : sh.exceptional_points)
        if (action_moves(g, n, x)) return false;
    return true;
}

}  // namespace idealforge
