#include "idealforge/circle_map.hpp"
#include "idealforge/generators.hpp"
#include "idealforge/suites.hpp"

#include <doctest.h>

#include <random>

using namespace idealforge;

namespace {

Dyadic d(long long n, int e) { return Dyadic(BigInt(n), e); }

}  // namespace

TEST_CASE("make validates and normalizes") {
    CHECK(CircleHomeo::make({{d(0, 0), d(0, 0)}, {d(1, 1), d(1, 1)}, {d(1, 0), d(1, 0)}}) == CircleHomeo::identity());
    CHECK(CircleHomeo::rotation(d(1, 1)).breaks().size() == 2);
    // y shifted into [0,1)
    CHECK(CircleHomeo::make({{d(0, 0), d(3, 1)}, {d(1, 0), d(5, 1)}}) == CircleHomeo::rotation(d(1, 1)));
    CHECK_THROWS_AS(CircleHomeo::make({{d(0, 0), d(0, 0)}, {d(1, 0), d(2, 0)}}), std::invalid_argument);  // degree 2
    CHECK_THROWS_AS(CircleHomeo::make({{d(0, 0), d(0, 0)}, {d(1, 1), d(2, 3)}, {d(1, 0), d(1, 0)}}),
                    std::invalid_argument);  // slope 3/4
    CHECK_THROWS_AS(CircleHomeo::make({{d(1, 2), d(0, 0)}, {d(1, 0), d(1, 0)}}), std::invalid_argument);
    CHECK_THROWS_AS(CircleHomeo::make({{d(0, 0), d(1, 1)}, {d(1, 1), d(1, 2)}, {d(1, 0), d(3, 1)}}),
                    std::invalid_argument);  // y not increasing
}

TEST_CASE("generator A matches its defining data") {
    const CircleHomeo& A = gen_A();
    CHECK(A.breaks() == BreakList{{d(0, 0), d(0, 0)}, {d(1, 1), d(1, 2)}, {d(3, 2), d(1, 1)}, {d(1, 0), d(1, 0)}});
    CHECK(A.eval(d(1, 1)) == d(1, 2));
    CHECK(A.eval(Rat(1, 3)) == Rat(1, 6));
    CHECK(CircleHomeo::identity().eval(Rat(1, 3)) == Rat(1, 3));
    CHECK(CircleHomeo::rotation(d(1, 1)).eval(d(1, 2)) == d(3, 2));
    CHECK(A.inverse().breaks() ==
          BreakList{{d(0, 0), d(0, 0)}, {d(1, 2), d(1, 1)}, {d(1, 1), d(3, 2)}, {d(1, 0), d(1, 0)}});
}

TEST_CASE("compose basics") {
    const CircleHomeo& A = gen_A();
    CHECK(A * CircleHomeo::identity() == A);
    CHECK(CircleHomeo::identity() * A == A);
    CHECK(A * A.inverse() == CircleHomeo::identity());
    CHECK(A.inverse() * A == CircleHomeo::identity());
    CHECK(CircleHomeo::rotation(d(1, 2)) * CircleHomeo::rotation(d(1, 2)) == CircleHomeo::rotation(d(1, 1)));
    CHECK(CircleHomeo::rotation(d(3, 2)) * CircleHomeo::rotation(d(3, 2)) == CircleHomeo::rotation(d(1, 1)));
    CHECK(gen_C() * (gen_C() * gen_C()) == CircleHomeo::identity());
}

TEST_CASE("group axioms on random words") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        CircleHomeo g = random_word(rng, generators_T(), 8);
        CircleHomeo h = random_word(rng, generators_T(), 8);
        CircleHomeo k = random_word(rng, generators_T(), 8);
        CHECK((g * h) * k == g * (h * k));
        CHECK(g * g.inverse() == CircleHomeo::identity());
        CHECK(g.inverse().inverse() == g);
        CHECK((g * h).inverse() == h.inverse() * g.inverse());
    }
}

TEST_CASE("evaluation is a circle bijection on random words and points") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 40; ++t) {
        CircleHomeo g = random_word(rng, generators_T(), 8);
        Dyadic x = random_dyadic(rng, 8);
        CHECK(g.inverse().eval(g.eval(x)) == x);
        Rat q(BigInt(t % 7), BigInt(7));
        CHECK(g.inverse().eval(g.eval(q)) == q);
        // lift equivariance
        CHECK(g.lift_eval(x + Dyadic(1)) == g.lift_eval(x) + Dyadic(1));
    }
}

TEST_CASE("one-sided log slopes") {
    const CircleHomeo& A = gen_A();
    LogSlopes at0 = A.log_slopes_at(d(0, 0));
    CHECK(at0.minus == 1);
    CHECK(at0.plus == -1);
    LogSlopes mid = A.log_slopes_at(d(1, 1));
    CHECK(mid.minus == -1);
    CHECK(mid.plus == 0);
    LogSlopes interior = A.log_slopes_at(d(1, 2));
    CHECK(interior.minus == -1);
    CHECK(interior.plus == -1);
    LogSlopes rot = CircleHomeo::rotation(d(1, 1)).log_slopes_at(d(1, 2));
    CHECK(rot.minus == 0);
    CHECK(rot.plus == 0);
    CHECK(CircleHomeo::identity().log_slopes_at(d(3, 3)).plus == 0);
}

TEST_CASE("classification flags") {
    CHECK(CircleHomeo::identity().classify().in_F);
    CHECK(CircleHomeo::identity().classify().in_comm_FF);
    CHECK(gen_A().classify().in_F);
    CHECK(!gen_A().classify().in_comm_FF);
    CHECK(!CircleHomeo::rotation(d(1, 1)).classify().in_F);
    CHECK(gen_B().classify().in_F);
    // B has slope 2 on its final piece, so it does not fix a neighborhood of 0.
    CHECK(!gen_B().classify().in_comm_FF);
    CHECK(gen_A().in_Fn(1));
    CHECK(!gen_A().in_Fn(2));
    CHECK(CircleHomeo::identity().in_Fn(5));
    CHECK_THROWS_AS(gen_A().in_Fn(0), std::invalid_argument);
}

TEST_CASE("in_comm_FF implies in_Fn for every n") {
    std::mt19937_64 rng(8);
    auto comm = [](const CircleHomeo& u, const CircleHomeo& v) {
        return u * (v * (u.inverse() * v.inverse()));
    };
    for (int t = 0; t < 30; ++t) {
        CircleHomeo u = random_word(rng, generators_F(), 6);
        CircleHomeo v = random_word(rng, generators_F(), 6);
        CircleHomeo c = comm(u, v);
        if (!c.in_comm_FF()) continue;
        for (int n = 1; n <= 8; ++n) CHECK(c.in_Fn(n));
    }
}

TEST_CASE("fixes_neighborhood_of") {
    CHECK(CircleHomeo::identity().fixes_neighborhood_of(Rat(1, 3)));
    CHECK(CircleHomeo::identity().fixes_neighborhood_of(Rat(0)));
    CHECK(!gen_A().fixes_neighborhood_of(Rat(1, 3)));
    CHECK(!gen_A().fixes_neighborhood_of(Rat(0)));   // A fixes 0 but not a neighborhood
    CHECK(gen_B().fixes_neighborhood_of(Rat(1, 4)));  // B is the identity on [0,1/2]
    CHECK(!gen_B().fixes_neighborhood_of(Rat(1, 2)));
    CHECK(!gen_B().fixes_neighborhood_of(Rat(0)));    // wraps into the slope-2 piece
}

TEST_CASE("support computation") {
    CHECK(CircleHomeo::identity().support().empty());
    CHECK(CircleHomeo::rotation(d(1, 1)).support().whole_circle);
    CHECK(gen_A().support().whole_circle);  // only fixed point 0 is a limit of moved points
    SupportSet sb = gen_B().support();
    REQUIRE(sb.arcs.size() == 1);
    CHECK(sb.arcs[0].first == Rat(1, 2));
    CHECK(sb.arcs[0].second == Rat(1));
    CHECK(sb.contains(Rat(3, 4)));
    CHECK(sb.contains(Rat(0)));  // closed at the wrap endpoint 1 ~ 0
    CHECK(!sb.contains(Rat(1, 4)));
    CHECK(sb.meets_open_arc(Rat(3, 4), Rat(7, 8)));
    CHECK(!sb.meets_open_arc(Rat(1, 8), Rat(1, 4)));
}

TEST_CASE("support of products is contained in the union") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        CircleHomeo g = random_word(rng, generators_T(), 6);
        CircleHomeo h = random_word(rng, generators_T(), 6);
        SupportSet sg = g.support(), sh = h.support(), sgh = (g * h).support();
        if (sg.whole_circle || sh.whole_circle) continue;
        // Every point moved by gh is moved by g or h; check arc endpoints and midpoints.
        for (const auto& [p, q] : sgh.arcs) {
            Rat mid = (p + q).mul_pow2(-1);
            for (const Rat& x : {p, q, mid}) {
                bool in_union = sg.contains(x) || sh.contains(x);
                CHECK(in_union);
            }
        }
    }
}

TEST_CASE("isolated fixed points, including non-breakpoint dyadic ones") {
    // Slope 2 across [3/8,5/8], crossing the diagonal at 1/2, which is not a
    // breakpoint of the map.
    CircleHomeo w = CircleHomeo::make({{d(0, 0), d(0, 0)},
                                       {d(1, 2), d(1, 3)},
                                       {d(3, 3), d(1, 2)},
                                       {d(5, 3), d(3, 2)},
                                       {d(7, 3), d(7, 3)},
                                       {d(1, 0), d(1, 0)}});
    CHECK(w.eval(d(1, 1)) == d(1, 1));
    auto fixed = w.isolated_fixed_points();
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0] == Rat(1, 2));
    LogSlopes ls = w.log_slopes_at(d(1, 1));
    CHECK(ls.minus == 1);
    CHECK(ls.plus == 1);
}
