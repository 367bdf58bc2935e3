#include "idealforge/dyadic.hpp"
#include "idealforge/rational.hpp"

#include <doctest.h>

#include <random>

using namespace idealforge;

TEST_CASE("dyadic normalization") {
    CHECK(dyadic_normalize(6, 3) == Dyadic(BigInt(3), 2));
    CHECK(dyadic_normalize(0, 5) == Dyadic(BigInt(0), 0));
    CHECK(dyadic_normalize(5, 0) == Dyadic(BigInt(5), 0));
    CHECK(dyadic_normalize(-6, 3) == Dyadic(BigInt(-3), 2));
    CHECK_THROWS_AS(Dyadic(BigInt(1), -1), std::domain_error);
}

TEST_CASE("dyadic normalization is idempotent and value-preserving on random input") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long long> nums(-1000000, 1000000);
    std::uniform_int_distribution<int> exps(0, 40);
    for (int t = 0; t < 500; ++t) {
        long long n = nums(rng);
        int e = exps(rng);
        Dyadic d(BigInt(n), e);
        CHECK(Dyadic(d.num(), d.exp()) == d);
        // Cross-multiplication value check: n / 2^e == d.num / 2^d.exp.
        CHECK(BigInt(n) * (BigInt(1) << d.exp()) == d.num() * (BigInt(1) << e));
        CHECK((d.exp() == 0 || (d.num() & 1) != 0));
    }
}

TEST_CASE("dyadic arithmetic and comparisons") {
    Dyadic half(BigInt(1), 1), quarter(BigInt(1), 2);
    CHECK(half + quarter == Dyadic(BigInt(3), 2));
    CHECK(half - quarter == quarter);
    CHECK(half * half == quarter);
    CHECK(quarter < half);
    CHECK(half.mul_pow2(1) == Dyadic(1));
    CHECK(half.mul_pow2(-2) == Dyadic(BigInt(1), 3));
    CHECK(Dyadic(BigInt(-5), 2).floor() == -2);
    CHECK(Dyadic(BigInt(5), 2).floor() == 1);
    CHECK(Dyadic(BigInt(5), 2).frac() == Dyadic(BigInt(1), 2));
}

TEST_CASE("rational arithmetic examples") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(3, 4) * Rat(4, 3) == Rat(1));
    CHECK(Rat(1, 3) < Rat(3, 8));
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rat(0).inverse(), std::domain_error);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(7, 2).floor() == 3);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> vals(-50, 50);
    auto rnd = [&]() {
        long long d = 0;
        while (d == 0) d = vals(rng);
        return Rat(vals(rng), d);
    };
    for (int t = 0; t < 300; ++t) {
        Rat a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rat(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rat(1));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("dyadic_in_open_interval tie-break") {
    CHECK(dyadic_in_open_interval(Rat(0), Rat(1)) == Dyadic(BigInt(1), 1));
    CHECK(dyadic_in_open_interval(Rat(1, 3), Rat(1, 2)) == Dyadic(BigInt(3), 3));
    CHECK(dyadic_in_open_interval(Rat(3, 4), Rat(1)) == Dyadic(BigInt(7), 3));
    CHECK(dyadic_in_open_interval(Rat(-1), Rat(1)) == Dyadic(0));
    CHECK_THROWS_AS(dyadic_in_open_interval(Rat(1), Rat(1)), std::invalid_argument);
}

TEST_CASE("dyadic_in_open_interval is interior and deterministic on random intervals") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> vals(-300, 300);
    for (int t = 0; t < 500; ++t) {
        long long d1 = 0, d2 = 0;
        while (d1 == 0) d1 = vals(rng);
        while (d2 == 0) d2 = vals(rng);
        Rat lo(vals(rng), d1), hi(vals(rng), d2);
        if (!(lo < hi)) continue;
        Dyadic d = dyadic_in_open_interval(lo, hi);
        CHECK(lo < d.to_rat());
        CHECK(d.to_rat() < hi);
        CHECK(dyadic_in_open_interval(lo, hi) == d);
    }
}

TEST_CASE("text forms round-trip") {
    CHECK(Dyadic(BigInt(3), 2).str() == "3/2^2");
    CHECK(Dyadic(BigInt(5), 0).str() == "5");
    CHECK(Dyadic(BigInt(0), 0).str() == "0");
    CHECK(Dyadic::parse("3/2^2") == Dyadic(BigInt(3), 2));
    CHECK(Dyadic::parse("1/2") == Dyadic(BigInt(1), 1));
    CHECK(Dyadic::parse("-7/2^3") == Dyadic(BigInt(-7), 3));
    CHECK(Dyadic::parse("4") == Dyadic(4));
    CHECK(!Dyadic::parse("1/3"));
    CHECK(!Dyadic::parse("x"));
    CHECK(Rat(5, 3).str() == "5/3");
    CHECK(Rat(5).str() == "5");
    CHECK(Rat::parse("-5/3") == Rat(-5, 3));
    CHECK(Rat::parse("3/2^2") == Rat(3, 4));
    CHECK(!Rat::parse("1/0"));
    CHECK(!Rat::parse(""));
}
