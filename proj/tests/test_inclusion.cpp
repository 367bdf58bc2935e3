#include "idealforge/inclusion.hpp"
#include "idealforge/oracle.hpp"
#include "idealforge/serialize.hpp"

#include <doctest.h>

#include "char_oracle.hpp"

#include <cmath>

using namespace idealforge;

TEST_CASE("validate_instance accepts the catalog and rejects bad data") {
    CHECK(builtin_catalog().size() == 6);
    CHECK_THROWS_AS(validate_instance({"bad", {{"a", 1}, {"b", 1}}, {{"B", 3}}, {{1, 1}}, {}}),
                    std::invalid_argument);  // 1 + 1 != 3
    CHECK_THROWS_AS(validate_instance({"zrow", {{"a", 1}}, {{"B", 1}}, {{0}}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_instance({"zcol", {{"a", 1}, {"b", 1}}, {{"B", 1}}, {{1, 0}}, {}}),
                    std::invalid_argument);  // b never appears
    CHECK_THROWS_AS(validate_instance({"act", {{"a", 1}, {"b", 2}}, {{"B", 3}}, {{1, 1}}, {{1, 0}}}),
                    std::invalid_argument);  // action does not preserve dimensions
    CHECK_THROWS_AS(validate_instance({"perm", {{"a", 1}, {"b", 1}}, {{"B", 2}}, {{1, 1}}, {{0, 0}}}),
                    std::invalid_argument);  // not a permutation
    CHECK_THROWS_AS(builtin_instance("nope"), std::invalid_argument);
}

TEST_CASE("multiplicity matrices match brute-force character restriction") {
    using namespace char_oracle;
    const Cx I(0, 1);

    {  // Z4 > Z2: encode k in Z4 as the permutation i -> i+k mod 4.
        auto rot = [](int k) {
            Perm p(4);
            for (int i = 0; i < 4; ++i) p[i] = (i + k) % 4;
            return p;
        };
        auto power = [&](const Perm& p) { return p[0]; };  // p = rot(p[0])
        std::vector<std::function<Cx(const Perm&)>> chiG, chiH;
        for (int k = 0; k < 4; ++k)
            chiG.push_back([k, power](const Perm& p) { return std::polar(1.0, 2 * M_PI * k * power(p) / 4.0); });
        chiH.push_back([](const Perm&) { return Cx(1); });
        chiH.push_back([power](const Perm& p) { return Cx(power(p) == 0 ? 1 : -1); });
        auto M = restriction_multiplicities({rot(0), rot(2)}, chiG, chiH);
        CHECK(M == builtin_instance("z4_z2").M);
    }

    {  // S3 > Z2 = <(01)>
        std::vector<std::function<Cx(const Perm&)>> chiG = {
            [](const Perm&) { return Cx(1); },
            [](const Perm& p) { return Cx(sign_of(p)); },
            [](const Perm& p) { return Cx(fixed_points(p) - 1); },
        };
        std::vector<std::function<Cx(const Perm&)>> chiH = {
            [](const Perm&) { return Cx(1); },
            [](const Perm& p) { return Cx(sign_of(p)); },
        };
        auto M = restriction_multiplicities({{0, 1, 2}, {1, 0, 2}}, chiG, chiH);
        CHECK(M == builtin_instance("s3_z2").M);
    }

    {  // S3 > Z3 = <(012)>; chi_a(sigma^m) = omega^(a m)
        Perm e{0, 1, 2}, s{1, 2, 0}, s2{2, 0, 1};
        auto power = [&](const Perm& p) { return p[0] == 0 ? 0 : (p[0] == 1 ? 1 : 2); };
        std::vector<std::function<Cx(const Perm&)>> chiG = {
            [](const Perm&) { return Cx(1); },
            [](const Perm& p) { return Cx(sign_of(p)); },
            [](const Perm& p) { return Cx(fixed_points(p) - 1); },
        };
        std::vector<std::function<Cx(const Perm&)>> chiH;
        for (int a = 0; a < 3; ++a)
            chiH.push_back([a, power](const Perm& p) { return std::polar(1.0, 2 * M_PI * a * power(p) / 3.0); });
        auto M = restriction_multiplicities({e, s, s2}, chiG, chiH);
        CHECK(M == builtin_instance("s3_z3").M);
    }

    {  // S4 > S3 (permutations of {0,1,2,3} fixing 3)
        auto two_dim = [](const Perm& p) {
            auto t = cycle_type(p);
            if (t == std::vector<int>{1, 1, 1, 1}) return Cx(2);
            if (t == std::vector<int>{2, 1, 1}) return Cx(0);
            if (t == std::vector<int>{2, 2}) return Cx(2);
            if (t == std::vector<int>{3, 1}) return Cx(-1);
            return Cx(0);  // 4-cycle
        };
        std::vector<std::function<Cx(const Perm&)>> chiG = {
            [](const Perm&) { return Cx(1); },
            [](const Perm& p) { return Cx(sign_of(p)); },
            two_dim,
            [](const Perm& p) { return Cx(fixed_points(p) - 1); },
            [](const Perm& p) { return Cx((fixed_points(p) - 1) * sign_of(p)); },
        };
        std::vector<std::function<Cx(const Perm&)>> chiH = {
            [](const Perm&) { return Cx(1); },
            [](const Perm& p) { return Cx(sign_of(p)); },
            [](const Perm& p) { return Cx(fixed_points(p) - 2); },  // std of S3 on 4 letters: fixes 3
        };
        std::vector<Perm> H;
        for (const Perm& p : symmetric_group(4))
            if (p[3] == 3) H.push_back(p);
        REQUIRE(H.size() == 6);
        auto M = restriction_multiplicities(H, chiG, chiH);
        CHECK(M == builtin_instance("s4_s3").M);
    }
}

TEST_CASE("coind and ind rules on catalog examples") {
    const auto& s3z3 = builtin_instance("s3_z3");
    CHECK(coind_ideal(s3z3, {AlgebraSide::B, 0b100}).mask == 0b110);
    CHECK(coind_ideal(s3z3, {AlgebraSide::B, 0}).mask == 0);
    for (const auto& inst : builtin_catalog()) {
        uint32_t allB = (1u << inst.nB()) - 1, allA = (1u << inst.nA()) - 1;
        CHECK(coind_ideal(inst, {AlgebraSide::B, allB}).mask == allA);
        CHECK(ind_ideal(inst, {AlgebraSide::A, 0}).mask == 0);
        CHECK(ind_ideal(inst, {AlgebraSide::A, allA}).mask == allB);
    }
    CHECK_THROWS_AS(coind_ideal(s3z3, {AlgebraSide::A, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ind_ideal(s3z3, {AlgebraSide::A, 0b11111}), std::invalid_argument);
}

TEST_CASE("Frobenius consistency: block in ind(I) iff its restriction lies in I") {
    for (const auto& inst : builtin_catalog()) {
        for (uint32_t I = 0; I < (1u << inst.nA()); ++I) {
            uint32_t ind = ind_ideal(inst, {AlgebraSide::A, I}).mask;
            for (int i = 0; i < inst.nB(); ++i) {
                bool restriction_in_I = true;
                for (int j = 0; j < inst.nA(); ++j)
                    if (inst.M[i][j] > 0 && !(I & (1u << j))) restriction_in_I = false;
                CHECK(((ind >> i) & 1) == restriction_in_I);
            }
        }
    }
}

TEST_CASE("coinduced iff invariant on s3_z3") {
    InvarianceResult r = coinduced_iff_invariant(builtin_instance("s3_z3"));
    CHECK(r.equal);
    CHECK(r.coinduced == std::vector<uint32_t>{0b000, 0b001, 0b110, 0b111});
    CHECK(r.invariant == r.coinduced);

    InvarianceResult t = coinduced_iff_invariant(builtin_instance("trivial_pair"));
    CHECK(t.equal);
    CHECK(t.invariant.size() == 4);  // every ideal

    // Corrupted action: swapping blocks with different restriction behavior
    // breaks the equality.
    InclusionInstance corrupted = builtin_instance("s3_z3");
    corrupted.action = {{1, 0, 2}};  // swap the trivial character with omega
    corrupted = validate_instance(std::move(corrupted));
    InvarianceResult c = coinduced_iff_invariant(corrupted);
    CHECK(!c.equal);

    CHECK_THROWS_AS(coinduced_iff_invariant(builtin_instance("z4_z2")), std::invalid_argument);
}

TEST_CASE("numerical oracle agrees with the combinatorial rules") {
    for (const auto& inst : builtin_catalog()) {
        INFO(inst.name);
        OracleReport trace = numerical_oracle_check(inst, 1e-8);
        CHECK(trace.agree);
        CHECK(trace.detail.empty());
        OracleReport weighted = numerical_oracle_check(inst, 1e-8, 0xC0FFEEull);
        CHECK(weighted.agree);
        CHECK(weighted.randomized_weights);
    }
}

TEST_CASE("oracle agreement is stable across the tolerance range") {
    const auto& inst = builtin_instance("s3_z3");
    for (double tol : {1e-10, 1e-8, 1e-6}) {
        CHECK(numerical_oracle_check(inst, tol).agree);
        CHECK(numerical_oracle_check(inst, tol, 7ull).agree);
    }
    CHECK_THROWS_AS(numerical_oracle_check(inst, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(numerical_oracle_check(inst, 0.0), std::invalid_argument);
    InclusionInstance big{"big", {{"a", 1}}, {{"B", 65}}, {{65}}, {}};
    CHECK_THROWS_AS(numerical_oracle_check(validate_instance(big), 1e-8), std::invalid_argument);
}

TEST_CASE("instance JSON round trip") {
    for (const auto& inst : builtin_catalog()) {
        InclusionInstance back = instance_from_json(instance_to_json(inst), "x");
        CHECK(back.name == inst.name);
        CHECK(back.M == inst.M);
        CHECK(back.blocksA == inst.blocksA);
        CHECK(back.blocksB == inst.blocksB);
        CHECK(back.action == inst.action);
    }
    CHECK_THROWS_AS(instance_from_json(nlohmann::json::array(), "x"), std::invalid_argument);
}
