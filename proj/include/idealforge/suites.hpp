#pragma once

#include "idealforge/circle_map.hpp"

#include <json.hpp>

#include <cstdint>
#include <random>
#include <string>

namespace idealforge {

/// Outcome of one verification suite: machine-readable, with the seed echoed
/// and a concrete counterexample serialized on failure.
struct SuiteReport {
    std::string suite;
    bool pass = true;
    uint64_t seed = 0;
    int cases = 0;
    nlohmann::json details = nlohmann::json::object();
};

/// Random word in the given generators and their inverses, composed
/// left-to-right; length uniform in [1, max_len].
CircleHomeo random_word(std::mt19937_64& rng, const std::vector<CircleHomeo>& gens, int max_len);

/// Random dyadic in [0,1) with exponent at most max_exp.
Dyadic random_dyadic(std::mt19937_64& rng, int max_exp);

/// The two defining relations of F for the built-in generators, plus the
/// inverse/identity group axioms on the generator set. Exact.
SuiteReport run_relations_suite();

/// D±(gh)(x) = D±(g)(h(x)) + D±(h)(x) on random word pairs, at every
/// breakpoint of g, h and gh plus extra random dyadics.
SuiteReport run_cocycle_suite(uint64_t seed, int cases);

/// act(gh, p) = act(g, act(h, p)) on random words and marked points, for
/// moduli 1..nmax.
SuiteReport run_action_suite(uint64_t seed, int cases, int nmax = 6);

/// act(g, (0,0,0)) = (0,0,0) iff g lies in the slope-congruence stabilizer,
/// on random words of F, for moduli 1..nmax.
SuiteReport run_stabilizer_suite(uint64_t seed, int cases, int nmax = 6);

/// The mod-m/mod-n support dichotomy for the canonical slope-window pair:
/// disjoint for modulus m, not disjoint for modulus n. Expects m | n, m < n.
SuiteReport run_witness_suite(int m, int n);

/// Random dyadic interval pairs: the deterministic PL bijection exists, has
/// the right endpoints, dyadic breakpoints and power-of-two slopes.
SuiteReport run_interval_homeo_suite(uint64_t seed, int cases);

/// Random compressibility configurations (basepoint with denominator up to
/// 3*2^10, random arcs): compress, separate, enclosing-arc and hull
/// postconditions, including membership in the pointwise stabilizer.
SuiteReport run_compressibility_suite(uint64_t seed, int cases);

}  // namespace idealforge
