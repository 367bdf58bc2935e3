#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace idealforge {

/// Finite lattice materialized as the powerset of a labelled atom set,
/// elements encoded as bitmasks. Order is inclusion, meet/join are
/// intersection/union. check_axioms() verifies the lattice laws by
/// enumeration (all triples for small sizes, atoms-based otherwise).
struct FiniteLattice {
    std::vector<std::string> atom_labels;

    static FiniteLattice powerset(std::vector<std::string> labels);

    int atoms() const { return static_cast<int>(atom_labels.size()); }
    uint32_t size() const { return 1u << atoms(); }
    uint32_t bottom() const { return 0; }
    uint32_t top() const { return size() - 1; }
    bool leq(uint32_t a, uint32_t b) const { return (a & ~b) == 0; }
    uint32_t meet(uint32_t a, uint32_t b) const { return a & b; }
    uint32_t join(uint32_t a, uint32_t b) const { return a | b; }

    bool check_axioms(uint32_t max_exhaustive = 64) const;

    /// Sorted labels of the atoms in the mask.
    std::vector<std::string> labels_of(uint32_t mask) const;
};

/// Monotone map pair coind: I(B) -> I(A), ind: I(A) -> I(B), materialized as
/// tables indexed by bitmask.
struct GaloisPair {
    FiniteLattice lat_B;
    FiniteLattice lat_A;
    std::vector<uint32_t> coind_table;  // size lat_B.size()
    std::vector<uint32_t> ind_table;    // size lat_A.size()

    uint32_t coind(uint32_t j) const { return coind_table[j]; }
    uint32_t ind(uint32_t i) const { return ind_table[i]; }

    bool monotone() const;
};

/// Exhaustive check of J <= ind(I) <=> coind(J) <= I over all pairs.
struct AdjunctionResult {
    bool ok = true;
    uint32_t bad_I = 0;  // witness when !ok
    uint32_t bad_J = 0;
    bool lhs = false;  // J <= ind(I)
    bool rhs = false;  // coind(J) <= I
};

AdjunctionResult check_adjunction(const GaloisPair& p);

/// The seven consequences of the adjunction, by enumeration:
///   1. ind = ind o coind o ind
///   2. coind = coind o ind o coind
///   3. ind preserves meets, coind preserves joins (empty family, all pairs,
///      all triples, and the full family; for powersets this is equivalent
///      to preservation of arbitrary family meets/joins)
///   4. coind and ind restrict to mutually inverse order-isomorphisms
///      between the two image sublattices
///   5. coind(ind(I)) is the largest co-induced element below I
///   6. ind(coind(J)) is the smallest induced element above J
///   7. ind maps proper elements to proper elements
struct PropGaloisResult {
    std::array<bool, 7> item_ok{};
    std::array<std::string, 7> witness{};  // description of first failure, or empty
    std::vector<uint32_t> image_coind;     // sorted, co-induced elements of A
    std::vector<uint32_t> image_ind;       // sorted, induced elements of B

    bool all_ok() const;
};

PropGaloisResult verify_prop_galois(const GaloisPair& p);

/// Maximal elements of the proper co-induced ideals; also checks the
/// returned set is an antichain dominating every proper co-induced element.
std::vector<uint32_t> max_coinduced(const GaloisPair& p);

/// The four conditions of the maximal-ideal correspondence:
///   1. coind maps proper elements to proper elements
///   2. every proper J lies below ind(I) for some proper I
///   3. every maximal element of B is ind of a maximal element of A
///   4. ind restricts to a bijection from the maximal proper co-induced
///      elements of A onto the maximal elements of B
/// In the unital finite-dimensional setting all four are equivalent; the
/// checker evaluates each independently and reports whether they agree.
struct MaxIdealResult {
    std::array<bool, 4> cond{};
    bool equivalent = false;
    std::vector<std::pair<uint32_t, uint32_t>> bijection;  // (M, ind(M)) when all hold
    std::optional<uint32_t> non_induced_maximal;           // witness in B when they fail
};

MaxIdealResult maxideal_report(const GaloisPair& p);

}  // namespace idealforge
