#pragma once

#include "idealforge/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace idealforge {

/// A unital inclusion of finite-dimensional C*-algebras A ⊆ B described by
/// block labels and dimensions and the multiplicity matrix M[i][j] = number
/// of copies of A-block j inside B-block i, plus an optional finite group of
/// permutations of the A-blocks (stored as a list of permutations).
struct InclusionInstance {
    std::string name;
    std::vector<std::pair<std::string, int>> blocksA;
    std::vector<std::pair<std::string, int>> blocksB;
    std::vector<std::vector<int>> M;        // indexed [B-block][A-block]
    std::vector<std::vector<int>> action;   // permutations of A-block indices

    int nA() const { return static_cast<int>(blocksA.size()); }
    int nB() const { return static_cast<int>(blocksB.size()); }
    int dimB_total() const;
};

/// Ideal of one of the two algebras: a subset of its block indices.
enum class AlgebraSide { A, B };

struct IdealSet {
    AlgebraSide side;
    uint32_t mask;

    friend bool operator==(const IdealSet&, const IdealSet&) = default;
};

/// Verifies the invariants: unitality (each B-block dimension equals the
/// multiplicity-weighted sum of A-block dimensions), no zero row, no zero
/// column (faithfulness), well-formed dimension-preserving action. Throws
/// std::invalid_argument with a description on violation.
InclusionInstance validate_instance(InclusionInstance inst);

/// Coind(J) = support of the expectation image: the A-blocks visible from
/// some B-block of J.
IdealSet coind_ideal(const InclusionInstance& inst, const IdealSet& J);

/// Ind(I) = the B-blocks all of whose A-block constituents lie in I.
IdealSet ind_ideal(const InclusionInstance& inst, const IdealSet& I);

/// Powerset lattices of the two block sets with the map pair above.
GaloisPair to_galois_pair(const InclusionInstance& inst);

/// The built-in instances (validated): m2_scalars, trivial_pair, z4_z2,
/// s3_z2, s3_z3 (with the conjugation swap action), s4_s3.
const std::vector<InclusionInstance>& builtin_catalog();

/// Looks up a built-in instance by name; throws std::invalid_argument.
const InclusionInstance& builtin_instance(const std::string& name);

/// Enumerates all ideals of A and compares {co-induced} with
/// {action-invariant}; requires an action.
struct InvarianceResult {
    std::vector<uint32_t> coinduced;  // sorted masks
    std::vector<uint32_t> invariant;  // sorted masks
    bool equal = false;
};

InvarianceResult coinduced_iff_invariant(const InclusionInstance& inst);

}  // namespace idealforge
