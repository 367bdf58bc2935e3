#pragma once

#include "idealforge/inclusion.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace idealforge {

/// Result of checking the combinatorial Ind/Coind rules against an explicit
/// matrix model of the inclusion.
struct OracleReport {
    bool agree = true;
    std::string detail;      // first disagreement, empty when agree
    int ideals_checked = 0;  // ideals of each algebra examined
    bool randomized_weights = false;
};

/// Builds B = ⊕_i M_{b_i}(C) with A embedded block-diagonally according to
/// the multiplicity matrix, forms the conditional expectation P given by
/// orthogonal projection onto A for a faithful tracial inner product, and
/// decides block supports numerically:
///   - Coind: for every ideal J of B, the A-blocks where P(J) is nonzero;
///   - Ind: for every ideal I of A, the B-blocks all of whose elements b
///     keep P(x b y) inside I (x, y swept over matrix units and seeded
///     random elements).
/// Nonzero-ness is a rank decision at the given relative tolerance against
/// the largest singular value seen in the same decision.
///
/// weight_seed: nullopt uses the normalized trace (the trace-preserving
/// expectation); a seed draws a random faithful block weighting, probing
/// independence of the rules from the choice of faithful expectation.
///
/// Requires dimB_total <= 64 and tolerance in (0, 1e-4].
OracleReport numerical_oracle_check(const InclusionInstance& inst, double tolerance,
                                    std::optional<uint64_t> weight_seed = std::nullopt);

}  // namespace idealforge
