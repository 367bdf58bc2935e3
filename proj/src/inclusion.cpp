#include "idealforge/inclusion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace idealforge {

int InclusionInstance::dimB_total() const {
    int t = 0;
    for (const auto& [lab, d] : blocksB) t += d;
    return t;
}

InclusionInstance validate_instance(InclusionInstance inst) {
    if (inst.blocksA.empty() || inst.blocksB.empty())
        throw std::invalid_argument(inst.name + ": empty block list");
    if (inst.blocksA.size() > 16 || inst.blocksB.size() > 16)
        throw std::invalid_argument(inst.name + ": too many blocks");
    for (const auto& [lab, d] : inst.blocksA)
        if (d < 1) throw std::invalid_argument(inst.name + ": non-positive A-block dimension");
    for (const auto& [lab, d] : inst.blocksB)
        if (d < 1) throw std::invalid_argument(inst.name + ": non-positive B-block dimension");
    {
        std::set<std::string> seen;
        for (const auto& [lab, d] : inst.blocksA)
            if (!seen.insert(lab).second) throw std::invalid_argument(inst.name + ": duplicate A-block label");
        seen.clear();
        for (const auto& [lab, d] : inst.blocksB)
            if (!seen.insert(lab).second) throw std::invalid_argument(inst.name + ": duplicate B-block label");
    }
    if (inst.M.size() != inst.blocksB.size())
        throw std::invalid_argument(inst.name + ": multiplicity matrix has wrong row count");
    for (int i = 0; i < inst.nB(); ++i) {
        if (inst.M[i].size() != inst.blocksA.size())
            throw std::invalid_argument(inst.name + ": multiplicity matrix has wrong column count");
        int dim = 0;
        bool nonzero = false;
        for (int j = 0; j < inst.nA(); ++j) {
            if (inst.M[i][j] < 0) throw std::invalid_argument(inst.name + ": negative multiplicity");
            if (inst.M[i][j] > 0) nonzero = true;
            dim += inst.M[i][j] * inst.blocksA[j].second;
        }
        if (!nonzero) throw std::invalid_argument(inst.name + ": zero row (B-block sees no A-block)");
        if (dim != inst.blocksB[i].second)
            throw std::invalid_argument(inst.name + ": unitality violated in B-block " + inst.blocksB[i].first);
    }
    for (int j = 0; j < inst.nA(); ++j) {
        bool nonzero = false;
        for (int i = 0; i < inst.nB(); ++i)
            if (inst.M[i][j] > 0) nonzero = true;
        if (!nonzero)
            throw std::invalid_argument(inst.name + ": zero column (inclusion not faithful on A-block " +
                                        inst.blocksA[j].first + ")");
    }
    for (const auto& perm : inst.action) {
        if (perm.size() != inst.blocksA.size())
            throw std::invalid_argument(inst.name + ": malformed action (wrong permutation length)");
        std::vector<bool> hit(perm.size(), false);
        for (int v : perm) {
            if (v < 0 || v >= inst.nA() || hit[v])
                throw std::invalid_argument(inst.name + ": malformed action (not a permutation)");
            hit[v] = true;
        }
        for (int j = 0; j < inst.nA(); ++j)
            if (inst.blocksA[perm[j]].second != inst.blocksA[j].second)
                throw std::invalid_argument(inst.name + ": malformed action (dimension not preserved)");
    }
    return inst;
}

namespace {

void require_side(const IdealSet& s, AlgebraSide side, int nblocks, const char* what) {
    if (s.side != side) throw std::invalid_argument(std::string(what) + ": ideal tagged for the wrong algebra");
    if (s.mask >= (1u << nblocks)) throw std::invalid_argument(std::string(what) + ": block index out of range");
}

}  // namespace

IdealSet coind_ideal(const InclusionInstance& inst, const IdealSet& J) {
    require_side(J, AlgebraSide::B, inst.nB(), "coind_ideal");
    uint32_t out = 0;
    for (int i = 0; i < inst.nB(); ++i) {
        if (!(J.mask & (1u << i))) continue;
        for (int j = 0; j < inst.nA(); ++j)
            if (inst.M[i][j] > 0) out |= 1u << j;
    }
    return {AlgebraSide::A, out};
}

IdealSet ind_ideal(const InclusionInstance& inst, const IdealSet& I) {
    require_side(I, AlgebraSide::A, inst.nA(), "ind_ideal");
    uint32_t out = 0;
    for (int i = 0; i < inst.nB(); ++i) {
        bool inside = true;
        for (int j = 0; j < inst.nA(); ++j)
            if (inst.M[i][j] > 0 && !(I.mask & (1u << j))) inside = false;
        if (inside) out |= 1u << i;
    }
    return {AlgebraSide::B, out};
}

GaloisPair to_galois_pair(const InclusionInstance& inst) {
    GaloisPair p;
    std::vector<std::string> labsA, labsB;
    for (const auto& [lab, d] : inst.blocksA) labsA.push_back(lab);
    for (const auto& [lab, d] : inst.blocksB) labsB.push_back(lab);
    p.lat_A = FiniteLattice::powerset(labsA);
    p.lat_B = FiniteLattice::powerset(labsB);
    p.coind_table.resize(p.lat_B.size());
    for (uint32_t J = 0; J < p.lat_B.size(); ++J) p.coind_table[J] = coind_ideal(inst, {AlgebraSide::B, J}).mask;
    p.ind_table.resize(p.lat_A.size());
    for (uint32_t I = 0; I < p.lat_A.size(); ++I) p.ind_table[I] = ind_ideal(inst, {AlgebraSide::A, I}).mask;
    return p;
}

const std::vector<InclusionInstance>& builtin_catalog() {
    static const std::vector<InclusionInstance> catalog = [] {
        std::vector<InclusionInstance> v;

        // Scalars inside the 2x2 matrices; B is simple.
        v.push_back(validate_instance({"m2_scalars", {{"scalars", 1}}, {{"M2", 2}}, {{2}}, {}}));

        // A = B = C^2 with the identity expectation and the trivial action.
        v.push_back(validate_instance(
            {"trivial_pair", {{"e0", 1}, {"e1", 1}}, {{"e0", 1}, {"e1", 1}}, {{1, 0}, {0, 1}}, {{0, 1}}}));

        // Characters of Z4 restricted to Z2 = {0, 2}: chi_k(2) = (-1)^k.
        v.push_back(validate_instance({"z4_z2",
                                       {{"triv", 1}, {"sign", 1}},
                                       {{"chi0", 1}, {"chi1", 1}, {"chi2", 1}, {"chi3", 1}},
                                       {{1, 0}, {0, 1}, {1, 0}, {0, 1}},
                                       {}}));

        // Irreps of S3 restricted to Z2 = <(12)>: std splits as triv + sign.
        v.push_back(validate_instance(
            {"s3_z2", {{"triv", 1}, {"sign", 1}}, {{"triv", 1}, {"sign", 1}, {"std", 2}}, {{1, 0}, {0, 1}, {1, 1}}, {}}));

        // Irreps of S3 restricted to Z3 = A3: std splits as omega + conj(omega);
        // conjugation by a transposition swaps the two characters.
        v.push_back(validate_instance({"s3_z3",
                                       {{"1", 1}, {"omega", 1}, {"omegabar", 1}},
                                       {{"triv", 1}, {"sign", 1}, {"std", 2}},
                                       {{1, 0, 0}, {1, 0, 0}, {0, 1, 1}},
                                       {{0, 2, 1}}}));

        // Irreps of S4 (dims 1,1,2,3,3) restricted to S3.
        v.push_back(validate_instance({"s4_s3",
                                       {{"triv", 1}, {"sign", 1}, {"std", 2}},
                                       {{"triv", 1}, {"sign", 1}, {"two", 2}, {"std3", 3}, {"std3sgn", 3}},
                                       {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}},
                                       {}}));
        return v;
    }();
    return catalog;
}

const InclusionInstance& builtin_instance(const std::string& name) {
    for (const auto& inst : builtin_catalog())
        if (inst.name == name) return inst;
    throw std::invalid_argument("unknown built-in instance: " + name);
}

InvarianceResult coinduced_iff_invariant(const InclusionInstance& inst) {
    if (inst.action.empty()) throw std::invalid_argument(inst.name + ": instance has no action");
    InvarianceResult r;
    std::set<uint32_t> coinduced;
    for (uint32_t J = 0; J < (1u << inst.nB()); ++J) coinduced.insert(coind_ideal(inst, {AlgebraSide::B, J}).mask);
    r.coinduced.assign(coinduced.begin(), coinduced.end());
    for (uint32_t I = 0; I < (1u << inst.nA()); ++I) {
        bool inv = true;
        for (const auto& perm : inst.action) {
            uint32_t img = 0;
            for (int j = 0; j < inst.nA(); ++j)
                if (I & (1u << j)) img |= 1u << perm[j];
            if (img != I) inv = false;
        }
        if (inv) r.invariant.push_back(I);
    }
    r.equal = r.coinduced == r.invariant;
    return r;
}

}  // namespace idealforge
