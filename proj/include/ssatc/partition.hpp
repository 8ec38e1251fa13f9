#pragma once

#include "ssatc/formula.hpp"
#include "ssatc/types.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <vector>

namespace ssatc {

enum class VarSide : uint8_t { None, AOnly, BOnly, Shared };

/// (A,B) split of a formula matrix: disjoint clause-index sets covering the
/// matrix, plus the induced variable classes V_A, V_B and V_{A,B}.
struct Partition {
    std::vector<uint32_t> a_clauses; // sorted matrix indices
    std::vector<uint32_t> b_clauses;
    std::set<Var> v_a, v_b, v_ab;
    std::vector<VarSide> side_by_var; // indexed by var idx

    /// Builds the partition with A = a_idx and B = the rest. Throws
    /// Error(PartitionNotCovering) on out-of-range or duplicate indices.
    static Partition make(const SsatFormula& f, std::span<const uint32_t> a_idx);

    bool in_a(uint32_t clause_idx) const;
    VarSide var_side(Var v) const {
        return v.idx < side_by_var.size() ? side_by_var[v.idx] : VarSide::None;
    }
};

} // namespace ssatc
