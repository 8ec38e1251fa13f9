#include "ssatc/partition.hpp"

#include "ssatc/error.hpp"

#include <algorithm>

namespace ssatc {

Partition Partition::make(const SsatFormula& f, std::span<const uint32_t> a_idx) {
    Partition p;
    std::vector<bool> in_a(f.matrix.size(), false);
    for (uint32_t i : a_idx) {
        if (i >= f.matrix.size())
            throw Error(Errc::PartitionNotCovering, "A-clause index " + std::to_string(i) + " out of range");
        if (in_a[i])
            throw Error(Errc::PartitionNotCovering, "duplicate A-clause index " + std::to_string(i));
        in_a[i] = true;
    }
    for (uint32_t i = 0; i < f.matrix.size(); ++i)
        (in_a[i] ? p.a_clauses : p.b_clauses).push_back(i);

    uint32_t max_var = f.max_var_index();
    std::vector<bool> occ_a(max_var + 1, false), occ_b(max_var + 1, false);
    for (uint32_t i : p.a_clauses)
        for (Lit l : f.matrix[i]) occ_a[l.var().idx] = true;
    for (uint32_t i : p.b_clauses)
        for (Lit l : f.matrix[i]) occ_b[l.var().idx] = true;

    p.side_by_var.assign(max_var + 1, VarSide::None);
    for (uint32_t v = 1; v <= max_var; ++v) {
        if (occ_a[v] && occ_b[v]) {
            p.side_by_var[v] = VarSide::Shared;
            p.v_ab.insert(Var(v));
        } else if (occ_a[v]) {
            p.side_by_var[v] = VarSide::AOnly;
            p.v_a.insert(Var(v));
        } else if (occ_b[v]) {
            p.side_by_var[v] = VarSide::BOnly;
            p.v_b.insert(Var(v));
        }
    }
    return p;
}

bool Partition::in_a(uint32_t clause_idx) const {
    return std::binary_search(a_clauses.begin(), a_clauses.end(), clause_idx);
}

} // namespace ssatc
