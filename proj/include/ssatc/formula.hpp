#pragma once

#include "ssatc/prefix.hpp"
#include "ssatc/types.hpp"

#include <string>
#include <vector>

namespace ssatc {

/// Closed SSAT formula: quantifier prefix over a CNF matrix. Every variable
/// occurring in the matrix must be bound, and matrix clauses must be
/// non-tautological.
struct SsatFormula {
    Prefix prefix;
    std::vector<Clause> matrix;
    uint32_t num_vars = 0;              // declared variable count (indices 1..num_vars)
    std::vector<std::string> var_names; // optional, indexed by var idx (slot 0 unused)

    /// Throws Error(InvalidFormula) on unbound matrix variables, tautological
    /// clauses, or out-of-range indices.
    void validate() const;

    std::string name_of(Var v) const {
        if (v.idx < var_names.size() && !var_names[v.idx].empty()) return var_names[v.idx];
        return "x" + std::to_string(v.idx);
    }

    uint32_t max_var_index() const;
};

} // namespace ssatc
