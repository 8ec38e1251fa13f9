#pragma once

#include "ssatc/ast.hpp"
#include "ssatc/types.hpp"

#include <string>
#include <vector>

namespace ssatc {

/// Fresh-variable source. Fresh variables are handed out densely starting
/// from a given index; names are recorded for debugging output.
class VarAllocator {
public:
    explicit VarAllocator(uint32_t first_free, std::vector<std::string>* names = nullptr)
        : next_(first_free), names_(names) {}

    Var fresh(const std::string& name = "");
    uint32_t next_index() const { return next_; }

private:
    uint32_t next_;
    std::vector<std::string>* names_;
};

struct CnfResult {
    std::vector<Clause> clauses;
    std::vector<Var> aux_vars;
};

/// Structural CNF of f: the models of the clause set projected onto Var(f)
/// are exactly the models of f. Auxiliary definitions are one-sided
/// (aux implies subformula), introduced only when plain distribution would
/// exceed a small clause budget.
CnfResult to_cnf(const Ast& f, VarAllocator& alloc);

/// CNF of the negation of f, same projection guarantee for ~f.
CnfResult negate_to_cnf(const Ast& f, VarAllocator& alloc);

} // namespace ssatc
