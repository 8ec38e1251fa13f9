#pragma once

#include "ssatc/types.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ssatc {

enum class AstKind { True, False, Leaf, Not, And, Or };

struct AstNode;
using Ast = std::shared_ptr<const AstNode>;

/// Propositional formula tree. Leaves carry literals, so negation over a
/// leaf is folded into the literal sign; Not nodes survive only over
/// And/Or subtrees until simplification or NNF conversion.
struct AstNode {
    AstKind kind;
    Lit lit;                   // Leaf only
    std::vector<Ast> children; // Not: 1, And/Or: >= 1 after simplify
};

namespace ast {

Ast constant(bool value);
Ast leaf(Lit l);
Ast var(Var v);
Ast negation(Ast a);
Ast conjunction(std::vector<Ast> children); // empty -> true
Ast disjunction(std::vector<Ast> children); // empty -> false
Ast conjunction2(Ast a, Ast b);
Ast disjunction2(Ast a, Ast b);

bool is_const(const Ast& a, bool value);

/// Constant folding, flattening of nested And/Or, structural deduplication
/// of children, single-child collapse, double-negation elimination.
/// No SAT-based minimization.
Ast simplify(const Ast& a);

/// Structural equality.
bool equal(const Ast& a, const Ast& b);

/// tau must assign every variable of a.
bool eval(const Ast& a, const Assignment& tau);

std::set<Var> vars(const Ast& a);

/// Substitutes variables; every variable of a must be mapped.
Ast remap_vars(const Ast& a, const std::map<uint32_t, Var>& m);

/// Truth-table equivalence over the union of both variable sets.
/// Throws Error(TooLarge) beyond max_vars.
bool equivalent(const Ast& a, const Ast& b, unsigned max_vars = 20);

std::string to_sexpr(const Ast& a);
Ast parse_sexpr(std::string_view s);

/// Human-readable infix form; names may be empty (falls back to x<idx>).
std::string pretty(const Ast& a, const std::vector<std::string>& names = {});

} // namespace ast
} // namespace ssatc
