#pragma once

#include "ssatc/ast.hpp"
#include "ssatc/formula.hpp"
#include "ssatc/partition.hpp"
#include "ssatc/rational.hpp"

#include <optional>
#include <vector>

namespace ssatc {

/// Truth table over an ordered variable list; entry index bit i is the
/// value of variables[i].
struct TruthTable {
    std::vector<Var> variables;
    std::vector<bool> table; // size 2^n

    bool at(uint64_t index) const { return table[index]; }
    bool constant_true() const;
    bool constant_false() const;
};

/// Default enumeration cap (variables); overridable via SSATC_ORACLE_CAP.
uint32_t oracle_cap();

/// Pr(Phi) by the defining recursion: 0/1 at the fully substituted matrix,
/// max over existential branches, p-weighted average over randomized ones.
/// Throws Error(TooLarge) past the cap.
Rational exact_pr(const SsatFormula& f, std::optional<uint32_t> cap = std::nullopt);

/// Independent second path: full 2^n leaf enumeration folded bottom-up.
/// Deliberately shares no traversal machinery with exact_pr.
Rational exact_pr_enumerate(const SsatFormula& f, std::optional<uint32_t> cap = std::nullopt);

/// S_{A,B}: truth table over V_{A,B}, true where some extension over the
/// local variables satisfies A and B.
TruthTable project_common(const std::vector<Clause>& a, const std::vector<Clause>& b,
                          const Partition& part, std::optional<uint32_t> cap = std::nullopt);

/// Interpolant validity check: Var(I) within V_{A,B}, A && !S && !I unsatisfiable, and
/// I && B && !S unsatisfiable, all by enumeration.
bool is_generalized_interpolant(const Ast& interpolant, const SsatFormula& f, const Partition& part,
                                std::optional<uint32_t> cap = std::nullopt);

} // namespace ssatc
