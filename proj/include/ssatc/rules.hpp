#pragma once

#include "ssatc/proof.hpp"

#include <utility>

namespace ssatc {

/// Rule R.1: an original matrix clause is derivable as c^0.
/// Throws Error(NotAMatrixClause) if c is not in the matrix.
AnnotatedClause apply_r1(const Clause& c, const SsatFormula& f);

/// Rule R.2: c^1 from the opposite of a satisfying partial assignment.
/// The premise (every extension of ff_c over the covered prefix makes the
/// substituted matrix tautological) holds exactly when every matrix clause
/// contains a literal satisfied by ff_c alone, which is what is checked.
/// Throws Error(PremiseViolated) or Error(TautologicalClause).
AnnotatedClause apply_r2(const Clause& c, const SsatFormula& f);

/// Rule R.3: resolution on pivot, probability max(p1,p2) for existential
/// pivots and p_x*p1 + (1-p_x)*p2 for randomized ones (p1 annotates the
/// clause containing the negative pivot literal, which covers the
/// pivot-true branch).
AnnotatedClause apply_r3(const AnnotatedClause& left_neg_pivot, const AnnotatedClause& right_pos_pivot,
                         Var pivot, const SsatFormula& f);

enum class DcPolicy { ConstTrue, ConstFalse, Custom };

/// The formula substituted for the free interpolant choice in rule R2.2.
struct DcChoice {
    DcPolicy policy = DcPolicy::ConstTrue;
    Ast custom; // Custom only; must mention only V_{A,B}

    static DcChoice const_true() { return {DcPolicy::ConstTrue, nullptr}; }
    static DcChoice const_false() { return {DcPolicy::ConstFalse, nullptr}; }
    static DcChoice custom_formula(Ast a) { return {DcPolicy::Custom, std::move(a)}; }

    /// Throws Error(DcPolicyVariablesOutsideCommon) for bad custom formulas.
    Ast formula(const Partition& part) const;
};

struct InterpolatingConclusion {
    AnnotatedClause clause;
    Ast interpolant;
};

/// Rules R2.1-R2.3: the underlying rule plus the interpolant bookkeeping.
InterpolatingConclusion apply_interpolating_r1(const Clause& c, const SsatFormula& f,
                                               const Partition& part);
InterpolatingConclusion apply_interpolating_r2(const Clause& c, const SsatFormula& f,
                                               const Partition& part, const DcChoice& dc);
InterpolatingConclusion apply_interpolating_r3(const InterpolatingConclusion& left_neg_pivot,
                                               const InterpolatingConclusion& right_pos_pivot, Var pivot,
                                               const SsatFormula& f, const Partition& part);

} // namespace ssatc
