#include "ssatc/rules.hpp"

#include "ssatc/error.hpp"

#include <algorithm>

namespace ssatc {

namespace {

uint32_t max_position(const Clause& c, const Prefix& p) {
    uint32_t out = 0;
    for (Lit l : c) out = std::max(out, p.position(l.var()));
    return out;
}

} // namespace

AnnotatedClause apply_r1(const Clause& c, const SsatFormula& f) {
    if (std::find(f.matrix.begin(), f.matrix.end(), c) == f.matrix.end())
        throw Error(Errc::NotAMatrixClause, "clause " + c.to_dimacs_string() + " not in the matrix");
    return AnnotatedClause{c, Rational::zero()};
}

AnnotatedClause apply_r2(const Clause& c, const SsatFormula& f) {
    if (c.tautological()) throw Error(Errc::TautologicalClause, "R.2 clause must be non-tautological");
    for (Lit l : c)
        if (!f.prefix.binds(l.var()))
            throw Error(Errc::InvalidArgument, "R.2 clause mentions unbound variable");
    Assignment ff = falsifying_assignment(c);
    // Premise: for every extension of ff_c over the covered prefix the
    // substituted matrix is a tautology. Since residuals of non-tautological
    // clauses are never tautological, this holds iff every clause already
    // carries a literal satisfied by ff_c.
    for (const Clause& d : f.matrix) {
        bool satisfied = false;
        for (Lit l : d) {
            auto v = ff.value(l.var());
            if (v.has_value() && *v == l.positive()) {
                satisfied = true;
                break;
            }
        }
        if (!satisfied)
            throw Error(Errc::PremiseViolated,
                        "clause " + d.to_dimacs_string() + " not satisfied under the assignment opposite to " +
                            c.to_dimacs_string());
    }
    return AnnotatedClause{c, Rational::one()};
}

AnnotatedClause apply_r3(const AnnotatedClause& left_neg_pivot, const AnnotatedClause& right_pos_pivot,
                         Var pivot, const SsatFormula& f) {
    Lit neg(pivot, false), pos(pivot, true);
    if (!left_neg_pivot.clause.contains(neg))
        throw Error(Errc::PivotMissing, "left premise lacks negative pivot literal");
    if (!right_pos_pivot.clause.contains(pos))
        throw Error(Errc::PivotMissing, "right premise lacks positive pivot literal");
    if (!f.prefix.binds(pivot)) throw Error(Errc::InvalidArgument, "pivot not bound in prefix");
    Clause resolvent = left_neg_pivot.clause.without(neg).merged(right_pos_pivot.clause.without(pos));
    if (resolvent.tautological())
        throw Error(Errc::TautologicalResolvent, "resolvent " + resolvent.to_dimacs_string() + " is tautological");
    // side condition Q x not in Q(c1 v c2): pivot strictly innermost
    if (f.prefix.position(pivot) <= max_position(resolvent, f.prefix))
        throw Error(Errc::PrefixOrderViolated,
                    "pivot " + std::to_string(pivot.idx) + " not inner to resolvent " +
                        resolvent.to_dimacs_string());
    const Quantifier& q = f.prefix.quantifier_of(pivot);
    Rational p = q.is_random()
                     ? q.prob * left_neg_pivot.prob + q.prob.one_minus() * right_pos_pivot.prob
                     : std::max(left_neg_pivot.prob, right_pos_pivot.prob);
    return AnnotatedClause{std::move(resolvent), std::move(p)};
}

Ast DcChoice::formula(const Partition& part) const {
    switch (policy) {
        case DcPolicy::ConstTrue: return ast::constant(true);
        case DcPolicy::ConstFalse: return ast::constant(false);
        case DcPolicy::Custom: break;
    }
    if (!custom) throw Error(Errc::InvalidArgument, "custom DC policy without a formula");
    for (Var v : ast::vars(custom))
        if (part.var_side(v) != VarSide::Shared)
            throw Error(Errc::DcPolicyVariablesOutsideCommon,
                        "DC formula mentions non-shared variable " + std::to_string(v.idx));
    return custom;
}

InterpolatingConclusion apply_interpolating_r1(const Clause& c, const SsatFormula& f,
                                               const Partition& part) {
    AnnotatedClause ac = apply_r1(c, f);
    // membership side decides the constant; a clause listed on both sides
    // would be sound either way, A wins
    bool in_a = false;
    for (uint32_t i : part.a_clauses)
        if (f.matrix[i] == c) {
            in_a = true;
            break;
        }
    return {std::move(ac), ast::constant(!in_a)};
}

InterpolatingConclusion apply_interpolating_r2(const Clause& c, const SsatFormula& f,
                                               const Partition& part, const DcChoice& dc) {
    AnnotatedClause ac = apply_r2(c, f);
    return {std::move(ac), dc.formula(part)};
}

InterpolatingConclusion apply_interpolating_r3(const InterpolatingConclusion& left_neg_pivot,
                                               const InterpolatingConclusion& right_pos_pivot, Var pivot,
                                               const SsatFormula& f, const Partition& part) {
    AnnotatedClause ac = apply_r3(left_neg_pivot.clause, right_pos_pivot.clause, pivot, f);
    Ast combined;
    switch (part.var_side(pivot)) {
        case VarSide::AOnly:
            combined = ast::disjunction2(left_neg_pivot.interpolant, right_pos_pivot.interpolant);
            break;
        case VarSide::BOnly:
            combined = ast::conjunction2(left_neg_pivot.interpolant, right_pos_pivot.interpolant);
            break;
        case VarSide::Shared:
            combined = ast::conjunction2(
                ast::disjunction2(ast::leaf(Lit(pivot, false)), left_neg_pivot.interpolant),
                ast::disjunction2(ast::leaf(Lit(pivot, true)), right_pos_pivot.interpolant));
            break;
        case VarSide::None:
            throw Error(Errc::InvalidArgument, "pivot does not occur in the partitioned matrix");
    }
    return {std::move(ac), ast::simplify(combined)};
}

} // namespace ssatc
