#include "ssatc/checker.hpp"

#include "ssatc/error.hpp"

#include <algorithm>

namespace ssatc {

std::optional<uint32_t> CheckReport::first_invalid() const {
    for (uint32_t i = 0; i < steps.size(); ++i)
        if (!steps[i].valid) return i;
    return std::nullopt;
}

namespace {

// All checks below are written directly against the rule definitions and on
// purpose do not reuse the rule-application module.

struct Checker {
    const ProofTrace& t;
    const SsatFormula& f;

    bool clause_in_matrix(const Clause& c) const {
        return std::any_of(f.matrix.begin(), f.matrix.end(), [&](const Clause& d) { return d == c; });
    }

    bool clause_on_side_a(const Clause& c, bool want_a) const {
        const auto& idx = want_a ? t.partition->a_clauses : t.partition->b_clauses;
        return std::any_of(idx.begin(), idx.end(), [&](uint32_t i) { return f.matrix[i] == c; });
    }

    uint32_t deepest_position(const Clause& c) const {
        uint32_t out = 0;
        for (Lit l : c) out = std::max(out, f.prefix.position(l.var()));
        return out;
    }

    bool vars_shared_only(const Ast& a) const {
        for (Var v : ast::vars(a))
            if (t.partition->var_side(v) != VarSide::Shared) return false;
        return true;
    }

    bool interpolants_agree(const Ast& expected, const Ast& attached) const {
        try {
            return ast::equivalent(expected, attached, 16);
        } catch (const Error&) {
            return ast::equal(ast::simplify(expected), ast::simplify(attached));
        }
    }

    StepCheck check_step(uint32_t idx) const {
        const DerivationStep& s = t.steps[idx];
        if (s.conclusion.prob < Rational::zero() || s.conclusion.prob > Rational::one())
            return {false, "probability annotation outside [0,1]"};
        if (rule_is_interpolating(s.rule)) {
            if (!t.partition) return {false, "interpolating step without a partition"};
            if (!s.interpolant) return {false, "interpolating step without an interpolant"};
        }
        switch (s.rule) {
            case Rule::R1:
            case Rule::R2_1: return check_r1(s);
            case Rule::R2:
            case Rule::R2_2: return check_r2(s);
            case Rule::R3:
            case Rule::R2_3: return check_r3(idx, s);
        }
        return {false, "unknown rule"};
    }

    StepCheck check_r1(const DerivationStep& s) const {
        if (!s.premises.empty()) return {false, "R.1 takes no premises"};
        if (!clause_in_matrix(s.conclusion.clause))
            return {false, "NotAMatrixClause: " + s.conclusion.clause.to_dimacs_string()};
        if (!s.conclusion.prob.is_zero()) return {false, "R.1 must conclude probability 0"};
        if (s.rule == Rule::R2_1) {
            bool is_false = ast::is_const(s.interpolant, false);
            bool is_true = ast::is_const(s.interpolant, true);
            if (!is_false && !is_true) return {false, "R2.1 interpolant must be a constant"};
            if (!clause_on_side_a(s.conclusion.clause, is_false))
                return {false, "R2.1 interpolant constant does not match the clause's partition side"};
        }
        return {true, ""};
    }

    StepCheck check_r2(const DerivationStep& s) const {
        const Clause& c = s.conclusion.clause;
        if (!s.premises.empty()) return {false, "R.2 takes no premises"};
        if (c.tautological()) return {false, "TautologicalClause in R.2"};
        for (Lit l : c)
            if (!f.prefix.binds(l.var())) return {false, "R.2 clause variable unbound"};
        if (!s.conclusion.prob.is_one()) return {false, "R.2 must conclude probability 1"};
        // ff_c, rebuilt here
        Assignment ff;
        for (Lit l : c) ff.set(l.var(), !l.positive());
        // witness must agree with ff_c on Var(c)
        for (const auto& [vidx, val] : ff.entries()) {
            auto w = s.witness.value(Var(vidx));
            if (!w.has_value() || *w != val)
                return {false, "witness disagrees with the falsifying assignment of the clause"};
        }
        // premise: every matrix clause satisfied by ff_c-assigned literals
        // alone, which makes every extension over the covered prefix a model
        for (const Clause& d : f.matrix) {
            bool sat = false;
            for (Lit l : d) {
                auto v = ff.value(l.var());
                if (v.has_value() && *v == l.positive()) {
                    sat = true;
                    break;
                }
            }
            if (!sat)
                return {false, "PremiseViolated: clause " + d.to_dimacs_string() +
                                   " not satisfied under the witness assignment"};
        }
        if (s.rule == Rule::R2_2 && !vars_shared_only(s.interpolant))
            return {false, "DcPolicyVariablesOutsideCommon: R2.2 interpolant leaves V_{A,B}"};
        return {true, ""};
    }

    StepCheck check_r3(uint32_t idx, const DerivationStep& s) const {
        if (s.premises.size() != 2) return {false, "R.3 takes two premises"};
        if (s.premises[0] >= idx || s.premises[1] >= idx)
            return {false, "R.3 premises must be earlier steps"};
        const DerivationStep& left = t.steps[s.premises[0]];
        const DerivationStep& right = t.steps[s.premises[1]];
        if (!f.prefix.binds(s.pivot)) return {false, "pivot unbound in prefix"};
        Lit neg(s.pivot, false), pos(s.pivot, true);
        if (!left.conclusion.clause.contains(neg))
            return {false, "PivotMissing: left premise lacks the negative pivot literal"};
        if (!right.conclusion.clause.contains(pos))
            return {false, "PivotMissing: right premise lacks the positive pivot literal"};
        Clause resolvent =
            left.conclusion.clause.without(neg).merged(right.conclusion.clause.without(pos));
        if (!(resolvent == s.conclusion.clause))
            return {false, "conclusion is not the resolvent of the premises"};
        if (resolvent.tautological()) return {false, "TautologicalResolvent"};
        if (f.prefix.position(s.pivot) <= deepest_position(resolvent))
            return {false, "PrefixOrderViolated: pivot occurs within the resolvent's prefix range"};
        const Quantifier& q = f.prefix.quantifier_of(s.pivot);
        Rational expected =
            q.is_random()
                ? q.prob * left.conclusion.prob + q.prob.one_minus() * right.conclusion.prob
                : std::max(left.conclusion.prob, right.conclusion.prob);
        if (!(expected == s.conclusion.prob))
            return {false, "annotation mismatch: expected " + expected.to_string() + ", stated " +
                               s.conclusion.prob.to_string()};
        if (s.rule == Rule::R2_3) {
            if (!left.interpolant || !right.interpolant)
                return {false, "R2.3 premises lack interpolants"};
            Ast expected_itp;
            switch (t.partition->var_side(s.pivot)) {
                case VarSide::AOnly:
                    expected_itp = ast::disjunction2(left.interpolant, right.interpolant);
                    break;
                case VarSide::BOnly:
                    expected_itp = ast::conjunction2(left.interpolant, right.interpolant);
                    break;
                case VarSide::Shared:
                    expected_itp = ast::conjunction2(
                        ast::disjunction2(ast::leaf(neg), left.interpolant),
                        ast::disjunction2(ast::leaf(pos), right.interpolant));
                    break;
                case VarSide::None: return {false, "pivot outside the partitioned matrix"};
            }
            if (!interpolants_agree(expected_itp, s.interpolant))
                return {false, "R2.3 interpolant does not match the rule-table combination"};
            if (!vars_shared_only(s.interpolant))
                return {false, "interpolant leaves V_{A,B}"};
        }
        return {true, ""};
    }
};

} // namespace

CheckReport check_proof(const ProofTrace& t) {
    CheckReport report;
    try {
        t.formula.validate();
    } catch (const Error& e) {
        report.steps.push_back({false, std::string("formula invalid: ") + e.what()});
        report.accepted = false;
        return report;
    }
    Checker ck{t, t.formula};
    bool all_valid = !t.steps.empty();
    for (uint32_t i = 0; i < t.steps.size(); ++i) {
        StepCheck sc = ck.check_step(i);
        all_valid = all_valid && sc.valid;
        report.steps.push_back(std::move(sc));
    }
    report.accepted = all_valid;
    if (all_valid && !t.steps.empty()) {
        const DerivationStep& last = t.steps.back();
        if (last.conclusion.clause.empty()) {
            report.certified = last.conclusion.prob;
            report.certified_interpolant = last.interpolant;
        }
    }
    return report;
}

} // namespace ssatc
