#include "ssatc/oracle.hpp"

#include "ssatc/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace ssatc {

bool TruthTable::constant_true() const {
    return std::all_of(table.begin(), table.end(), [](bool b) { return b; });
}

bool TruthTable::constant_false() const {
    return std::none_of(table.begin(), table.end(), [](bool b) { return b; });
}

uint32_t oracle_cap() {
    if (const char* env = std::getenv("SSATC_ORACLE_CAP")) {
        long v = std::atol(env);
        if (v > 0) return static_cast<uint32_t>(v);
    }
    return 24;
}

namespace {

uint32_t effective_cap(std::optional<uint32_t> cap) { return cap.value_or(oracle_cap()); }

void check_cap(size_t nvars, std::optional<uint32_t> cap, const char* what) {
    if (nvars > effective_cap(cap))
        throw Error(Errc::TooLarge, std::string(what) + " over " + std::to_string(nvars) +
                                        " variables exceeds cap " + std::to_string(effective_cap(cap)));
}

// Plain semantic recursion in prefix order with per-clause satisfaction /
// falsification counters; the base case degenerates to evaluation because a
// closed prefix covers every matrix variable.
struct PrRecursion {
    const SsatFormula& f;
    std::vector<int> true_count;  // per clause
    std::vector<int> false_count; // per clause
    size_t satisfied = 0;
    size_t falsified = 0;
    std::vector<std::vector<std::pair<uint32_t, bool>>> occ; // var idx -> (clause, positive)

    explicit PrRecursion(const SsatFormula& formula) : f(formula) {
        true_count.assign(f.matrix.size(), 0);
        false_count.assign(f.matrix.size(), 0);
        occ.resize(f.num_vars + 1);
        for (uint32_t ci = 0; ci < f.matrix.size(); ++ci)
            for (Lit l : f.matrix[ci]) occ[l.var().idx].push_back({ci, l.positive()});
        for (uint32_t ci = 0; ci < f.matrix.size(); ++ci)
            if (f.matrix[ci].empty()) ++falsified;
    }

    void assign(Var v, bool value) {
        for (auto [ci, positive] : occ[v.idx]) {
            if (positive == value) {
                if (true_count[ci]++ == 0) ++satisfied;
            } else {
                if (++false_count[ci] == static_cast<int>(f.matrix[ci].size())) ++falsified;
            }
        }
    }

    void unassign(Var v, bool value) {
        for (auto [ci, positive] : occ[v.idx]) {
            if (positive == value) {
                if (--true_count[ci] == 0) --satisfied;
            } else {
                if (false_count[ci]-- == static_cast<int>(f.matrix[ci].size())) --falsified;
            }
        }
    }

    Rational run(size_t pos) {
        if (falsified > 0) return Rational::zero();
        if (satisfied == f.matrix.size()) return Rational::one();
        if (pos > f.prefix.size()) {
            // all variables substituted; matrix value is decided
            return Rational::zero();
        }
        const auto& [v, q] = f.prefix.binding(pos);
        assign(v, true);
        Rational pt = run(pos + 1);
        unassign(v, true);
        assign(v, false);
        Rational pf = run(pos + 1);
        unassign(v, false);
        if (q.is_random()) return q.prob * pt + q.prob.one_minus() * pf;
        return std::max(pt, pf);
    }
};

bool matrix_satisfied(const std::vector<Clause>& matrix, const Assignment& tau) {
    for (const Clause& c : matrix) {
        bool sat = false;
        for (Lit l : c) {
            auto v = tau.value(l.var());
            if (v.has_value() && *v == l.positive()) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

} // namespace

Rational exact_pr(const SsatFormula& f, std::optional<uint32_t> cap) {
    f.validate();
    check_cap(f.prefix.size(), cap, "exact_pr");
    PrRecursion rec(f);
    return rec.run(1);
}

Rational exact_pr_enumerate(const SsatFormula& f, std::optional<uint32_t> cap) {
    f.validate();
    check_cap(f.prefix.size(), cap, "exact_pr_enumerate");
    const size_t n = f.prefix.size();
    // leaf values in assignment order, bit i = value of prefix position i+1
    std::vector<Rational> layer(size_t{1} << n);
    for (uint64_t bits = 0; bits < layer.size(); ++bits) {
        Assignment tau;
        for (size_t i = 0; i < n; ++i) tau.set(f.prefix.var_at(i + 1), (bits >> i) & 1);
        layer[bits] = matrix_satisfied(f.matrix, tau) ? Rational::one() : Rational::zero();
    }
    // fold innermost-out
    for (size_t pos = n; pos >= 1; --pos) {
        const Quantifier& q = f.prefix.quantifier_at(pos);
        const uint64_t half = size_t{1} << (pos - 1);
        std::vector<Rational> next(half);
        for (uint64_t bits = 0; bits < half; ++bits) {
            const Rational& when_true = layer[bits | half];
            const Rational& when_false = layer[bits];
            next[bits] = q.is_random() ? q.prob * when_true + q.prob.one_minus() * when_false
                                       : std::max(when_true, when_false);
        }
        layer = std::move(next);
    }
    return layer[0];
}

TruthTable project_common(const std::vector<Clause>& a, const std::vector<Clause>& b,
                          const Partition& part, std::optional<uint32_t> cap) {
    std::vector<Var> shared(part.v_ab.begin(), part.v_ab.end());
    std::vector<Var> local;
    for (Var v : part.v_a) local.push_back(v);
    for (Var v : part.v_b) local.push_back(v);
    check_cap(shared.size() + local.size(), cap, "project_common");

    std::vector<Clause> all(a);
    all.insert(all.end(), b.begin(), b.end());

    TruthTable tt;
    tt.variables = shared;
    tt.table.assign(size_t{1} << shared.size(), false);
    for (uint64_t sbits = 0; sbits < tt.table.size(); ++sbits) {
        Assignment tau;
        for (size_t i = 0; i < shared.size(); ++i) tau.set(shared[i], (sbits >> i) & 1);
        bool found = false;
        for (uint64_t lbits = 0; lbits < (size_t{1} << local.size()) && !found; ++lbits) {
            Assignment full = tau;
            for (size_t i = 0; i < local.size(); ++i) full.set(local[i], (lbits >> i) & 1);
            found = matrix_satisfied(all, full);
        }
        tt.table[sbits] = found;
    }
    return tt;
}

bool is_generalized_interpolant(const Ast& interpolant, const SsatFormula& f, const Partition& part,
                                std::optional<uint32_t> cap) {
    // item (1): variables confined to V_{A,B}
    for (Var v : ast::vars(interpolant))
        if (part.var_side(v) != VarSide::Shared) return false;

    std::vector<Clause> a, b;
    for (uint32_t i : part.a_clauses) a.push_back(f.matrix[i]);
    for (uint32_t i : part.b_clauses) b.push_back(f.matrix[i]);
    TruthTable s = project_common(a, b, part, cap);

    std::vector<Var> shared = s.variables;
    std::vector<Var> local;
    for (Var v : part.v_a) local.push_back(v);
    for (Var v : part.v_b) local.push_back(v);

    // items (2) and (3): probability zero is plain unsatisfiability here
    for (uint64_t sbits = 0; sbits < s.table.size(); ++sbits) {
        Assignment tau;
        for (size_t i = 0; i < shared.size(); ++i) tau.set(shared[i], (sbits >> i) & 1);
        if (s.at(sbits)) continue; // !S fails, both conjunctions false
        bool i_val = ast::eval(interpolant, tau);
        for (uint64_t lbits = 0; lbits < (size_t{1} << local.size()); ++lbits) {
            Assignment full = tau;
            for (size_t i = 0; i < local.size(); ++i) full.set(local[i], (lbits >> i) & 1);
            bool a_val = true, b_val = true;
            for (const Clause& c : a)
                if (eval_clause(c, full) != TruthValue::True) {
                    a_val = false;
                    break;
                }
            for (const Clause& c : b)
                if (eval_clause(c, full) != TruthValue::True) {
                    b_val = false;
                    break;
                }
            if (a_val && !i_val) return false; // A && !S && !I satisfiable
            if (i_val && b_val) return false;  // I && B && !S satisfiable
        }
    }
    return true;
}

} // namespace ssatc
