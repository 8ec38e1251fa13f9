#include "ssatc/solver.hpp"

#include "ssatc/cnf.hpp"
#include "ssatc/error.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace ssatc {

void SolveOptions::validate() const {
    if (emit_interpolant && !emit_proof)
        throw Error(Errc::InvalidArgument, "emit_interpolant requires emit_proof");
    if (dc.policy == DcPolicy::Custom)
        throw Error(Errc::InvalidArgument,
                    "the solver restricts DC to the constant policies; custom formulas are a "
                    "rule-level facility");
    if (pruning != Pruning::None && emit_proof)
        throw Error(Errc::InvalidArgument, "thresholding is unavailable while emitting proofs");
    if (pruning != Pruning::None &&
        (threshold_lo < Rational::zero() || threshold_hi > Rational::one() || threshold_lo > threshold_hi))
        throw Error(Errc::InvalidArgument, "thresholds must satisfy 0 <= lo <= hi <= 1");
}

namespace {

constexpr int32_t kDecision = -1;

struct MemoKey {
    uint32_t pos;
    std::vector<uint64_t> unsat_bits;
    std::vector<uint64_t> future; // (var << 1 | value) for assigned vars at positions >= pos

    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    size_t operator()(const MemoKey& k) const {
        size_t h = k.pos * 0x9e3779b97f4a7c15ull;
        for (uint64_t w : k.unsat_bits) h = (h ^ w) * 1099511628211ull;
        for (uint64_t w : k.future) h = (h ^ (w + 0x517cc1b727220a95ull)) * 1099511628211ull;
        return h;
    }
};

struct ThreshResult {
    BoundKind kind;
    Rational value;
};

/// One solve call. Confined to the call; inputs are immutable.
class Engine {
public:
    Engine(const SsatFormula& f, const Partition* part, const SolveOptions& opts)
        : f_(f), part_(part), opts_(opts) {
        const size_t n_clauses = f_.matrix.size();
        clause_lits_.resize(n_clauses);
        clause_max_pos_var_.resize(n_clauses);
        true_count_.assign(n_clauses, 0);
        false_count_.assign(n_clauses, 0);
        occ_.assign(f_.num_vars + 1, {});
        active_occ_.assign(f_.num_vars + 1, 0);
        value_.assign(f_.num_vars + 1, -1);
        reason_.assign(f_.num_vars + 1, kDecision);
        if (part_) {
            clause_in_a_.assign(n_clauses, false);
            for (uint32_t i : part_->a_clauses) clause_in_a_[i] = true;
        }
        for (uint32_t ci = 0; ci < n_clauses; ++ci) {
            const Clause& c = f_.matrix[ci];
            clause_lits_[ci].assign(c.begin(), c.end());
            uint32_t best_pos = 0;
            Var best_var;
            for (Lit l : c) {
                occ_[l.var().idx].push_back({ci, l.positive()});
                ++active_occ_[l.var().idx];
                uint32_t p = f_.prefix.position(l.var());
                if (p >= best_pos) {
                    best_pos = p;
                    best_var = l.var();
                }
            }
            clause_max_pos_var_[ci] = best_var;
            if (c.empty()) conflict_ = static_cast<int32_t>(ci);
        }
        logging_ = opts_.emit_proof;
        interpolating_ = opts_.emit_interpolant;
        if (logging_) r1_step_.assign(n_clauses, -1);
    }

    SolveResult run() {
        SolveResult res;
        // root-level propagation
        if (conflict_ == -1) {
            for (uint32_t ci = 0; ci < clause_lits_.size(); ++ci) maybe_queue_unit(ci);
            propagate();
        }
        if (logging_) {
            NodeRes node = conflict_ != -1 ? conflict_node()
                          : all_satisfied() ? sat_leaf_node()
                                            : proof_rec(1);
            if (!node.clause.empty())
                throw Error(Errc::InternalCheckFailed, "derivation did not reach the empty clause");
            res.prob = node.prob;
            res.kind = BoundKind::Exact;
            ProofTrace trace;
            trace.formula = f_;
            if (part_) trace.partition = *part_;
            trace.steps = collect_derivation(node.step);
            if (interpolating_) res.interpolant = node.itp;
            res.trace = std::move(trace);
        } else if (opts_.pruning == Pruning::Thresholding) {
            ThreshResult r = conflict_ != -1 ? ThreshResult{BoundKind::Exact, Rational::zero()}
                             : all_satisfied()
                                 ? ThreshResult{BoundKind::Exact, future_weight(1)}
                                 : thresh_rec(1, opts_.threshold_lo, opts_.threshold_hi);
            res.prob = r.value;
            res.kind = r.kind;
        } else {
            res.prob = conflict_ != -1 ? Rational::zero()
                       : all_satisfied() ? future_weight(1)
                                         : value_rec(1);
            res.kind = BoundKind::Exact;
        }
        res.stats = stats_;
        return res;
    }

private:
    const SsatFormula& f_;
    const Partition* part_;
    const SolveOptions& opts_;
    SolveStats stats_;

    std::vector<std::vector<Lit>> clause_lits_;
    std::vector<Var> clause_max_pos_var_;
    std::vector<std::vector<std::pair<uint32_t, bool>>> occ_; // var -> (clause, positive)
    std::vector<int> true_count_, false_count_;
    std::vector<int> active_occ_;
    std::vector<int8_t> value_;   // -1 / 0 / 1
    std::vector<int32_t> reason_; // clause idx, kDecision for decisions
    std::vector<uint32_t> trail_; // var indices
    std::vector<uint32_t> unit_queue_;
    size_t satisfied_ = 0;
    int32_t conflict_ = -1;

    bool logging_ = false;
    bool interpolating_ = false;
    std::vector<DerivationStep> steps_;
    std::vector<int32_t> r1_step_;
    std::vector<bool> clause_in_a_;

    std::unordered_map<MemoKey, Rational, MemoKeyHash> memo_;

    // ---- assignment machinery ----

    bool assigned(Var v) const { return value_[v.idx] != -1; }

    void mark_satisfied(uint32_t ci) {
        ++satisfied_;
        for (Lit l : clause_lits_[ci]) --active_occ_[l.var().idx];
    }

    void unmark_satisfied(uint32_t ci) {
        --satisfied_;
        for (Lit l : clause_lits_[ci]) ++active_occ_[l.var().idx];
    }

    void enqueue(Var v, bool val, int32_t reason) {
        value_[v.idx] = val ? 1 : 0;
        reason_[v.idx] = reason;
        trail_.push_back(v.idx);
        for (auto [ci, positive] : occ_[v.idx]) {
            if (positive == val) {
                if (true_count_[ci]++ == 0) mark_satisfied(ci);
            } else {
                ++false_count_[ci];
                if (true_count_[ci] == 0) {
                    const int sz = static_cast<int>(clause_lits_[ci].size());
                    if (false_count_[ci] == sz && conflict_ == -1)
                        conflict_ = static_cast<int32_t>(ci);
                    else if (false_count_[ci] == sz - 1)
                        unit_queue_.push_back(ci);
                }
            }
        }
    }

    void maybe_queue_unit(uint32_t ci) {
        if (true_count_[ci] == 0 &&
            false_count_[ci] == static_cast<int>(clause_lits_[ci].size()) - 1)
            unit_queue_.push_back(ci);
    }

    void propagate() {
        while (!unit_queue_.empty() && conflict_ == -1) {
            uint32_t ci = unit_queue_.back();
            unit_queue_.pop_back();
            if (true_count_[ci] > 0) continue;
            if (false_count_[ci] != static_cast<int>(clause_lits_[ci].size()) - 1) continue;
            Lit unit;
            for (Lit l : clause_lits_[ci])
                if (!assigned(l.var())) {
                    unit = l;
                    break;
                }
            // propagate only when the unit literal is the clause's
            // prefix-deepest variable, so reason-side resolutions always
            // satisfy R.3's inner-pivot side condition
            if (unit.var() != clause_max_pos_var_[ci]) continue;
            ++stats_.propagations;
            enqueue(unit.var(), unit.positive(), static_cast<int32_t>(ci));
        }
        if (conflict_ != -1) unit_queue_.clear();
    }

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            uint32_t vidx = trail_.back();
            trail_.pop_back();
            bool val = value_[vidx] == 1;
            for (auto [ci, positive] : occ_[vidx]) {
                if (positive == val) {
                    if (--true_count_[ci] == 0) unmark_satisfied(ci);
                } else {
                    --false_count_[ci];
                }
            }
            value_[vidx] = -1;
            reason_[vidx] = kDecision;
        }
        conflict_ = -1;
        unit_queue_.clear();
    }

    bool all_satisfied() const { return satisfied_ == clause_lits_.size(); }

    const Quantifier& quantifier_at(uint32_t pos) const { return f_.prefix.quantifier_at(pos); }

    Rational weight_of(Var v, bool val) const {
        const Quantifier& q = f_.prefix.quantifier_of(v);
        if (!q.is_random()) return Rational::one();
        return val ? q.prob : q.prob.one_minus();
    }

    /// Product of weights of assigned randomized variables at prefix
    /// positions >= pos: the value of an all-satisfied residual.
    Rational future_weight(uint32_t pos) const {
        Rational w = Rational::one();
        for (uint32_t vidx : trail_) {
            uint32_t p = f_.prefix.position(Var(vidx));
            if (p < pos) continue;
            const Quantifier& q = f_.prefix.quantifier_at(p);
            if (q.is_random()) w *= value_[vidx] == 1 ? q.prob : q.prob.one_minus();
        }
        return w;
    }

    void note_depth(uint32_t pos) {
        if (pos > stats_.peak_depth) stats_.peak_depth = pos;
    }

    // ---- plain value mode ----

    Rational value_rec(uint32_t pos) {
        note_depth(pos);
        if (all_satisfied()) return future_weight(pos);
        if (pos > f_.prefix.size())
            throw Error(Errc::InternalCheckFailed, "undetermined matrix past the prefix");
        Var v = f_.prefix.var_at(pos);
        if (assigned(v)) {
            Rational sub = value_rec(pos + 1);
            const Quantifier& q = quantifier_at(pos);
            if (!q.is_random()) return sub;
            return (value_[v.idx] == 1 ? q.prob : q.prob.one_minus()) * sub;
        }
        if (active_occ_[v.idx] == 0) return value_rec(pos + 1);

        MemoKey key;
        if (opts_.memoize) {
            key = make_key(pos);
            auto it = memo_.find(key);
            if (it != memo_.end()) {
                ++stats_.cache_hits;
                return it->second;
            }
        }
        Rational when_true = branch_value(v, true, pos);
        Rational when_false = branch_value(v, false, pos);
        const Quantifier& q = quantifier_at(pos);
        Rational out = q.is_random()
                           ? q.prob * when_true + q.prob.one_minus() * when_false
                           : std::max(when_true, when_false);
        if (opts_.memoize) memo_.emplace(std::move(key), out);
        return out;
    }

    Rational branch_value(Var v, bool val, uint32_t pos) {
        size_t mark = trail_.size();
        ++stats_.decisions;
        enqueue(v, val, kDecision);
        propagate();
        Rational out;
        if (conflict_ != -1) {
            ++stats_.conflicts;
            out = Rational::zero();
        } else if (all_satisfied()) {
            ++stats_.sat_leaves;
            out = future_weight(pos + 1);
        } else {
            out = value_rec(pos + 1);
        }
        undo_to(mark);
        return out;
    }

    MemoKey make_key(uint32_t pos) const {
        MemoKey k;
        k.pos = pos;
        k.unsat_bits.assign((clause_lits_.size() + 63) / 64, 0);
        for (uint32_t ci = 0; ci < clause_lits_.size(); ++ci)
            if (true_count_[ci] == 0) k.unsat_bits[ci >> 6] |= 1ull << (ci & 63);
        for (uint32_t vidx : trail_)
            if (f_.prefix.position(Var(vidx)) >= pos)
                k.future.push_back((static_cast<uint64_t>(vidx) << 1) | (value_[vidx] == 1 ? 1 : 0));
        std::sort(k.future.begin(), k.future.end());
        return k;
    }

    // ---- thresholding mode ----

    // Threshold parameters may leave [0,1]; the claim contracts
    // (AtMost(b): value <= b <= lo, AtLeast(b): value >= b >= hi) hold for
    // out-of-range parameters as well, an out-of-range side simply never
    // fires.
    ThreshResult thresh_rec(uint32_t pos, const Rational& lo, const Rational& hi) {
        note_depth(pos);
        if (all_satisfied()) return {BoundKind::Exact, future_weight(pos)};
        if (pos > f_.prefix.size())
            throw Error(Errc::InternalCheckFailed, "undetermined matrix past the prefix");
        Var v = f_.prefix.var_at(pos);
        const Quantifier& q_here = f_.prefix.quantifier_of(v);
        if (assigned(v)) {
            if (!q_here.is_random()) return thresh_rec(pos + 1, lo, hi);
            Rational w = value_[v.idx] == 1 ? q_here.prob : q_here.prob.one_minus();
            ThreshResult sub = thresh_rec(pos + 1, lo / w, hi / w);
            return {sub.kind, w * sub.value};
        }
        if (active_occ_[v.idx] == 0) return thresh_rec(pos + 1, lo, hi);

        if (opts_.memoize) {
            auto it = memo_.find(make_key(pos));
            if (it != memo_.end()) {
                ++stats_.cache_hits;
                return {BoundKind::Exact, it->second};
            }
        }

        ThreshResult out = q_here.is_random() ? thresh_random(v, pos, q_here.prob, lo, hi)
                                              : thresh_exists(v, pos, lo, hi);
        if (opts_.memoize && out.kind == BoundKind::Exact) memo_.emplace(make_key(pos), out.value);
        return out;
    }

    ThreshResult thresh_branch(Var v, bool val, uint32_t pos, const Rational& lo, const Rational& hi) {
        size_t mark = trail_.size();
        ++stats_.decisions;
        enqueue(v, val, kDecision);
        propagate();
        ThreshResult out;
        if (conflict_ != -1) {
            ++stats_.conflicts;
            out = {BoundKind::Exact, Rational::zero()};
        } else if (all_satisfied()) {
            ++stats_.sat_leaves;
            out = {BoundKind::Exact, future_weight(pos + 1)};
        } else {
            out = thresh_rec(pos + 1, lo, hi);
        }
        undo_to(mark);
        return out;
    }

    ThreshResult thresh_exists(Var v, uint32_t pos, const Rational& lo, const Rational& hi) {
        ThreshResult left = thresh_branch(v, true, pos, lo, hi);
        if (left.kind == BoundKind::AtLeast) return left;
        if (left.kind == BoundKind::Exact) {
            if (left.value.is_one()) return left; // max is decided
            if (left.value >= hi) return {BoundKind::AtLeast, left.value};
        }
        Rational lo2 = left.kind == BoundKind::Exact ? std::max(lo, left.value) : lo;
        ThreshResult right = thresh_branch(v, false, pos, lo2, hi);
        if (right.kind == BoundKind::AtLeast) return right;
        if (left.kind == BoundKind::Exact && right.kind == BoundKind::Exact)
            return {BoundKind::Exact, std::max(left.value, right.value)};
        if (left.kind == BoundKind::Exact) { // right AtMost(b), b <= lo2
            if (right.value <= left.value) return {BoundKind::Exact, left.value};
            return {BoundKind::AtMost, right.value};
        }
        // left AtMost(b1)
        if (right.kind == BoundKind::Exact) {
            if (right.value >= left.value) return {BoundKind::Exact, right.value};
            return {BoundKind::AtMost, left.value};
        }
        return {BoundKind::AtMost, std::max(left.value, right.value)};
    }

    ThreshResult thresh_random(Var v, uint32_t pos, const Rational& w, const Rational& lo,
                               const Rational& hi) {
        Rational wbar = w.one_minus();
        // conclude from the left branch alone when possible
        ThreshResult left = thresh_branch(v, true, pos, (lo - wbar) / w, hi / w);
        if (left.kind == BoundKind::AtMost) {
            Rational bound = w * left.value + wbar;
            if (bound <= lo) return {BoundKind::AtMost, bound};
            // left bound too weak to conclude; recompute the branch exactly
            left = exact_branch(v, true, pos);
        } else if (left.kind == BoundKind::AtLeast) {
            Rational bound = w * left.value;
            if (bound >= hi) return {BoundKind::AtLeast, bound};
            left = exact_branch(v, true, pos);
        }
        // left is exact here; the right branch stays within [0,1], so the
        // node value lies in [w*L, w*L + wbar] and may already be decided
        Rational floor_value = w * left.value;
        if (floor_value + wbar <= lo) return {BoundKind::AtMost, floor_value + wbar};
        if (floor_value >= hi) return {BoundKind::AtLeast, floor_value};
        Rational lo2 = (lo - w * left.value) / wbar;
        Rational hi2 = (hi - w * left.value) / wbar;
        ThreshResult right = thresh_branch(v, false, pos, lo2, hi2);
        Rational combined = w * left.value + wbar * right.value;
        switch (right.kind) {
            case BoundKind::Exact: return {BoundKind::Exact, combined};
            case BoundKind::AtMost: return combined <= lo ? ThreshResult{BoundKind::AtMost, combined}
                                                          : exact_both(v, pos, w);
            case BoundKind::AtLeast: return combined >= hi ? ThreshResult{BoundKind::AtLeast, combined}
                                                           : exact_both(v, pos, w);
        }
        return {BoundKind::Exact, combined};
    }

    ThreshResult exact_branch(Var v, bool val, uint32_t pos) {
        size_t mark = trail_.size();
        ++stats_.decisions;
        enqueue(v, val, kDecision);
        propagate();
        Rational out;
        if (conflict_ != -1) out = Rational::zero();
        else if (all_satisfied()) out = future_weight(pos + 1);
        else out = value_rec(pos + 1);
        undo_to(mark);
        return {BoundKind::Exact, out};
    }

    ThreshResult exact_both(Var v, uint32_t pos, const Rational& w) {
        ThreshResult l = exact_branch(v, true, pos);
        ThreshResult r = exact_branch(v, false, pos);
        return {BoundKind::Exact, w * l.value + w.one_minus() * r.value};
    }

    // ---- proof mode ----

    struct NodeRes {
        Rational prob;
        Clause clause;
        uint32_t step = 0;
        Ast itp; // set iff interpolating
    };

    uint32_t log_step(DerivationStep s) {
        steps_.push_back(std::move(s));
        return static_cast<uint32_t>(steps_.size() - 1);
    }

    /// Restricts the log to the ancestor DAG of the concluding step; branch
    /// combination may adopt one side's clause, leaving the other side's
    /// steps unused, and the trace must end in the concluding step.
    std::vector<DerivationStep> collect_derivation(uint32_t final_step) {
        std::vector<bool> keep(steps_.size(), false);
        std::vector<uint32_t> stack = {final_step};
        while (!stack.empty()) {
            uint32_t id = stack.back();
            stack.pop_back();
            if (keep[id]) continue;
            keep[id] = true;
            for (uint32_t p : steps_[id].premises) stack.push_back(p);
        }
        std::vector<uint32_t> remap(steps_.size(), 0);
        std::vector<DerivationStep> out;
        for (uint32_t id = 0; id < steps_.size(); ++id) {
            if (!keep[id]) continue;
            remap[id] = static_cast<uint32_t>(out.size());
            DerivationStep s = std::move(steps_[id]);
            for (uint32_t& p : s.premises) p = remap[p];
            out.push_back(std::move(s));
        }
        return out;
    }

    NodeRes r1_node(uint32_t ci) {
        if (r1_step_[ci] == -1) {
            DerivationStep s;
            s.rule = interpolating_ ? Rule::R2_1 : Rule::R1;
            s.conclusion = {f_.matrix[ci], Rational::zero()};
            if (interpolating_) s.interpolant = ast::constant(!clause_in_a_[ci]);
            r1_step_[ci] = static_cast<int32_t>(log_step(std::move(s)));
        }
        uint32_t id = static_cast<uint32_t>(r1_step_[ci]);
        return {Rational::zero(), steps_[id].conclusion.clause, id, steps_[id].interpolant};
    }

    /// R.3 on pivot; left holds ~pivot, right holds pivot.
    NodeRes resolve_nodes(const NodeRes& left, const NodeRes& right, Var pivot) {
        AnnotatedClause ac;
        Ast itp;
        if (interpolating_) {
            InterpolatingConclusion ic = apply_interpolating_r3(
                {{left.clause, left.prob}, left.itp}, {{right.clause, right.prob}, right.itp}, pivot,
                f_, *part_);
            ac = std::move(ic.clause);
            itp = std::move(ic.interpolant);
        } else {
            ac = apply_r3({left.clause, left.prob}, {right.clause, right.prob}, pivot, f_);
        }
        DerivationStep s;
        s.rule = interpolating_ ? Rule::R2_3 : Rule::R3;
        s.premises = {left.step, right.step};
        s.pivot = pivot;
        s.conclusion = ac;
        s.interpolant = itp;
        uint32_t id = log_step(std::move(s));
        return {ac.prob, ac.clause, id, itp};
    }

    /// Eliminates propagated variables from the node clause, deepest first,
    /// stopping at the deepest decision. Reasons only introduce shallower
    /// variables, so every resolution here has an inner pivot.
    NodeRes peel(NodeRes node) {
        while (!node.clause.empty()) {
            Lit deepest;
            uint32_t best = 0;
            for (Lit l : node.clause) {
                uint32_t p = f_.prefix.position(l.var());
                if (p >= best) {
                    best = p;
                    deepest = l;
                }
            }
            Var dv = deepest.var();
            if (reason_[dv.idx] == kDecision) break;
            NodeRes reason = r1_node(static_cast<uint32_t>(reason_[dv.idx]));
            if (value_[dv.idx] == 1) {
                node = resolve_nodes(node, reason, dv); // node holds ~dv
            } else {
                node = resolve_nodes(reason, node, dv); // node holds dv
            }
        }
        return node;
    }

    NodeRes conflict_node() {
        ++stats_.conflicts;
        return peel(r1_node(static_cast<uint32_t>(conflict_)));
    }

    NodeRes sat_leaf_node() {
        ++stats_.sat_leaves;
        std::vector<Lit> opposite;
        Assignment witness;
        for (uint32_t vidx : trail_) {
            bool val = value_[vidx] == 1;
            witness.set(Var(vidx), val);
            opposite.push_back(Lit(Var(vidx), !val));
        }
        DerivationStep s;
        s.rule = interpolating_ ? Rule::R2_2 : Rule::R2;
        s.conclusion = {Clause(std::move(opposite)), Rational::one()};
        s.witness = std::move(witness);
        if (interpolating_) s.interpolant = opts_.dc.formula(*part_);
        uint32_t id = log_step(s);
        return peel({Rational::one(), s.conclusion.clause, id, s.interpolant});
    }

    NodeRes proof_branch(Var v, bool val, uint32_t pos) {
        size_t mark = trail_.size();
        ++stats_.decisions;
        enqueue(v, val, kDecision);
        propagate();
        NodeRes out = conflict_ != -1 ? conflict_node()
                      : all_satisfied() ? sat_leaf_node()
                                        : proof_rec(pos + 1);
        undo_to(mark);
        return out;
    }

    NodeRes proof_rec(uint32_t pos) {
        note_depth(pos);
        if (pos > f_.prefix.size())
            throw Error(Errc::InternalCheckFailed, "undetermined matrix past the prefix");
        Var v = f_.prefix.var_at(pos);
        if (assigned(v)) {
            NodeRes sub = proof_rec_or_leaf(pos + 1);
            Lit falsified(v, value_[v.idx] != 1); // the literal made false by the assignment
            if (!sub.clause.contains(falsified)) return sub;
            NodeRes reason = r1_node(static_cast<uint32_t>(reason_[v.idx]));
            if (value_[v.idx] == 1) return resolve_nodes(sub, reason, v);
            return resolve_nodes(reason, sub, v);
        }
        if (active_occ_[v.idx] == 0) return proof_rec_or_leaf(pos + 1);

        NodeRes when_true = proof_branch(v, true, pos);
        NodeRes when_false = proof_branch(v, false, pos);
        Lit neg(v, false), pos_lit(v, true);
        bool t_has = when_true.clause.contains(neg);
        bool f_has = when_false.clause.contains(pos_lit);
        if (t_has && f_has) return resolve_nodes(when_true, when_false, v);
        if (!t_has) return when_true;
        return when_false;
    }

    NodeRes proof_rec_or_leaf(uint32_t pos) {
        if (all_satisfied()) return sat_leaf_node();
        return proof_rec(pos);
    }
};

} // namespace

SolveResult solve(const SsatFormula& f, const SolveOptions& opts) {
    opts.validate();
    if (opts.emit_interpolant)
        throw Error(Errc::InvalidArgument, "emit_interpolant requires a partition");
    f.validate();
    Engine e(f, nullptr, opts);
    return e.run();
}

SolveResult solve(const SsatFormula& f, const Partition& part, const SolveOptions& opts) {
    opts.validate();
    f.validate();
    SolveOptions local = opts;
    if (local.emit_proof) local.memoize = false;
    Engine e(f, &part, local);
    SolveResult res = e.run();
    if (opts.emit_interpolant && !res.interpolant)
        throw Error(Errc::InternalCheckFailed, "no interpolant on the final step");
    return res;
}

std::pair<Rational, Ast> solve_partitioned(const std::vector<Clause>& a, const std::vector<Clause>& b,
                                           const Prefix& prefix, const DcChoice& dc) {
    SsatFormula f;
    f.prefix = prefix;
    f.matrix = a;
    f.matrix.insert(f.matrix.end(), b.begin(), b.end());
    uint32_t maxv = 0;
    for (const auto& [v, q] : prefix.bindings()) maxv = std::max(maxv, v.idx);
    for (const Clause& c : f.matrix)
        for (Lit l : c) maxv = std::max(maxv, l.var().idx);
    f.num_vars = maxv;
    f.validate();
    std::vector<uint32_t> a_idx(a.size());
    for (uint32_t i = 0; i < a.size(); ++i) a_idx[i] = i;
    Partition part = Partition::make(f, a_idx);

    SolveOptions opts;
    opts.emit_proof = true;
    opts.emit_interpolant = true;
    opts.dc = dc;
    opts.memoize = false;
    SolveResult res = solve(f, part, opts);
    return {res.prob, res.interpolant};
}

bool check_implication(const Ast& p, const Ast& q, std::span<const Var> vars) {
    uint32_t maxv = 0;
    for (Var v : vars) maxv = std::max(maxv, v.idx);
    for (Var v : ast::vars(p))
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw Error(Errc::InvalidArgument, "implication variable list misses a variable of P");
    for (Var v : ast::vars(q))
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw Error(Errc::InvalidArgument, "implication variable list misses a variable of Q");

    VarAllocator alloc(maxv + 1);
    CnfResult cp = to_cnf(p, alloc);
    CnfResult cq = negate_to_cnf(q, alloc);

    SsatFormula f;
    for (Var v : vars) f.prefix.append(v, Quantifier::exists());
    for (Var v : cp.aux_vars) f.prefix.append(v, Quantifier::exists());
    for (Var v : cq.aux_vars) f.prefix.append(v, Quantifier::exists());
    f.matrix = std::move(cp.clauses);
    f.matrix.insert(f.matrix.end(), cq.clauses.begin(), cq.clauses.end());
    f.num_vars = alloc.next_index() - 1;
    f.validate();

    SolveOptions opts;
    SolveResult res = solve(f, opts);
    return res.prob.is_zero();
}

} // namespace ssatc
