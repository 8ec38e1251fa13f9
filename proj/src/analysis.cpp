#include "ssatc/analysis.hpp"

#include "ssatc/error.hpp"

#include <functional>
#include <future>
#include <sstream>

namespace ssatc {

namespace {

std::vector<Var> canonical_vars(const Mdp& m) {
    std::vector<Var> out;
    for (uint32_t s = 0; s < m.states.size(); ++s) out.push_back(Var(s + 1));
    return out;
}

Ast rebase_interpolant(const BackstepQuery& q, const Ast& itp) {
    std::map<uint32_t, Var> back;
    for (uint32_t s = 0; s < q.common_state_vars.size(); ++s) back[q.common_state_vars[s].idx] = Var(s + 1);
    return ast::simplify(ast::remap_vars(itp, back));
}

Rational timed_solve(const SsatFormula& f, std::chrono::milliseconds& out_ms) {
    auto start = std::chrono::steady_clock::now();
    SolveResult res = solve(f);
    out_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return res.prob;
}

void check_monotone(const BoundSequence& seq) {
    for (size_t i = 1; i < seq.entries.size(); ++i) {
        bool ok = seq.kind == BoundSeqKind::UpperReach
                      ? !(seq.entries[i].value > seq.entries[i - 1].value)
                      : !(seq.entries[i].value < seq.entries[i - 1].value);
        if (!ok)
            throw Error(Errc::InternalCheckFailed,
                        "bound sequence not monotone at k=" + std::to_string(seq.entries[i].k));
    }
}

BoundSequence solve_sequence(BoundSeqKind kind, unsigned k_max, unsigned jobs,
                             const std::function<SsatFormula(unsigned)>& build,
                             const std::function<Rational(const Rational&)>& post) {
    BoundSequence seq;
    seq.kind = kind;
    seq.entries.resize(k_max + 1);
    auto run_one = [&](unsigned k) {
        std::chrono::milliseconds ms{0};
        Rational pr = timed_solve(build(k), ms);
        seq.entries[k] = BoundEntry{k, post(pr), ms};
    };
    if (jobs <= 1) {
        for (unsigned k = 0; k <= k_max; ++k) run_one(k);
    } else {
        std::vector<std::future<void>> futs;
        for (unsigned k = 0; k <= k_max; ++k)
            futs.push_back(std::async(std::launch::async, run_one, k));
        for (auto& f : futs) f.get();
    }
    check_monotone(seq);
    return seq;
}

FixpointTrace fixpoint_loop(const Mdp& m, unsigned j, unsigned max_iter, BackstepMode mode,
                            const Ast& seed) {
    FixpointTrace trace;
    trace.j = j;
    Ast current = ast::simplify(seed);
    trace.iterations.push_back({0, nullptr, current, ast_to_state_set(m, current)});
    std::vector<Var> cvars = canonical_vars(m);
    for (unsigned k = 0; k < max_iter; ++k) {
        BackstepQuery q = build_backstep_query(m, current, j, mode);
        SolveOptions opts;
        opts.emit_proof = true;
        opts.emit_interpolant = true;
        opts.dc = DcChoice::const_true(); // overapproximating direction
        SolveResult res = solve(q.formula, q.partition, opts);
        Ast itp = rebase_interpolant(q, res.interpolant);
        Ast next = mode == BackstepMode::Reach
                       ? ast::simplify(ast::disjunction2(current, itp))
                       : ast::simplify(ast::conjunction2(current, ast::negation(itp)));
        trace.iterations.push_back({k + 1, itp, next, ast_to_state_set(m, next)});
        bool stable = mode == BackstepMode::Reach ? check_implication(next, current, cvars)
                                                  : check_implication(current, next, cvars);
        if (stable) {
            trace.stabilized_at = k + 1;
            trace.result = current;
            trace.result_set = ast_to_state_set(m, current);
            return trace;
        }
        current = next;
    }
    throw Error(Errc::NotStabilized,
                "fixpoint did not stabilize within " + std::to_string(max_iter) + " iterations");
}

} // namespace

std::string bound_sequence_csv(const BoundSequence& seq) {
    std::ostringstream out;
    out << "k,value_exact,value_decimal,solve_ms\n";
    for (const BoundEntry& e : seq.entries)
        out << e.k << "," << e.value.to_string() << "," << e.value.to_decimal() << ","
            << e.solve_time.count() << "\n";
    return out.str();
}

BoundSequence parse_bound_sequence_csv(const std::string& text, BoundSeqKind kind) {
    BoundSequence seq;
    seq.kind = kind;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "k,value_exact,value_decimal,solve_ms")
        throw Error(Errc::ParseError, "bad bound-sequence CSV header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string k_s, exact_s, dec_s, ms_s;
        if (!std::getline(ls, k_s, ',') || !std::getline(ls, exact_s, ',') ||
            !std::getline(ls, dec_s, ',') || !std::getline(ls, ms_s))
            throw Error(Errc::ParseError, "bad bound-sequence CSV row: " + line);
        BoundEntry e;
        e.k = static_cast<unsigned>(std::stoul(k_s));
        e.value = Rational::from_string(exact_s);
        e.solve_time = std::chrono::milliseconds(std::stoll(ms_s));
        seq.entries.push_back(std::move(e));
    }
    return seq;
}

FixpointTrace backward_fixpoint(const Mdp& m, unsigned j, unsigned max_iter) {
    if (!m.target) throw Error(Errc::MissingTarget, "backward fixpoint needs a target set");
    if (j < 1) throw Error(Errc::InvalidArgument, "j must be >= 1");
    return fixpoint_loop(m, j, max_iter, BackstepMode::Reach, state_set_to_ast(m, *m.target));
}

FixpointTrace kernel_fixpoint(const Mdp& m, unsigned j, unsigned max_iter) {
    if (!m.region) throw Error(Errc::MissingRegion, "kernel fixpoint needs a region set");
    if (j < 1) throw Error(Errc::InvalidArgument, "j must be >= 1");
    return fixpoint_loop(m, j, max_iter, BackstepMode::Stability, state_set_to_ast(m, *m.region));
}

BoundSequence lower_bounds_reach(const Mdp& m, unsigned k_max, unsigned jobs) {
    if (!m.target) throw Error(Errc::MissingTarget, "reachability bounds need a target set");
    return solve_sequence(
        BoundSeqKind::LowerReach, k_max, jobs, [&](unsigned k) { return build_pbmc(m, k); },
        [](const Rational& p) { return p; });
}

BoundSequence upper_bounds_reach(const Mdp& m, const Ast& breach, unsigned k_max, unsigned jobs) {
    return solve_sequence(
        BoundSeqKind::UpperReach, k_max, jobs, [&](unsigned k) { return build_upper_bound(m, breach, k); },
        [](const Rational& p) { return p; });
}

BoundSequence lower_bounds_stability(const Mdp& m, const Ast& kernel, unsigned k_max, bool verify,
                                     unsigned jobs) {
    if (verify && !verify_kernel(m, kernel))
        throw Error(Errc::KernelNotInvariant, "kernel predicate is not an invariance kernel");
    return solve_sequence(
        BoundSeqKind::LowerStability, k_max, jobs,
        [&](unsigned k) { return build_kernel_avoid(m, kernel, k); },
        [](const Rational& p) { return p.one_minus(); });
}

bool verify_kernel(const Mdp& m, const Ast& kernel) {
    StateSet k = ast_to_state_set(m, kernel);
    if (m.region) {
        for (uint32_t s : k)
            if (!m.region->count(s)) return false;
    }
    for (uint32_t s : k)
        for (uint32_t a : m.available_actions(s))
            for (const auto& [t, p] : m.trans[s][a])
                if (!k.count(t) && p > Rational::zero()) return false;
    return true;
}

SafetyReport verify_safety(const Mdp& m, const Rational& theta, const Budget& budget) {
    if (!m.target) throw Error(Errc::MissingTarget, "safety verification needs a target set");
    SafetyReport report;
    report.verdict.theta = theta;
    report.lower_bounds.kind = BoundSeqKind::LowerReach;
    report.upper_bounds.kind = BoundSeqKind::UpperReach;

    unsigned max_iter = budget.max_iter.value_or(static_cast<unsigned>(m.states.size()) + 1);
    Ast breach;
    try {
        report.fixpoint = backward_fixpoint(m, budget.j, max_iter);
        breach = report.fixpoint->result;
    } catch (const Error& e) {
        if (e.code() != Errc::NotStabilized) throw;
        report.verdict.note = "backward fixpoint did not stabilize; upper bounds unavailable";
    }

    Rational max_lb(0);
    Rational min_ub(1);
    for (unsigned k = 0; k <= budget.k_max; ++k) {
        std::chrono::milliseconds ms{0};
        Rational lb = timed_solve(build_pbmc(m, k), ms);
        report.lower_bounds.entries.push_back({k, lb, ms});
        if (lb > max_lb) max_lb = lb;
        if (max_lb > min_ub) throw Error(Errc::InternalCheckFailed, "lb/ub sandwich violated");
        if (lb > theta) {
            report.verdict.outcome = Outcome::Falsified;
            report.verdict.witness_k = k;
            return report;
        }
        if (breach) {
            Rational ub = timed_solve(build_upper_bound(m, breach, k), ms);
            report.upper_bounds.entries.push_back({k, ub, ms});
            if (ub < min_ub) min_ub = ub;
            if (max_lb > min_ub) throw Error(Errc::InternalCheckFailed, "lb/ub sandwich violated");
            if (ub <= theta) {
                report.verdict.outcome = Outcome::Verified;
                report.verdict.witness_k = k;
                return report;
            }
        }
    }
    report.verdict.outcome = Outcome::Unknown;
    check_monotone(report.lower_bounds);
    check_monotone(report.upper_bounds);
    return report;
}

StabilityReport verify_stability(const Mdp& m, const Rational& theta, const Budget& budget) {
    if (!m.region) throw Error(Errc::MissingRegion, "stability verification needs a region set");
    StabilityReport report;
    report.verdict.theta = theta;
    report.lower_bounds.kind = BoundSeqKind::LowerStability;

    unsigned max_iter = budget.max_iter.value_or(static_cast<unsigned>(m.states.size()) + 1);
    report.fixpoint = kernel_fixpoint(m, budget.j, max_iter);
    report.kernel_verified = verify_kernel(m, report.fixpoint.result);
    if (!report.kernel_verified)
        throw Error(Errc::InternalCheckFailed, "fixpoint produced a non-invariant kernel");
    if (report.fixpoint.result_set.empty())
        report.verdict.note = "kernel is empty; lower bounds stay at 0";

    for (unsigned k = 0; k <= budget.k_max; ++k) {
        std::chrono::milliseconds ms{0};
        Rational lb = timed_solve(build_kernel_avoid(m, report.fixpoint.result, k), ms).one_minus();
        report.lower_bounds.entries.push_back({k, lb, ms});
        if (lb >= theta) {
            report.verdict.outcome = Outcome::Verified;
            report.verdict.witness_k = k;
            return report;
        }
    }
    report.verdict.outcome = Outcome::Unknown;
    check_monotone(report.lower_bounds);
    return report;
}

} // namespace ssatc
