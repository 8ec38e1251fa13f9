#include "ssatc/analysis.hpp"
#include "ssatc/checker.hpp"
#include "ssatc/error.hpp"
#include "ssatc/mdp_oracle.hpp"
#include "ssatc/oracle.hpp"
#include "ssatc/sdimacs.hpp"
#include "ssatc/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace ssatc;
using nlohmann::json;

namespace {

// exit codes: 0 verified/solved, 1 falsified/rejected, 2 input error,
// 3 internal-consistency failure
constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

enum class OutputMode { Human, Jsonl };

std::string pr_line(const Rational& p) {
    std::string exact = p.to_string();
    std::string dec = p.to_decimal();
    if (exact == dec) return "Pr = " + exact;
    return "Pr = " + exact + " = " + dec;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot write " + path);
    out << content;
}

void print_sequence(const BoundSequence& seq, const std::string& label, OutputMode mode) {
    if (mode == OutputMode::Jsonl) {
        for (const BoundEntry& e : seq.entries) {
            json rec = {{"kind", label},
                        {"k", e.k},
                        {"value_exact", e.value.to_string()},
                        {"value_decimal", e.value.to_decimal()},
                        {"solve_ms", e.solve_time.count()}};
            std::cout << rec.dump() << "\n";
        }
        return;
    }
    std::cout << label << ":\n";
    for (const BoundEntry& e : seq.entries)
        std::cout << "  k=" << e.k << "  " << e.value.to_string() << " = " << e.value.to_decimal()
                  << "  (" << e.solve_time.count() << " ms)\n";
}

void print_fixpoint(const Mdp& m, const FixpointTrace& t, const char* cumulative_name,
                    OutputMode mode) {
    std::vector<std::string> names = canonical_state_names(m);
    if (mode == OutputMode::Jsonl) {
        for (const FixpointIteration& it : t.iterations) {
            json rec = {{"kind", "fixpoint"},
                        {"k", it.k},
                        {"cumulative", ast::to_sexpr(it.cumulative)},
                        {"state_set", format_state_set(m, it.state_set)}};
            if (it.interpolant) rec["interpolant"] = ast::to_sexpr(it.interpolant);
            std::cout << rec.dump() << "\n";
        }
        return;
    }
    for (const FixpointIteration& it : t.iterations) {
        std::cout << "  " << cumulative_name << "^" << it.k;
        if (it.interpolant) std::cout << "  I=" << ast::pretty(it.interpolant, names);
        std::cout << "  " << cumulative_name << "=" << ast::pretty(it.cumulative, names) << "  "
                  << format_state_set(m, it.state_set) << "\n";
    }
}

int cmd_solve(const std::string& path, const std::string& proof_out, const std::string& a_spec,
              bool dc_false, OutputMode mode) {
    SsatFormula f = read_sdimacs_file(path);

    std::optional<Partition> part;
    if (!a_spec.empty()) {
        std::vector<uint32_t> a_idx;
        std::istringstream ss(a_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            long v = std::stol(tok);
            if (v < 1 || static_cast<size_t>(v) > f.matrix.size())
                throw Error(Errc::PartitionNotCovering, "A-clause index out of range: " + tok);
            a_idx.push_back(static_cast<uint32_t>(v - 1));
        }
        part = Partition::make(f, a_idx);
    }

    SolveOptions opts;
    opts.emit_proof = !proof_out.empty() || part.has_value();
    opts.emit_interpolant = part.has_value();
    opts.dc = dc_false ? DcChoice::const_false() : DcChoice::const_true();

    SolveResult res = part ? solve(f, *part, opts) : solve(f, opts);

    if (res.trace) {
        CheckReport rep = check_proof(*res.trace);
        if (!rep.accepted || !rep.certified || !(*rep.certified == res.prob)) {
            std::cerr << "internal error: emitted trace failed the independent checker\n";
            return kInternal;
        }
        if (!proof_out.empty()) write_file(proof_out, write_trace_string(*res.trace));
    }

    if (mode == OutputMode::Jsonl) {
        json rec = {{"pr_exact", res.prob.to_string()},
                    {"pr_decimal", res.prob.to_decimal()},
                    {"decisions", res.stats.decisions},
                    {"propagations", res.stats.propagations},
                    {"peak_depth", res.stats.peak_depth}};
        if (res.interpolant) rec["interpolant"] = ast::to_sexpr(res.interpolant);
        std::cout << rec.dump() << "\n";
    } else {
        std::cout << pr_line(res.prob) << "\n";
        if (res.interpolant)
            std::cout << "interpolant: " << ast::pretty(res.interpolant, f.var_names) << "\n";
        if (!proof_out.empty()) std::cout << "proof written to " << proof_out << "\n";
        std::cout << "c decisions=" << res.stats.decisions << " propagations=" << res.stats.propagations
                  << " peak-depth=" << res.stats.peak_depth << "\n";
    }
    return kOk;
}

int cmd_check_proof(const std::string& path) {
    ProofTrace t = read_trace_file(path);
    CheckReport rep = check_proof(t);
    if (!rep.accepted) {
        if (auto bad = rep.first_invalid())
            std::cout << "rejected at step " << (*bad + 1) << ": " << rep.steps[*bad].message << "\n";
        else
            std::cout << "rejected: empty trace\n";
        return kFalsified;
    }
    if (rep.certified) {
        std::cout << "certified " << rep.certified->to_string() << " = " << rep.certified->to_decimal()
                  << "\n";
        if (rep.certified_interpolant)
            std::cout << "interpolant: " << ast::pretty(rep.certified_interpolant, t.formula.var_names)
                      << "\n";
    } else {
        std::cout << "accepted (no empty-clause conclusion)\n";
    }
    return kOk;
}

int cmd_reach(const std::string& path, const std::string& theta_s, unsigned j, unsigned kmax,
              const std::string& csv_out, OutputMode mode) {
    Mdp m = parse_mdp_file(path);
    if (!m.target) throw Error(Errc::MissingTarget, "MDP file declares no target");
    Rational theta = Rational::from_string(theta_s);
    if (theta < Rational(0) || theta > Rational(1))
        throw Error(Errc::InvalidArgument, "theta must lie in [0,1]");

    Budget budget;
    budget.j = j;
    budget.k_max = kmax;
    SafetyReport report = verify_safety(m, theta, budget);

    if (report.fixpoint) {
        if (mode == OutputMode::Human) std::cout << "backward fixpoint (j=" << j << "):\n";
        print_fixpoint(m, *report.fixpoint, "B", mode);
        if (mode == OutputMode::Human)
            std::cout << "BReach = " << format_state_set(m, report.fixpoint->result_set) << "\n";
    } else if (mode == OutputMode::Human) {
        std::cout << "backward fixpoint unavailable: " << report.verdict.note << "\n";
    }
    print_sequence(report.lower_bounds, "lb", mode);
    if (!report.upper_bounds.entries.empty()) print_sequence(report.upper_bounds, "ub", mode);
    if (!csv_out.empty()) {
        std::string csv = bound_sequence_csv(report.lower_bounds);
        if (!report.upper_bounds.entries.empty()) csv += bound_sequence_csv(report.upper_bounds);
        write_file(csv_out, csv);
    }

    const Verdict& v = report.verdict;
    switch (v.outcome) {
        case Outcome::Falsified: {
            const Rational& lb = report.lower_bounds.entries[*v.witness_k].value;
            std::cout << "FALSIFIED at k=" << *v.witness_k << " (lb=" << lb.to_string() << " > "
                      << theta.to_string() << ")\n";
            return kFalsified;
        }
        case Outcome::Verified: {
            const Rational& ub = report.upper_bounds.entries[*v.witness_k].value;
            std::cout << "VERIFIED at k=" << *v.witness_k << " (ub=" << ub.to_string() << " <= "
                      << theta.to_string() << ")\n";
            return kOk;
        }
        case Outcome::Unknown:
            std::cout << "UNKNOWN within k_max=" << kmax << "\n";
            return kOk;
    }
    return kOk;
}

int cmd_stability(const std::string& path, const std::string& theta_s, unsigned j, unsigned kmax,
                  const std::string& kernel_override, const std::string& csv_out, OutputMode mode) {
    Mdp m = parse_mdp_file(path);
    if (!m.region) throw Error(Errc::MissingRegion, "MDP file declares no region");
    Rational theta = Rational::from_string(theta_s);
    if (theta < Rational(0) || theta > Rational(1))
        throw Error(Errc::InvalidArgument, "theta must lie in [0,1]");

    Ast kernel;
    std::optional<FixpointTrace> fixpoint;
    if (!kernel_override.empty()) {
        StateSet set;
        std::istringstream ss(kernel_override);
        std::string name;
        while (ss >> name) set.insert(m.state_id(name));
        kernel = state_set_to_ast(m, set);
        if (!verify_kernel(m, kernel)) {
            std::cout << "supplied kernel is not invariant\n";
            return kInputError;
        }
    } else {
        fixpoint = kernel_fixpoint(m, j, static_cast<unsigned>(m.states.size()) + 1);
        kernel = fixpoint->result;
        if (mode == OutputMode::Human) std::cout << "kernel fixpoint (j=" << j << "):\n";
        print_fixpoint(m, *fixpoint, "Reg", mode);
    }
    StateSet kset = ast_to_state_set(m, kernel);
    bool invariant = verify_kernel(m, kernel);
    if (mode == OutputMode::Human) {
        std::cout << "Kernel = " << format_state_set(m, kset)
                  << (invariant ? " (invariant)" : " (NOT invariant)") << "\n";
        if (kset.empty()) std::cout << "kernel empty; lower bounds stay at 0\n";
    }
    if (!invariant) return kInternal;

    BoundSequence lbs = lower_bounds_stability(m, kernel, kmax, /*verify=*/false);
    print_sequence(lbs, "lb", mode);
    if (!csv_out.empty()) write_file(csv_out, bound_sequence_csv(lbs));

    for (const BoundEntry& e : lbs.entries) {
        if (!(e.value < theta)) {
            std::cout << "VERIFIED at k=" << e.k << " (lb=" << e.value.to_string() << " >= "
                      << theta.to_string() << ")\n";
            return kOk;
        }
    }
    std::cout << "UNKNOWN within k_max=" << kmax << " (this pipeline cannot falsify)\n";
    return kOk;
}

int cmd_selftest(uint64_t seed, unsigned count) {
    std::mt19937 rng(static_cast<uint32_t>(seed));
    auto pick = [&](uint32_t lo, uint32_t hi) {
        return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
    };
    SolveOptions opts;
    opts.emit_proof = true;
    for (unsigned i = 0; i < count; ++i) {
        SsatFormula f;
        f.num_vars = pick(1, 10);
        static const Rational probs[] = {Rational(1, 2), Rational(1, 3), Rational(4, 5)};
        for (uint32_t v = 1; v <= f.num_vars; ++v)
            f.prefix.append(Var(v), pick(0, 1) ? Quantifier::random(probs[pick(0, 2)])
                                               : Quantifier::exists());
        uint32_t n_clauses = pick(1, 8);
        for (uint32_t c = 0; c < n_clauses; ++c) {
            std::vector<Lit> lits;
            for (uint32_t l = 0; l < pick(1, 3); ++l)
                lits.push_back(Lit(Var(pick(1, f.num_vars)), pick(0, 1) == 1));
            Clause cl(std::move(lits));
            if (cl.tautological()) {
                --c;
                continue;
            }
            f.matrix.push_back(std::move(cl));
        }
        SolveResult res = solve(f, opts);
        if (!(res.prob == exact_pr(f)) || !check_proof(*res.trace).accepted) {
            std::cout << "selftest FAILED on instance " << i << ":\n" << write_sdimacs_string(f);
            return kInternal;
        }
    }
    std::cout << "selftest passed: " << count << " instances\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ssatc: SSAT solving with certified S-resolution proofs,\n"
                 "generalized Craig interpolation, and MDP reachability/stability analysis"};
    app.require_subcommand(1);

    OutputMode mode = OutputMode::Human;
    app.add_flag_callback("--jsonl", [&] { mode = OutputMode::Jsonl; },
                          "machine-readable JSON-lines output");

    auto* solve_cmd = app.add_subcommand("solve", "solve an SDIMACS formula");
    std::string solve_path, proof_out, a_spec;
    bool dc_false = false;
    solve_cmd->add_option("file", solve_path, "SDIMACS input")->required();
    solve_cmd->add_option("--proof", proof_out, "write the S-resolution trace here");
    solve_cmd->add_option("--a", a_spec, "comma-separated 1-based A-clause indices (interpolation)");
    solve_cmd->add_flag("--dc-false", dc_false, "use DC=false in rule R2.2 (default DC=true)");

    auto* check_cmd = app.add_subcommand("check-proof", "check a trace independently");
    std::string check_path;
    check_cmd->add_option("file", check_path, "trace input")->required();

    auto* reach_cmd = app.add_subcommand("reach", "verify/falsify MaxReach(M,Target) <= theta");
    std::string reach_path, reach_theta = "1", reach_csv;
    unsigned reach_j = 3, reach_kmax = 20;
    reach_cmd->add_option("file", reach_path, "MDP input")->required();
    reach_cmd->add_option("--theta", reach_theta, "safety threshold");
    reach_cmd->add_option("--j", reach_j, "backward-step depth (default 3)");
    reach_cmd->add_option("--kmax", reach_kmax, "bound-sequence horizon (default 20)");
    reach_cmd->add_option("--csv", reach_csv, "write bound sequences as CSV");


    auto* stab_cmd = app.add_subcommand("stability", "verify MinStable(M,Region) >= theta");
    std::string stab_path, stab_theta = "0", stab_csv, stab_kernel;
    unsigned stab_j = 3, stab_kmax = 20;
    stab_cmd->add_option("file", stab_path, "MDP input")->required();
    stab_cmd->add_option("--theta", stab_theta, "stability threshold");
    stab_cmd->add_option("--j", stab_j, "backward-step depth (default 3)");
    stab_cmd->add_option("--kmax", stab_kmax, "bound-sequence horizon (default 20)");
    stab_cmd->add_option("--kernel", stab_kernel, "space-separated state names overriding phase 1");
    stab_cmd->add_option("--csv", stab_csv, "write the bound sequence as CSV");

    auto* oracle_cmd = app.add_subcommand("oracle", "ground-truth engines (debugging)");
    oracle_cmd->require_subcommand(1);
    auto* opr = oracle_cmd->add_subcommand("pr", "exact Pr by the defining recursion");
    std::string opr_path;
    opr->add_option("file", opr_path)->required();
    auto* omax = oracle_cmd->add_subcommand("maxreach", "bounded max reachability");
    auto* omin = oracle_cmd->add_subcommand("minreach", "bounded min reachability to the region kernel");
    auto* oback = oracle_cmd->add_subcommand("backward", "backward reachable set");
    auto* okern = oracle_cmd->add_subcommand("kernel", "maximal invariance kernel of the region");
    std::string om_path;
    unsigned om_k = 0;
    for (auto* sub : {omax, omin}) {
        sub->add_option("file", om_path)->required();
        sub->add_option("--k", om_k, "step bound")->required();
    }
    for (auto* sub : {oback, okern}) sub->add_option("file", om_path)->required();

    auto* selftest_cmd = app.add_subcommand("selftest", "random solver-vs-oracle cross-check");
    uint64_t st_seed = 1;
    unsigned st_count = 100;
    selftest_cmd->add_option("--seed", st_seed, "generator seed");
    selftest_cmd->add_option("--count", st_count, "instance count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return cmd_solve(solve_path, proof_out, a_spec, dc_false, mode);
        if (*check_cmd) return cmd_check_proof(check_path);
        if (*reach_cmd)
            return cmd_reach(reach_path, reach_theta, reach_j, reach_kmax, reach_csv, mode);
        if (*stab_cmd)
            return cmd_stability(stab_path, stab_theta, stab_j, stab_kmax, stab_kernel, stab_csv, mode);
        if (*selftest_cmd) return cmd_selftest(st_seed, st_count);
        if (*opr) {
            std::cout << pr_line(exact_pr(read_sdimacs_file(opr_path))) << "\n";
            return kOk;
        }
        Mdp m = parse_mdp_file(om_path);
        if (*omax) {
            if (!m.target) throw Error(Errc::MissingTarget, "no target");
            std::cout << mdp_max_reach_bounded(m, *m.target, om_k).to_string() << "\n";
        } else if (*omin) {
            if (!m.region) throw Error(Errc::MissingRegion, "no region");
            StateSet kernel = mdp_max_kernel(m, *m.region);
            std::cout << mdp_min_reach_bounded(m, kernel, om_k).to_string() << "\n";
        } else if (*oback) {
            if (!m.target) throw Error(Errc::MissingTarget, "no target");
            std::cout << format_state_set(m, mdp_backward_set(m, *m.target)) << "\n";
        } else if (*okern) {
            if (!m.region) throw Error(Errc::MissingRegion, "no region");
            std::cout << format_state_set(m, mdp_max_kernel(m, *m.region)) << "\n";
        }
        return kOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::InternalCheckFailed ? kInternal : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
