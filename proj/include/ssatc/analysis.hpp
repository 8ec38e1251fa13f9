#pragma once

#include "ssatc/encode.hpp"
#include "ssatc/mdp.hpp"
#include "ssatc/solver.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace ssatc {

struct FixpointIteration {
    unsigned k = 0;
    Ast interpolant; // I^k over canonical state vars (k >= 1)
    Ast cumulative;  // B^k / Reg^k
    StateSet state_set;
};

struct FixpointTrace {
    unsigned j = 1;
    std::vector<FixpointIteration> iterations; // entry 0 is the seed predicate
    std::optional<unsigned> stabilized_at;
    Ast result; // BReach / Kernel over canonical state vars
    StateSet result_set;
};

enum class BoundSeqKind { LowerReach, UpperReach, LowerStability };

struct BoundEntry {
    unsigned k = 0;
    Rational value;
    std::chrono::milliseconds solve_time{0};
};

struct BoundSequence {
    BoundSeqKind kind = BoundSeqKind::LowerReach;
    std::vector<BoundEntry> entries;
};

/// CSV with header "k,value_exact,value_decimal,solve_ms"; value_exact "a/b".
std::string bound_sequence_csv(const BoundSequence& seq);
BoundSequence parse_bound_sequence_csv(const std::string& text, BoundSeqKind kind);

/// Phase 1 of the reachability pipeline: B^0 = Target, B^{k+1} = B^k или
/// the backward interpolant, stopping when B^{k+1} implies B^k. The result
/// overapproximates the backward reachable set.
FixpointTrace backward_fixpoint(const Mdp& m, unsigned j, unsigned max_iter);

/// Phase 1 of the stability pipeline: Reg^0 = Region, Reg^{k+1} = Reg^k
/// minus the states the interpolant shows can escape; the stable result is
/// an invariance kernel (possibly empty).
FixpointTrace kernel_fixpoint(const Mdp& m, unsigned j, unsigned max_iter);

/// lb_k = Pr(PBMC at k), k = 0..k_max; non-decreasing.
BoundSequence lower_bounds_reach(const Mdp& m, unsigned k_max, unsigned jobs = 1);

/// ub_k over the stay-in-breach unrolling; non-increasing.
BoundSequence upper_bounds_reach(const Mdp& m, const Ast& breach, unsigned k_max, unsigned jobs = 1);

/// lb_k = 1 - Pr(kernel avoidance at k); non-decreasing. When verify is
/// set, throws Error(KernelNotInvariant) unless verify_kernel passes.
BoundSequence lower_bounds_stability(const Mdp& m, const Ast& kernel, unsigned k_max,
                                     bool verify = true, unsigned jobs = 1);

/// Kernel check against the explicit MDP: one-hot state set inside the
/// region with no positive-probability escaping transition.
bool verify_kernel(const Mdp& m, const Ast& kernel);

enum class Outcome { Verified, Falsified, Unknown };

struct Verdict {
    Outcome outcome = Outcome::Unknown;
    std::optional<unsigned> witness_k;
    Rational theta;
    std::string note;
};

struct Budget {
    unsigned j = 3;
    unsigned k_max = 20;
    std::optional<unsigned> max_iter; // fixpoint budget, defaults to |S| + 1
};

struct SafetyReport {
    Verdict verdict;
    BoundSequence lower_bounds;
    BoundSequence upper_bounds; // empty when no usable BReach was found
    std::optional<FixpointTrace> fixpoint;
};

/// MaxReach(M, Target) <= theta: falsified by the first lb_k > theta,
/// verified by the first ub_k <= theta, interleaved per k.
SafetyReport verify_safety(const Mdp& m, const Rational& theta, const Budget& budget);

struct StabilityReport {
    Verdict verdict;
    BoundSequence lower_bounds;
    FixpointTrace fixpoint;
    bool kernel_verified = false;
};

/// MinStable(M, Region) >= theta: verified by the first lb_k >= theta;
/// this pipeline cannot falsify.
StabilityReport verify_stability(const Mdp& m, const Rational& theta, const Budget& budget);

} // namespace ssatc
