#pragma once

#include "ssatc/checker.hpp"
#include "ssatc/proof.hpp"
#include "ssatc/rules.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ssatc {

enum class Pruning { None, Thresholding };

struct SolveOptions {
    bool emit_proof = false;
    bool emit_interpolant = false; // requires emit_proof and a partition
    DcChoice dc = DcChoice::const_true();
    Pruning pruning = Pruning::None; // must be None when emit_proof is set
    Rational threshold_lo = Rational::zero();
    Rational threshold_hi = Rational::one();
    bool memoize = true; // auto-disabled while emitting proofs

    void validate() const;
};

enum class BoundKind { Exact, AtLeast, AtMost };

struct SolveStats {
    uint64_t decisions = 0;
    uint64_t propagations = 0;
    uint64_t conflicts = 0;
    uint64_t sat_leaves = 0;
    uint64_t cache_hits = 0;
    uint32_t peak_depth = 0;
};

struct SolveResult {
    Rational prob;
    BoundKind kind = BoundKind::Exact; // AtLeast/AtMost only under thresholding
    std::optional<ProofTrace> trace;
    Ast interpolant; // set iff emit_interpolant
    SolveStats stats;
};

/// Exact Pr(Phi) by prefix-ordered DPLL with unit propagation. With
/// emit_proof, records an S-resolution trace ending in the empty clause;
/// with a partition and emit_interpolant, runs the interpolating rules and
/// returns the generalized Craig interpolant of the final step.
SolveResult solve(const SsatFormula& f, const SolveOptions& opts = {});
SolveResult solve(const SsatFormula& f, const Partition& part, const SolveOptions& opts);

/// Pr(prefix : A && B) together with a generalized Craig interpolant for
/// (A, B) under the given don't-care policy.
std::pair<Rational, Ast> solve_partitioned(const std::vector<Clause>& a, const std::vector<Clause>& b,
                                           const Prefix& prefix, const DcChoice& dc);

/// Validity of P -> Q over the given variables, decided by a purely
/// existential satisfiability call on P && !Q.
bool check_implication(const Ast& p, const Ast& q, std::span<const Var> vars);

} // namespace ssatc
