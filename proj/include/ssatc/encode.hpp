#pragma once

#include "ssatc/formula.hpp"
#include "ssatc/mdp.hpp"
#include "ssatc/partition.hpp"

#include <string>
#include <vector>

namespace ssatc {

/// Literal slot inside a transition-step template: previous-state bit,
/// action-selector bit, probabilistic chain bit, or next-state bit.
enum class SlotKind : uint8_t { PrevState, NdBit, Chain, NextState };

struct TemplateLit {
    SlotKind kind;
    uint32_t index;
    bool positive;
};

using TemplateClause = std::vector<TemplateLit>;

struct ChainVarSpec {
    uint32_t state;
    int32_t action; // -1 when the state's distributions agree across actions
    uint32_t link;  // position within the chain
    Rational prob;  // conditional probability of taking this branch
    std::string name;
};

/// Symbolic one-step encoding of an MDP: one Boolean per state (one-hot),
/// ceil(log2 m) existential action-selector bits, and a chain of n-1
/// randomized branch variables per distribution whose leaf products
/// reproduce ps exactly. Instantiated per unrolling depth.
struct StepEncoding {
    uint32_t num_states = 0;
    uint32_t nd_bits = 0;
    std::vector<ChainVarSpec> chain_vars;      // prefix order within the step block
    std::vector<TemplateClause> trans_clauses; // includes exactly_one over next-state bits
    std::vector<Clause> init_clauses;          // over canonical state vars (state idx + 1)
    std::vector<Clause> target_clauses;        // single positive clause, when target present
    std::vector<Clause> region_clauses;        // when region present
    std::vector<std::string> state_names;
};

StepEncoding encode_step(const Mdp& m);

/// Instantiates step templates at consecutive depths and assembles closed
/// SSAT formulas. Variables are allocated in prefix order; CNF auxiliaries
/// are appended as innermost existentials.
class Unroller {
public:
    explicit Unroller(const Mdp& m);

    /// Adds the depth-0 state block and the Init pinning clauses.
    void add_initial();
    /// Adds one transition step (selector bits, chain vars, next state block).
    void add_step();
    /// Remaps a predicate over canonical state vars to the given depth.
    Ast at_depth(const Ast& canonical, uint32_t depth) const;
    /// Adds the CNF of a depth-mapped predicate; auxiliaries are recorded
    /// and bound innermost by finish().
    std::vector<uint32_t> add_predicate_cnf(const Ast& predicate_at_depth);
    void add_clause(Clause c, std::vector<uint32_t>* index_sink = nullptr);

    uint32_t depth() const { return depth_; }
    const std::vector<Var>& state_vars(uint32_t depth) const { return state_vars_[depth]; }
    const std::vector<uint32_t>& last_step_clause_indices() const { return last_step_clauses_; }
    const std::vector<uint32_t>& initial_clause_indices() const { return init_clauses_; }
    const StepEncoding& encoding() const { return enc_; }

    /// Closes the formula: binds auxiliaries innermost and validates.
    SsatFormula finish();

private:
    const Mdp& m_;
    StepEncoding enc_;
    SsatFormula f_;
    uint32_t next_var_ = 1;
    uint32_t depth_ = 0;
    std::vector<std::vector<Var>> state_vars_;
    std::vector<uint32_t> init_clauses_;
    std::vector<uint32_t> last_step_clauses_;
    std::vector<Var> pending_aux_;

    Var alloc(const std::string& name);
    Lit instantiate(const TemplateLit& tl, const std::vector<Var>& prev,
                    const std::vector<Var>& nd, const std::vector<Var>& chain,
                    const std::vector<Var>& next) const;
};

/// PBMC unrolling: Init && Trans^k && (Target at some depth <= k).
/// Pr equals the k-step maximum reachability probability.
SsatFormula build_pbmc(const Mdp& m, unsigned k);

enum class BackstepMode { Reach, Stability };

struct BackstepQuery {
    SsatFormula formula;
    Partition partition;                      // A: last step + predicate CNF, B: the prefix steps
    std::vector<Var> common_state_vars;       // the s_{j-1} block, = V_{A,B}
    std::vector<std::string> canonical_names; // for rebasing interpolants
};

/// The one-step-backward interpolation query: B covers j-1 forward steps
/// from Init, A covers the j-th step into the predicate (Reach) or into its
/// negation (Stability).
BackstepQuery build_backstep_query(const Mdp& m, const Ast& predicate, unsigned j, BackstepMode mode);

/// Init && Trans^k constrained to stay inside breach at every depth;
/// Pr is an upper bound on the maximum reachability probability.
SsatFormula build_upper_bound(const Mdp& m, const Ast& breach, unsigned k);

/// Init && Trans^k avoiding the kernel at every depth; 1 - Pr is a lower
/// bound on the stability probability.
SsatFormula build_kernel_avoid(const Mdp& m, const Ast& kernel, unsigned k);

} // namespace ssatc
