#pragma once

#include "ssatc/ast.hpp"
#include "ssatc/rational.hpp"

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ssatc {

using StateSet = std::set<uint32_t>;

/// Finite Markov decision process with exact-rational transition
/// probabilities. Distributions are kept in declaration order; an empty
/// successor list means the action is unavailable in that state.
struct Mdp {
    std::vector<std::string> states;
    uint32_t init = 0;
    std::vector<std::string> actions;
    // trans[state][action] -> successors in declaration order
    std::vector<std::vector<std::vector<std::pair<uint32_t, Rational>>>> trans;
    std::optional<StateSet> target;
    std::optional<StateSet> region;

    uint32_t state_id(const std::string& name) const; // throws UnknownState
    uint32_t action_id(const std::string& name) const;
    bool action_available(uint32_t s, uint32_t a) const { return !trans[s][a].empty(); }
    std::vector<uint32_t> available_actions(uint32_t s) const;
    Rational prob(uint32_t s, uint32_t a, uint32_t t) const;

    /// Distribution sums, availability, init membership. Throws on violation.
    void validate() const;
};

/// Line-oriented MDP format, '#' comments:
///   states i f e s
///   init i
///   actions a b
///   target s            (optional)
///   region i e s        (optional)
///   trans i a e 0.9     (probability decimal or "a/b")
Mdp parse_mdp(std::istream& in);
Mdp parse_mdp_string(const std::string& text);
Mdp parse_mdp_file(const std::string& path);

/// Minimal predicate over the canonical state variables (state idx + 1):
/// disjunction of members, or conjunction of negated non-members when that
/// is smaller. Empty set -> false, full set -> true.
Ast state_set_to_ast(const Mdp& m, const StateSet& set);

/// One-hot evaluation of a state predicate.
StateSet ast_to_state_set(const Mdp& m, const Ast& predicate);

/// Names for the canonical state variables, for pretty-printing.
std::vector<std::string> canonical_state_names(const Mdp& m);

std::string format_state_set(const Mdp& m, const StateSet& set);

} // namespace ssatc
