#pragma once

#include "ssatc/mdp.hpp"

namespace ssatc {

/// Maximum probability of reaching T from the initial state within k steps
/// (backward induction, worst-case scheduler maximizes).
Rational mdp_max_reach_bounded(const Mdp& m, const StateSet& target, unsigned k);

/// Least fixpoint of pre-image union target under positive-probability
/// transitions: states that can reach target at all.
StateSet mdp_backward_set(const Mdp& m, const StateSet& target);

/// Unique maximal invariance kernel inside region: no (state, action,
/// outside-state) transition with positive probability. Computed by
/// deleting states with any escaping action until stable.
StateSet mdp_max_kernel(const Mdp& m, const StateSet& region);

/// Minimum probability of reaching K within k steps (scheduler minimizes).
Rational mdp_min_reach_bounded(const Mdp& m, const StateSet& kernel, unsigned k);

/// Maximum probability of avoiding K for k steps; the duality partner of
/// mdp_min_reach_bounded (MinReach = 1 - MaxAvoid).
Rational mdp_max_avoid_bounded(const Mdp& m, const StateSet& kernel, unsigned k);

} // namespace ssatc
