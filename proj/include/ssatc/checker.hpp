#pragma once

#include "ssatc/proof.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ssatc {

struct StepCheck {
    bool valid = false;
    std::string message; // violated side condition, empty when valid
};

struct CheckReport {
    std::vector<StepCheck> steps;
    bool accepted = false;
    std::optional<Rational> certified; // set iff accepted and last step concludes the empty clause
    Ast certified_interpolant;         // last step's interpolant, if any

    /// Index of the first invalid step, if any.
    std::optional<uint32_t> first_invalid() const;
};

/// Re-derives every step independently of the solver's rule application
/// code: clause membership, R.2 premise, resolvent, prefix-order side
/// condition, probability law, and interpolant recombination are all
/// re-implemented here.
CheckReport check_proof(const ProofTrace& t);

} // namespace ssatc
