#include "ssatc/mdp_oracle.hpp"

#include <algorithm>

namespace ssatc {

namespace {

enum class Opt { Max, Min };

// one backward-induction sweep layer
std::vector<Rational> step_values(const Mdp& m, const std::vector<Rational>& prev,
                                  const StateSet& fixed, const Rational& fixed_value, Opt opt) {
    std::vector<Rational> out(m.states.size());
    for (uint32_t s = 0; s < m.states.size(); ++s) {
        if (fixed.count(s)) {
            out[s] = fixed_value;
            continue;
        }
        bool first = true;
        Rational best;
        for (uint32_t a : m.available_actions(s)) {
            Rational v;
            for (const auto& [t, p] : m.trans[s][a]) v += p * prev[t];
            if (first || (opt == Opt::Max ? v > best : v < best)) {
                best = std::move(v);
                first = false;
            }
        }
        out[s] = std::move(best);
    }
    return out;
}

Rational bounded_value(const Mdp& m, const StateSet& set, unsigned k, Opt opt,
                       const Rational& inside, const Rational& outside0) {
    std::vector<Rational> v(m.states.size());
    for (uint32_t s = 0; s < m.states.size(); ++s) v[s] = set.count(s) ? inside : outside0;
    for (unsigned i = 0; i < k; ++i) v = step_values(m, v, set, inside, opt);
    return v[m.init];
}

} // namespace

Rational mdp_max_reach_bounded(const Mdp& m, const StateSet& target, unsigned k) {
    return bounded_value(m, target, k, Opt::Max, Rational::one(), Rational::zero());
}

Rational mdp_min_reach_bounded(const Mdp& m, const StateSet& kernel, unsigned k) {
    return bounded_value(m, kernel, k, Opt::Min, Rational::one(), Rational::zero());
}

Rational mdp_max_avoid_bounded(const Mdp& m, const StateSet& kernel, unsigned k) {
    return bounded_value(m, kernel, k, Opt::Max, Rational::zero(), Rational::one());
}

StateSet mdp_backward_set(const Mdp& m, const StateSet& target) {
    StateSet reach = target;
    bool grew = true;
    while (grew) {
        grew = false;
        for (uint32_t s = 0; s < m.states.size(); ++s) {
            if (reach.count(s)) continue;
            for (uint32_t a : m.available_actions(s)) {
                bool hits = std::any_of(m.trans[s][a].begin(), m.trans[s][a].end(),
                                        [&](const auto& e) { return reach.count(e.first) != 0; });
                if (hits) {
                    reach.insert(s);
                    grew = true;
                    break;
                }
            }
        }
    }
    return reach;
}

StateSet mdp_max_kernel(const Mdp& m, const StateSet& region) {
    StateSet kernel = region;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (auto it = kernel.begin(); it != kernel.end();) {
            uint32_t s = *it;
            bool escapes = false;
            for (uint32_t a : m.available_actions(s)) {
                for (const auto& [t, p] : m.trans[s][a]) {
                    if (!kernel.count(t) && p > Rational::zero()) {
                        escapes = true;
                        break;
                    }
                }
                if (escapes) break;
            }
            if (escapes) {
                it = kernel.erase(it);
                shrunk = true;
            } else {
                ++it;
            }
        }
    }
    return kernel;
}

} // namespace ssatc
