#pragma once

#include "ssatc/formula.hpp"
#include "ssatc/mdp.hpp"
#include "ssatc/partition.hpp"
#include "ssatc/sdimacs.hpp"

#include <random>
#include <string>
#include <vector>

namespace ssatc::test {

inline Lit pos(uint32_t v) { return Lit(Var(v), true); }
inline Lit neg(uint32_t v) { return Lit(Var(v), false); }

inline Clause cl(std::initializer_list<int> lits) {
    std::vector<Lit> out;
    for (int l : lits) out.push_back(Lit::from_dimacs(l));
    return Clause(std::move(out));
}

// R^0.8 x1, E x2, R^0.3 x3 : (x1 v x2) (!x2) (x2 v x3)
inline SsatFormula ex31() {
    SsatFormula f;
    f.num_vars = 3;
    f.prefix.append(Var(1), Quantifier::random(Rational(4, 5)));
    f.prefix.append(Var(2), Quantifier::exists());
    f.prefix.append(Var(3), Quantifier::random(Rational(3, 10)));
    f.matrix = {cl({1, 2}), cl({-2}), cl({2, 3})};
    return f;
}

// R^0.8 a, E x, R^0.5 y, R^0.3 b : A = (y)(a v !x), B = (x)(!y v b)
// vars: a=1 x=2 y=3 b=4
inline SsatFormula ex32() {
    SsatFormula f;
    f.num_vars = 4;
    f.prefix.append(Var(1), Quantifier::random(Rational(4, 5)));
    f.prefix.append(Var(2), Quantifier::exists());
    f.prefix.append(Var(3), Quantifier::random(Rational(1, 2)));
    f.prefix.append(Var(4), Quantifier::random(Rational(3, 10)));
    f.matrix = {cl({3}), cl({1, -2}), cl({2}), cl({-3, 4})};
    f.var_names = {"", "a", "x", "y", "b"};
    return f;
}

inline Partition ex32_partition(const SsatFormula& f) {
    const uint32_t a_idx[] = {0, 1};
    return Partition::make(f, a_idx);
}

inline const char* fig3_text() {
    return "# the four-state MDP with target s and region {i,e,s}\n"
           "states i f e s\n"
           "init i\n"
           "actions a b\n"
           "target s\n"
           "region i e s\n"
           "trans i a e 0.9\n"
           "trans i a f 0.1\n"
           "trans i b e 0.9\n"
           "trans i b f 0.1\n"
           "trans e a s 0.6\n"
           "trans e a f 0.4\n"
           "trans e b i 0.5\n"
           "trans e b s 0.5\n"
           "trans f a f 1\n"
           "trans f b f 1\n"
           "trans s a s 1\n"
           "trans s b s 1\n";
}

inline Mdp fig3() { return parse_mdp_string(fig3_text()); }

struct RandomGen {
    std::mt19937 rng;

    explicit RandomGen(uint64_t seed) : rng(seed) {}

    uint32_t pick(uint32_t lo, uint32_t hi) { // inclusive
        return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
    }

    bool flip() { return pick(0, 1) == 1; }

    Rational random_prob() {
        static const Rational choices[] = {Rational(1, 2), Rational(1, 3), Rational(3, 10),
                                           Rational(4, 5), Rational(2, 3), Rational(1, 4),
                                           Rational(9, 10), Rational(3, 5)};
        return choices[pick(0, 7)];
    }

    SsatFormula random_formula(uint32_t max_vars, uint32_t max_clauses) {
        SsatFormula f;
        f.num_vars = pick(1, max_vars);
        for (uint32_t v = 1; v <= f.num_vars; ++v)
            f.prefix.append(Var(v), flip() ? Quantifier::random(random_prob()) : Quantifier::exists());
        uint32_t n_clauses = pick(1, max_clauses);
        for (uint32_t i = 0; i < n_clauses; ++i) {
            std::vector<Lit> lits;
            uint32_t len = pick(1, 3);
            for (uint32_t j = 0; j < len; ++j) lits.push_back(Lit(Var(pick(1, f.num_vars)), flip()));
            Clause c(std::move(lits));
            if (c.tautological()) {
                --i;
                continue;
            }
            f.matrix.push_back(std::move(c));
        }
        return f;
    }

    // absorbing_targets pins every target state to a self-loop, the shape
    // the upper-bound scheme's soundness argument needs
    Mdp random_mdp(uint32_t max_states, uint32_t max_actions, bool absorbing_targets = false) {
        Mdp m;
        uint32_t ns = pick(1, max_states);
        uint32_t na = pick(1, max_actions);
        for (uint32_t s = 0; s < ns; ++s) m.states.push_back("s" + std::to_string(s));
        for (uint32_t a = 0; a < na; ++a) m.actions.push_back("a" + std::to_string(a));
        m.init = pick(0, ns - 1);
        m.trans.assign(ns, std::vector<std::vector<std::pair<uint32_t, Rational>>>(na));
        for (uint32_t s = 0; s < ns; ++s) {
            uint32_t avail = pick(1, na);
            for (uint32_t a = 0; a < avail; ++a) {
                uint32_t succ_count = pick(1, std::min(ns, 3u));
                std::vector<uint32_t> succs;
                while (succs.size() < succ_count) {
                    uint32_t t = pick(0, ns - 1);
                    if (std::find(succs.begin(), succs.end(), t) == succs.end()) succs.push_back(t);
                }
                std::vector<uint32_t> weights;
                uint32_t total = 0;
                for (size_t i = 0; i < succs.size(); ++i) {
                    weights.push_back(pick(1, 6));
                    total += weights.back();
                }
                for (size_t i = 0; i < succs.size(); ++i)
                    m.trans[s][a].emplace_back(succs[i], Rational(weights[i], total));
            }
        }
        StateSet target;
        uint32_t tcount = pick(1, ns);
        while (target.size() < tcount) target.insert(pick(0, ns - 1));
        if (absorbing_targets) {
            for (uint32_t s : target) {
                for (uint32_t a = 0; a < na; ++a) m.trans[s][a].clear();
                m.trans[s][0] = {{s, Rational(1)}};
            }
        }
        m.target = target;
        StateSet region;
        uint32_t rcount = pick(1, ns);
        while (region.size() < rcount) region.insert(pick(0, ns - 1));
        m.region = region;
        m.validate();
        return m;
    }
};

} // namespace ssatc::test
