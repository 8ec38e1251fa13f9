#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssatc/encode.hpp"
#include "ssatc/error.hpp"
#include "ssatc/mdp_oracle.hpp"
#include "ssatc/oracle.hpp"
#include "ssatc/solver.hpp"
#include "testutil.hpp"

#include <map>

using namespace ssatc;
using namespace ssatc::test;

TEST_CASE("parse the bundled MDP") {
    Mdp m = fig3();
    CHECK(m.states.size() == 4);
    CHECK(m.actions.size() == 2);
    CHECK(m.init == m.state_id("i"));
    CHECK(m.prob(m.state_id("i"), m.action_id("a"), m.state_id("e")) == Rational(9, 10));
    CHECK(m.prob(m.state_id("i"), m.action_id("b"), m.state_id("e")) == Rational(9, 10));
    CHECK(*m.target == StateSet{m.state_id("s")});
    CHECK(*m.region == StateSet{m.state_id("i"), m.state_id("e"), m.state_id("s")});
}

TEST_CASE("mdp parse errors") {
    // distribution summing to 0.9
    const char* bad =
        "states x y\ninit x\nactions a\ntrans x a y 0.9\ntrans y a y 1\n";
    CHECK_THROWS_AS(parse_mdp_string(bad), Error);
    try {
        parse_mdp_string(bad);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DistributionSumError);
    }
    CHECK_THROWS_AS(parse_mdp_string("states x\ninit q\nactions a\ntrans x a x 1\n"), Error);
    CHECK_THROWS_AS(parse_mdp_string("states x\ninit x\nactions a\n"), Error); // x lacks actions

    Mdp single = parse_mdp_string("states only\ninit only\nactions a\ntrans only a only 1\n");
    CHECK(single.states.size() == 1);
    CHECK(single.prob(0, 0, 0) == Rational(1));
}

TEST_CASE("state set predicates") {
    Mdp m = fig3();
    Ast region = state_set_to_ast(m, *m.region); // {i,e,s} -> !f
    CHECK(region->kind == AstKind::Leaf);
    CHECK(region->lit == Lit(Var(m.state_id("f") + 1), false));
    CHECK(ast_to_state_set(m, region) == *m.region);
    Ast target = state_set_to_ast(m, *m.target); // {s} -> s
    CHECK(target->lit == Lit(Var(m.state_id("s") + 1), true));
    CHECK(ast_to_state_set(m, ast::constant(false)).empty());
    CHECK(ast_to_state_set(m, ast::constant(true)).size() == 4);
}

namespace {

std::map<std::string, Var> name_index(const SsatFormula& f) {
    std::map<std::string, Var> out;
    for (uint32_t v = 1; v < f.var_names.size(); ++v)
        if (!f.var_names[v].empty()) out[f.var_names[v]] = Var(v);
    return out;
}

bool has_clause(const SsatFormula& f, const std::vector<std::pair<std::string, bool>>& named) {
    std::map<std::string, Var> idx = name_index(f);
    std::vector<Lit> lits;
    for (const auto& [name, positive] : named) {
        auto it = idx.find(name);
        if (it == idx.end()) return false;
        lits.push_back(Lit(it->second, positive));
    }
    Clause want(std::move(lits));
    for (const Clause& c : f.matrix)
        if (c == want) return true;
    return false;
}

} // namespace

TEST_CASE("one-step encoding matches the worked transition relation") {
    Mdp m = fig3();
    Unroller u(m);
    u.add_initial();
    u.add_step();
    SsatFormula f = u.finish();

    // clauses from the transition relation display
    CHECK(has_clause(f, {{"i@0", false}, {"pi@1", true}, {"f@1", true}}));
    CHECK(has_clause(f, {{"i@0", false}, {"pi@1", false}, {"e@1", true}}));
    CHECK(has_clause(f, {{"e@0", false}, {"act@1", false}, {"pea@1", true}, {"f@1", true}}));
    CHECK(has_clause(f, {{"e@0", false}, {"act@1", false}, {"pea@1", false}, {"s@1", true}}));
    CHECK(has_clause(f, {{"e@0", false}, {"act@1", true}, {"peb@1", true}, {"s@1", true}}));
    CHECK(has_clause(f, {{"e@0", false}, {"act@1", true}, {"peb@1", false}, {"i@1", true}}));
    CHECK(has_clause(f, {{"f@0", false}, {"f@1", true}}));
    CHECK(has_clause(f, {{"s@0", false}, {"s@1", true}}));
    // exactly_one over the primed block
    CHECK(has_clause(f, {{"i@1", true}, {"f@1", true}, {"e@1", true}, {"s@1", true}}));
    CHECK(has_clause(f, {{"i@1", false}, {"f@1", false}}));
    CHECK(has_clause(f, {{"e@1", false}, {"s@1", false}}));
    // init pinning
    CHECK(has_clause(f, {{"i@0", true}}));
    CHECK(has_clause(f, {{"f@0", false}}));

    // prefix blocks: E i f e s | E act, R^0.9 pi, R^0.6 pea, R^0.5 peb | E primed
    const auto& b = f.prefix.bindings();
    REQUIRE(b.size() == 12);
    std::vector<std::string> order;
    for (const auto& [v, q] : b) order.push_back(f.var_names[v.idx]);
    CHECK(order == std::vector<std::string>{"i@0", "f@0", "e@0", "s@0", "act@1", "pi@1", "pea@1",
                                            "peb@1", "i@1", "f@1", "e@1", "s@1"});
    for (int pos : {1, 2, 3, 4, 5, 9, 10, 11, 12})
        CHECK(!f.prefix.quantifier_at(pos).is_random());
    CHECK(f.prefix.quantifier_at(6).prob == Rational(9, 10));
    CHECK(f.prefix.quantifier_at(7).prob == Rational(3, 5));
    CHECK(f.prefix.quantifier_at(8).prob == Rational(1, 2));
}

TEST_CASE("probabilistic chains reproduce declared distributions") {
    // distribution (1/2, 1/3, 1/6): chain probabilities 1/2, then 2/3
    Mdp m;
    m.states = {"a", "b", "c"};
    m.actions = {"go"};
    m.init = 0;
    m.trans.assign(3, std::vector<std::vector<std::pair<uint32_t, Rational>>>(1));
    m.trans[0][0] = {{0, Rational(1, 2)}, {1, Rational(1, 3)}, {2, Rational(1, 6)}};
    m.trans[1][0] = {{1, Rational(1)}};
    m.trans[2][0] = {{2, Rational(1)}};
    m.validate();
    StepEncoding enc = encode_step(m);
    REQUIRE(enc.chain_vars.size() == 2);
    CHECK(enc.chain_vars[0].prob == Rational(1, 2));
    CHECK(enc.chain_vars[1].prob == Rational(2, 3));
    // leaf products: q1, (1-q1)q2, (1-q1)(1-q2)
    Rational q1 = enc.chain_vars[0].prob, q2 = enc.chain_vars[1].prob;
    CHECK(q1 == Rational(1, 2));
    CHECK(q1.one_minus() * q2 == Rational(1, 3));
    CHECK(q1.one_minus() * q2.one_minus() == Rational(1, 6));
}

TEST_CASE("chain leaf products equal the distribution, randomly") {
    RandomGen gen(246);
    for (int i = 0; i < 40; ++i) {
        uint32_t n = gen.pick(2, 5);
        std::vector<uint32_t> weights;
        uint32_t total = 0;
        for (uint32_t j = 0; j < n; ++j) {
            weights.push_back(gen.pick(1, 9));
            total += weights.back();
        }
        Mdp m;
        m.actions = {"a"};
        m.init = 0;
        for (uint32_t j = 0; j < n; ++j) m.states.push_back("s" + std::to_string(j));
        m.trans.assign(n, std::vector<std::vector<std::pair<uint32_t, Rational>>>(1));
        for (uint32_t j = 0; j < n; ++j) m.trans[0][0].emplace_back(j, Rational(weights[j], total));
        for (uint32_t j = 1; j < n; ++j) m.trans[j][0] = {{j, Rational(1)}};
        m.validate();
        StepEncoding enc = encode_step(m);
        std::vector<ChainVarSpec> chain;
        for (const ChainVarSpec& cv : enc.chain_vars)
            if (cv.state == 0) chain.push_back(cv);
        REQUIRE(chain.size() == n - 1);
        Rational mass = Rational::one();
        for (uint32_t j = 0; j < n; ++j) {
            Rational leaf = j < n - 1 ? mass * chain[j].prob : mass;
            CHECK(leaf == Rational(weights[j], total));
            if (j < n - 1) mass = mass * chain[j].prob.one_minus();
        }
    }
}

TEST_CASE("pbmc matches the explicit-state recursion on fig3") {
    Mdp m = fig3();
    CHECK(solve(build_pbmc(m, 0)).prob == Rational(0));
    CHECK(solve(build_pbmc(m, 1)).prob == Rational(0));
    CHECK(solve(build_pbmc(m, 2)).prob == Rational(27, 50));
    CHECK(solve(build_pbmc(m, 3)).prob == Rational(27, 50));
    CHECK(solve(build_pbmc(m, 4)).prob == Rational(693, 1000));
    // encoding faithfulness against the plain semantics for small k
    for (unsigned k = 0; k <= 2; ++k)
        CHECK(exact_pr(build_pbmc(m, k), 32) == mdp_max_reach_bounded(m, *m.target, k));
    CHECK_THROWS_AS(build_pbmc(parse_mdp_string("states x\ninit x\nactions a\ntrans x a x 1\n"), 1),
                    Error);
}

TEST_CASE("every satisfying assignment is one-hot per step") {
    Mdp m = fig3();
    Unroller u(m);
    u.add_initial();
    u.add_step();
    SsatFormula f = u.finish();
    REQUIRE(f.num_vars == 12);
    for (uint64_t bits = 0; bits < (1ull << 12); ++bits) {
        Assignment tau;
        for (uint32_t v = 1; v <= 12; ++v) tau.set(Var(v), (bits >> (v - 1)) & 1);
        bool sat = true;
        for (const Clause& c : f.matrix)
            if (eval_clause(c, tau) != TruthValue::True) {
                sat = false;
                break;
            }
        if (!sat) continue;
        for (uint32_t depth = 0; depth <= 1; ++depth) {
            int ones = 0;
            for (Var v : u.state_vars(depth))
                if (*tau.value(v)) ++ones;
            CHECK(ones == 1);
        }
    }
}

TEST_CASE("upper-bound and kernel-avoidance unrollings on fig3") {
    Mdp m = fig3();
    Ast breach = ast::disjunction2(ast::leaf(neg(m.state_id("f") + 1)), ast::var(Var(m.state_id("s") + 1)));
    CHECK(solve(build_upper_bound(m, breach, 0)).prob == Rational(1));
    CHECK(solve(build_upper_bound(m, breach, 1)).prob == Rational(9, 10));
    CHECK(solve(build_upper_bound(m, breach, 3)).prob == Rational(171, 200));

    Ast kernel = state_set_to_ast(m, StateSet{m.state_id("s")});
    CHECK(solve(build_kernel_avoid(m, kernel, 0)).prob == Rational(1));
    CHECK(solve(build_kernel_avoid(m, kernel, 2)).prob == Rational(11, 20)); // 1 - 0.45
    CHECK(solve(build_kernel_avoid(m, kernel, 4)).prob == Rational(23, 50)); // 1 - 0.54
    // duality against the explicit-state recursion
    for (unsigned k = 0; k <= 2; ++k)
        CHECK(exact_pr(build_kernel_avoid(m, kernel, k), 32).one_minus() ==
              mdp_min_reach_bounded(m, StateSet{m.state_id("s")}, k));
}

TEST_CASE("backstep query shape") {
    Mdp m = fig3();
    Ast target = state_set_to_ast(m, *m.target);
    for (unsigned j : {1u, 2u, 3u}) {
        BackstepQuery q = build_backstep_query(m, target, j, BackstepMode::Reach);
        q.formula.validate();
        // common variables are exactly the s_{j-1} state block
        std::set<Var> expected(q.common_state_vars.begin(), q.common_state_vars.end());
        CHECK(q.partition.v_ab == expected);
        // A and B cover the matrix disjointly
        CHECK(q.partition.a_clauses.size() + q.partition.b_clauses.size() == q.formula.matrix.size());
        // j = 1: B is Init alone
        if (j == 1) CHECK(q.partition.b_clauses.size() == 4);
    }
    BackstepQuery qs = build_backstep_query(m, state_set_to_ast(m, *m.region), 3, BackstepMode::Stability);
    qs.formula.validate();
    CHECK(qs.partition.v_ab.size() == 4);
}

TEST_CASE("pbmc encoding faithfulness on random MDPs") {
    RandomGen gen(135);
    for (int i = 0; i < 6; ++i) {
        Mdp m = gen.random_mdp(4, 2);
        for (unsigned k = 0; k <= 2; ++k) {
            SsatFormula f = build_pbmc(m, k);
            if (f.prefix.size() > 26) continue;
            CHECK(exact_pr(f, 26) == mdp_max_reach_bounded(m, *m.target, k));
        }
    }
}
