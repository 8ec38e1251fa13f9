#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssatc/analysis.hpp"
#include "ssatc/error.hpp"
#include "ssatc/mdp_oracle.hpp"
#include "testutil.hpp"

using namespace ssatc;
using namespace ssatc::test;

TEST_CASE("backward fixpoint reproduces the backward-reachable sets") {
    Mdp m = fig3();
    StateSet oracle_set = mdp_backward_set(m, *m.target); // {i,e,s}

    for (unsigned j : {2u, 3u}) {
        FixpointTrace t = backward_fixpoint(m, j, 5);
        REQUIRE(t.stabilized_at.has_value());
        INFO("j=", j, " BReach=", format_state_set(m, t.result_set));
        CHECK(t.result_set == oracle_set);
        // overapproximation always holds
        for (uint32_t s : oracle_set) CHECK(t.result_set.count(s) == 1);
    }
    // j=1 may overapproximate up to the full space but never undershoots
    FixpointTrace t1 = backward_fixpoint(m, 1, 5);
    REQUIRE(t1.stabilized_at.has_value());
    for (uint32_t s : oracle_set) CHECK(t1.result_set.count(s) == 1);
}

TEST_CASE("backward fixpoint trivial seed") {
    Mdp m = fig3();
    Mdp all = m;
    all.target = StateSet{0, 1, 2, 3};
    FixpointTrace t = backward_fixpoint(all, 2, 6);
    CHECK(t.result_set == StateSet{0, 1, 2, 3});
    CHECK(*t.stabilized_at <= 1);
}

TEST_CASE("kernel fixpoint reproduces the invariance kernels") {
    Mdp m = fig3();
    StateSet s_only = {m.state_id("s")};
    for (unsigned j : {3u, 4u}) {
        FixpointTrace t = kernel_fixpoint(m, j, 6);
        REQUIRE(t.stabilized_at.has_value());
        INFO("j=", j, " Kernel=", format_state_set(m, t.result_set));
        CHECK(t.result_set == s_only);
        CHECK(verify_kernel(m, t.result));
    }
    for (unsigned j : {1u, 2u}) {
        FixpointTrace t = kernel_fixpoint(m, j, 6);
        REQUIRE(t.stabilized_at.has_value());
        CHECK(verify_kernel(m, t.result));
        // any verified kernel is inside the maximal one
        for (uint32_t s : t.result_set) CHECK(s_only.count(s) == 1);
    }
    // empty region gives the empty kernel
    Mdp none = m;
    none.region = StateSet{};
    FixpointTrace t = kernel_fixpoint(none, 3, 6);
    CHECK(t.result_set.empty());
}

TEST_CASE("reachability bound sequences on fig3") {
    Mdp m = fig3();
    BoundSequence lbs = lower_bounds_reach(m, 5);
    std::vector<Rational> expect_lb = {Rational(0),        Rational(0),        Rational(27, 50),
                                       Rational(27, 50),   Rational(693, 1000), Rational(693, 1000)};
    REQUIRE(lbs.entries.size() == 6);
    for (size_t k = 0; k < 6; ++k) CHECK(lbs.entries[k].value == expect_lb[k]);

    Ast breach = ast::disjunction2(ast::leaf(neg(m.state_id("f") + 1)),
                                   ast::var(Var(m.state_id("s") + 1)));
    BoundSequence ubs = upper_bounds_reach(m, breach, 6);
    std::vector<Rational> expect_ub = {Rational(1),        Rational(9, 10),  Rational(9, 10),
                                       Rational(171, 200), Rational(171, 200), Rational(3339, 4000),
                                       Rational(3339, 4000)};
    REQUIRE(ubs.entries.size() == 7);
    for (size_t k = 0; k < 7; ++k) CHECK(ubs.entries[k].value == expect_ub[k]);

    // trivial BReach gives trivial upper bounds
    BoundSequence triv = upper_bounds_reach(m, ast::constant(true), 3);
    for (const BoundEntry& e : triv.entries) CHECK(e.value == Rational(1));

    // sandwich: every lb_k <= every ub_m
    for (const BoundEntry& lb : lbs.entries)
        for (const BoundEntry& ub : ubs.entries) CHECK(!(lb.value > ub.value));
}

TEST_CASE("stability bound sequence on fig3") {
    Mdp m = fig3();
    Ast kernel = state_set_to_ast(m, StateSet{m.state_id("s")});
    BoundSequence lbs = lower_bounds_stability(m, kernel, 5);
    std::vector<Rational> expect = {Rational(0),      Rational(0),      Rational(9, 20),
                                    Rational(9, 20),  Rational(27, 50), Rational(27, 50)};
    REQUIRE(lbs.entries.size() == 6);
    for (size_t k = 0; k < 6; ++k) CHECK(lbs.entries[k].value == expect[k]);

    // an empty kernel yields all-zero bounds
    BoundSequence zero = lower_bounds_stability(m, ast::constant(false), 3);
    for (const BoundEntry& e : zero.entries) CHECK(e.value == Rational(0));

    // a non-invariant "kernel" is rejected when verification is on
    Ast e_only = state_set_to_ast(m, StateSet{m.state_id("e")});
    CHECK_THROWS_AS(lower_bounds_stability(m, e_only, 2), Error);
}

TEST_CASE("verify_kernel examples") {
    Mdp m = fig3();
    Ast nf_and_s = ast::conjunction2(ast::leaf(neg(m.state_id("f") + 1)),
                                     ast::var(Var(m.state_id("s") + 1)));
    CHECK(verify_kernel(m, nf_and_s));
    CHECK(!verify_kernel(m, state_set_to_ast(m, StateSet{m.state_id("e")})));
    CHECK(verify_kernel(m, ast::constant(false)));
}

TEST_CASE("safety verdicts on fig3") {
    Mdp m = fig3();
    Budget budget;
    budget.j = 3;
    budget.k_max = 4;

    SafetyReport verified = verify_safety(m, Rational(9, 10), budget);
    CHECK(verified.verdict.outcome == Outcome::Verified);
    CHECK(*verified.verdict.witness_k == 1);

    SafetyReport falsified = verify_safety(m, Rational(1, 2), budget);
    CHECK(falsified.verdict.outcome == Outcome::Falsified);
    CHECK(*falsified.verdict.witness_k == 2);

    Budget tiny;
    tiny.j = 3;
    tiny.k_max = 1;
    SafetyReport unknown = verify_safety(m, Rational(818, 1000), tiny);
    CHECK(unknown.verdict.outcome == Outcome::Unknown);
}

TEST_CASE("stability verdicts on fig3") {
    Mdp m = fig3();
    Budget budget;
    budget.j = 3;
    budget.k_max = 6;
    StabilityReport verified = verify_stability(m, Rational(27, 50), budget);
    CHECK(verified.verdict.outcome == Outcome::Verified);
    CHECK(*verified.verdict.witness_k == 4);
    CHECK(verified.kernel_verified);

    StabilityReport unknown = verify_stability(m, Rational(11, 20), budget);
    CHECK(unknown.verdict.outcome == Outcome::Unknown);

    StabilityReport trivial = verify_stability(m, Rational(0), budget);
    CHECK(trivial.verdict.outcome == Outcome::Verified);
    CHECK(*trivial.verdict.witness_k == 0);
}

TEST_CASE("verdicts at thresholds near the limit, against the oracle crossings") {
    Mdp m = fig3();
    // theta = 0.818 sits below MaxReach = 9/11, so the property is false:
    // the pipeline must falsify at the first k where the oracle's lb
    // crosses, and stay Unknown on budgets that end before it
    Rational theta_lo(818, 1000);
    unsigned cross_lb = 0;
    while (!(mdp_max_reach_bounded(m, *m.target, cross_lb) > theta_lo)) ++cross_lb;
    CHECK(cross_lb == 22);
    Budget enough;
    enough.j = 3;
    enough.k_max = cross_lb + 2;
    SafetyReport fals = verify_safety(m, theta_lo, enough);
    CHECK(fals.verdict.outcome == Outcome::Falsified);
    CHECK(*fals.verdict.witness_k == cross_lb);
    Budget short_budget;
    short_budget.j = 3;
    short_budget.k_max = cross_lb - 1;
    CHECK(verify_safety(m, theta_lo, short_budget).verdict.outcome == Outcome::Unknown);

    // theta = 0.8183 sits above the limit: verified at the first k where
    // the stay-in-BReach value drops below it; the oracle route for that
    // value is max avoidance of the complement of BReach
    Rational theta_hi(8183, 10000);
    StateSet not_breach = {m.state_id("f")};
    unsigned cross_ub = 0;
    while (!(mdp_max_avoid_bounded(m, not_breach, cross_ub) <= theta_hi)) ++cross_ub;
    CHECK(cross_ub == 19);
    Budget enough2;
    enough2.j = 3;
    enough2.k_max = cross_ub + 2;
    SafetyReport ver = verify_safety(m, theta_hi, enough2);
    CHECK(ver.verdict.outcome == Outcome::Verified);
    CHECK(*ver.verdict.witness_k == cross_ub);
    Budget short2;
    short2.j = 3;
    short2.k_max = cross_ub - 1;
    CHECK(verify_safety(m, theta_hi, short2).verdict.outcome == Outcome::Unknown);
}

TEST_CASE("parallel per-k solves give identical sequences") {
    Mdp m = fig3();
    BoundSequence seq1 = lower_bounds_reach(m, 8, 1);
    BoundSequence seq2 = lower_bounds_reach(m, 8, 3);
    REQUIRE(seq1.entries.size() == seq2.entries.size());
    for (size_t i = 0; i < seq1.entries.size(); ++i)
        CHECK(seq1.entries[i].value == seq2.entries[i].value);
}

TEST_CASE("bound sequence csv round trip") {
    Mdp m = fig3();
    BoundSequence lbs = lower_bounds_reach(m, 4);
    std::string csv = bound_sequence_csv(lbs);
    BoundSequence back = parse_bound_sequence_csv(csv, BoundSeqKind::LowerReach);
    REQUIRE(back.entries.size() == lbs.entries.size());
    for (size_t i = 0; i < lbs.entries.size(); ++i) {
        CHECK(back.entries[i].k == lbs.entries[i].k);
        CHECK(back.entries[i].value == lbs.entries[i].value);
        CHECK(back.entries[i].solve_time == lbs.entries[i].solve_time);
    }
    CHECK_THROWS_AS(parse_bound_sequence_csv("nope\n", BoundSeqKind::LowerReach), Error);
}

TEST_CASE("fixpoint soundness on random MDPs") {
    RandomGen gen(97);
    int done = 0;
    for (int i = 0; i < 8 && done < 5; ++i) {
        Mdp m = gen.random_mdp(4, 2);
        StateSet backward = mdp_backward_set(m, *m.target);
        StateSet max_kernel = mdp_max_kernel(m, *m.region);
        for (unsigned j : {1u, 2u}) {
            FixpointTrace bt = backward_fixpoint(m, j, static_cast<unsigned>(m.states.size()) + 1);
            for (uint32_t s : backward) CHECK(bt.result_set.count(s) == 1); // overapproximation
            FixpointTrace kt = kernel_fixpoint(m, j, static_cast<unsigned>(m.states.size()) + 1);
            CHECK(verify_kernel(m, kt.result));
            for (uint32_t s : kt.result_set) CHECK(max_kernel.count(s) == 1); // inside the maximal
        }
        ++done;
    }
    CHECK(done >= 5);
}

TEST_CASE("stability bounds stay below the oracle values") {
    Mdp m = fig3();
    Ast kernel = state_set_to_ast(m, StateSet{m.state_id("s")});
    StateSet max_kernel = mdp_max_kernel(m, *m.region);
    BoundSequence lbs = lower_bounds_stability(m, kernel, 6);
    for (const BoundEntry& e : lbs.entries)
        CHECK(!(e.value > mdp_min_reach_bounded(m, max_kernel, e.k)));
}
