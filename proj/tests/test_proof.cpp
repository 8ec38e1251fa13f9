#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ssatc/checker.hpp"
#include "ssatc/error.hpp"
#include "ssatc/oracle.hpp"
#include "ssatc/rules.hpp"
#include "testutil.hpp"

using namespace ssatc;
using namespace ssatc::test;

TEST_CASE("rule R.1") {
    SsatFormula f = ex31();
    AnnotatedClause a = apply_r1(cl({1, 2}), f);
    CHECK(a.prob == Rational(0));
    CHECK(apply_r1(cl({-2}), f).prob == Rational(0));
    CHECK_THROWS_AS(apply_r1(cl({1, 3}), f), Error); // not a matrix clause
}

TEST_CASE("rule R.2") {
    SsatFormula f = ex31();
    // the satisfying assignment x1=T, x2=F, x3=T yields (!x1 v x2 v !x3)^1
    AnnotatedClause a = apply_r2(cl({-1, 2, -3}), f);
    CHECK(a.prob == Rational(1));

    SsatFormula g = ex32();
    CHECK(apply_r2(cl({-1, -2, -3, -4}), g).prob == Rational(1));

    // E x : (x): the only tau compatible with ff_(x) falsifies the matrix
    SsatFormula h;
    h.num_vars = 1;
    h.prefix.append(Var(1), Quantifier::exists());
    h.matrix = {cl({1})};
    CHECK_THROWS_AS(apply_r2(cl({1}), h), Error);
}

TEST_CASE("R.2 syntactic premise equals the extension-enumeration premise") {
    // brute-force formulation: for EVERY extension of ff_c over
    // the covered prefix the substituted matrix must be a tautology
    RandomGen gen(606);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        SsatFormula f = gen.random_formula(6, 5);
        std::vector<Lit> lits;
        for (uint32_t v = 1; v <= gen.pick(1, f.num_vars); ++v)
            if (gen.flip()) lits.push_back(Lit(Var(v), gen.flip()));
        Clause c(std::move(lits));
        if (c.tautological() || c.empty()) continue;
        bool syntactic_ok = true;
        try {
            apply_r2(c, f);
        } catch (const Error&) {
            syntactic_ok = false;
        }
        // enumeration oracle
        Assignment ff = falsifying_assignment(c);
        uint32_t depth = 0;
        for (Lit l : c) depth = std::max(depth, f.prefix.position(l.var()));
        bool enumerated_ok = true;
        std::vector<Var> free_vars;
        for (uint32_t pos = 1; pos <= depth; ++pos)
            if (!ff.defines(f.prefix.var_at(pos))) free_vars.push_back(f.prefix.var_at(pos));
        for (uint64_t bits = 0; bits < (1ull << free_vars.size()) && enumerated_ok; ++bits) {
            Assignment tau = ff;
            for (size_t j = 0; j < free_vars.size(); ++j) tau.set(free_vars[j], (bits >> j) & 1);
            // substituted matrix tautological iff every clause already true
            // (residuals of non-tautological clauses are not tautologies)
            for (const Clause& d : f.matrix)
                if (eval_clause(d, tau) != TruthValue::True) {
                    enumerated_ok = false;
                    break;
                }
        }
        CHECK(syntactic_ok == enumerated_ok);
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("rule R.3 on the worked derivation") {
    SsatFormula f = ex31();
    AnnotatedClause sat_leaf = apply_r2(cl({-1, 2, -3}), f);
    AnnotatedClause c3 = apply_r1(cl({2, 3}), f);
    // pivot x3 (randomized 0.3): 0.3*1 + 0.7*0 = 0.3
    AnnotatedClause r1 = apply_r3(sat_leaf, c3, Var(3), f);
    CHECK(r1.clause == cl({-1, 2}));
    CHECK(r1.prob == Rational(3, 10));
    // pivot x2 (existential): max(0, 0.3)
    AnnotatedClause c2 = apply_r1(cl({-2}), f);
    AnnotatedClause r2 = apply_r3(c2, r1, Var(2), f);
    CHECK(r2.clause == cl({-1}));
    CHECK(r2.prob == Rational(3, 10));
    AnnotatedClause c1 = apply_r1(cl({1, 2}), f);
    AnnotatedClause r3 = apply_r3(c2, c1, Var(2), f);
    CHECK(r3.clause == cl({1}));
    CHECK(r3.prob == Rational(0));
    // pivot x1 (randomized 0.8): 0.8*0.3 + 0.2*0 = 0.24
    AnnotatedClause final_step = apply_r3(r2, r3, Var(1), f);
    CHECK(final_step.clause.empty());
    CHECK(final_step.prob == Rational(6, 25));
}

TEST_CASE("rule R.3 side conditions") {
    SsatFormula f = ex31();
    AnnotatedClause c1 = apply_r1(cl({1, 2}), f);
    AnnotatedClause c2 = apply_r1(cl({-2}), f);
    // pivot not present
    CHECK_THROWS_AS(apply_r3(c2, c1, Var(3), f), Error);
    // tautological resolvent
    SsatFormula g;
    g.num_vars = 3;
    g.prefix.append(Var(1), Quantifier::exists());
    g.prefix.append(Var(2), Quantifier::exists());
    g.prefix.append(Var(3), Quantifier::exists());
    g.matrix = {cl({1, -3}), cl({3, -1})};
    AnnotatedClause g1 = apply_r1(cl({1, -3}), g);
    AnnotatedClause g2 = apply_r1(cl({3, -1}), g);
    CHECK_THROWS_AS(apply_r3(g1, g2, Var(3), g), Error);
    // prefix order: pivot must be strictly inner to the resolvent
    SsatFormula h;
    h.num_vars = 2;
    h.prefix.append(Var(1), Quantifier::random(Rational(1, 2)));
    h.prefix.append(Var(2), Quantifier::random(Rational(1, 3)));
    h.matrix = {cl({1, 2}), cl({-1, 2})};
    AnnotatedClause h1 = apply_r1(cl({-1, 2}), h);
    AnnotatedClause h2 = apply_r1(cl({1, 2}), h);
    CHECK_THROWS_AS(apply_r3(h1, h2, Var(1), h), Error);
}

TEST_CASE("interpolating rules on the ex32 derivation") {
    SsatFormula f = ex32();
    Partition part = ex32_partition(f);
    // R2.1 constants by side
    InterpolatingConclusion y0 = apply_interpolating_r1(cl({3}), f, part);
    CHECK(ast::is_const(y0.interpolant, false)); // (y) in A
    InterpolatingConclusion x0 = apply_interpolating_r1(cl({2}), f, part);
    CHECK(ast::is_const(x0.interpolant, true)); // (x) in B

    // the full ex32 derivation, DC kept as a constant
    for (bool dc_true : {true, false}) {
        DcChoice dc = dc_true ? DcChoice::const_true() : DcChoice::const_false();
        InterpolatingConclusion leaf = apply_interpolating_r2(cl({-1, -2, -3, -4}), f, part, dc);
        InterpolatingConclusion c4 = apply_interpolating_r1(cl({-3, 4}), f, part);
        InterpolatingConclusion s1 = apply_interpolating_r3(leaf, c4, Var(4), f, part);
        CHECK(s1.clause.prob == Rational(3, 10));
        InterpolatingConclusion s2 = apply_interpolating_r3(s1, y0, Var(3), f, part);
        CHECK(s2.clause.prob == Rational(3, 20));
        InterpolatingConclusion s3 = apply_interpolating_r3(s2, x0, Var(2), f, part);
        CHECK(s3.clause.clause == cl({-1}));
        InterpolatingConclusion a0 = apply_interpolating_r1(cl({1, -2}), f, part);
        // conflict side: resolve (a v !x)^0 with (x)^0 on x
        InterpolatingConclusion s4 = apply_interpolating_r3(a0, x0, Var(2), f, part);
        CHECK(s4.clause.clause == cl({1}));
        InterpolatingConclusion fin = apply_interpolating_r3(s3, s4, Var(1), f, part);
        CHECK(fin.clause.clause.empty());
        CHECK(fin.clause.prob == Rational(3, 25));
        // final interpolant: !x v (y && DC)
        Ast expected = dc_true ? ast::disjunction2(ast::leaf(neg(2)), ast::var(Var(3)))
                               : ast::leaf(neg(2));
        CHECK(ast::equivalent(fin.interpolant, expected));
        CHECK(is_generalized_interpolant(fin.interpolant, f, part));
    }
}

TEST_CASE("custom DC policies must stay inside the shared variables") {
    SsatFormula f = ex32();
    Partition part = ex32_partition(f);
    DcChoice bad = DcChoice::custom_formula(ast::var(Var(1))); // a is V_A-local
    CHECK_THROWS_AS(apply_interpolating_r2(cl({-1, -2, -3, -4}), f, part, bad), Error);
    DcChoice ok = DcChoice::custom_formula(ast::var(Var(3)));
    CHECK(apply_interpolating_r2(cl({-1, -2, -3, -4}), f, part, ok).clause.prob == Rational(1));
}

namespace {

ProofTrace ex31_trace() {
    // the full ex31 derivation, packaged as a trace
    SsatFormula f = ex31();
    ProofTrace t;
    t.formula = f;
    auto step = [&](Rule rule, std::vector<uint32_t> prem, Clause c, Rational p, Var pivot = Var(),
                    Assignment w = {}) {
        DerivationStep s;
        s.rule = rule;
        s.premises = std::move(prem);
        s.conclusion = {std::move(c), std::move(p)};
        s.pivot = pivot;
        s.witness = std::move(w);
        t.steps.push_back(std::move(s));
    };
    Assignment w;
    w.set(Var(1), true);
    w.set(Var(2), false);
    w.set(Var(3), true);
    step(Rule::R1, {}, cl({1, 2}), Rational(0));        // 0
    step(Rule::R1, {}, cl({-2}), Rational(0));          // 1
    step(Rule::R1, {}, cl({2, 3}), Rational(0));        // 2
    step(Rule::R2, {}, cl({-1, 2, -3}), Rational(1), Var(), w); // 3
    step(Rule::R3, {3, 2}, cl({-1, 2}), Rational(3, 10), Var(3)); // 4
    step(Rule::R3, {1, 4}, cl({-1}), Rational(3, 10), Var(2));    // 5
    step(Rule::R3, {1, 0}, cl({1}), Rational(0), Var(2));         // 6
    step(Rule::R3, {5, 6}, Clause(std::vector<Lit>{}), Rational(6, 25), Var(1)); // 7
    return t;
}

} // namespace

TEST_CASE("checker accepts the ex31 derivation and certifies 6/25") {
    ProofTrace t = ex31_trace();
    CheckReport rep = check_proof(t);
    for (size_t i = 0; i < rep.steps.size(); ++i) {
        INFO("step ", i, ": ", rep.steps[i].message);
        CHECK(rep.steps[i].valid);
    }
    CHECK(rep.accepted);
    REQUIRE(rep.certified.has_value());
    CHECK(*rep.certified == Rational(6, 25));
}

TEST_CASE("checker rejects a perturbed annotation") {
    ProofTrace t = ex31_trace();
    t.steps.back().conclusion.prob = Rational(1, 4);
    CheckReport rep = check_proof(t);
    CHECK(!rep.accepted);
    REQUIRE(rep.first_invalid().has_value());
    CHECK(*rep.first_invalid() == t.steps.size() - 1);
    CHECK(rep.steps.back().message.find("annotation mismatch") != std::string::npos);
}

TEST_CASE("checker rejects resolution on a pivot inside the resolvent's prefix range") {
    // three variables; the illegal resolvent's annotation is also wrong:
    // under the extension x1=T, x2=F, x3=T the matrix is satisfied, so the
    // residual probability is 1, not the annotated 1/2
    SsatFormula f;
    f.num_vars = 3;
    f.prefix.append(Var(1), Quantifier::random(Rational(1, 2)));
    f.prefix.append(Var(2), Quantifier::random(Rational(1, 3)));
    f.prefix.append(Var(3), Quantifier::exists());
    f.matrix = {cl({1, 2}), cl({3})};

    ProofTrace t;
    t.formula = f;
    DerivationStep s1;
    s1.rule = Rule::R1;
    s1.conclusion = {cl({1, 2}), Rational(0)};
    DerivationStep s2;
    s2.rule = Rule::R2;
    s2.conclusion = {cl({-1, 2, -3}), Rational(1)};
    s2.witness = falsifying_assignment(s2.conclusion.clause);
    DerivationStep s3;
    s3.rule = Rule::R3;
    s3.premises = {1, 0};
    s3.pivot = Var(1);
    s3.conclusion = {cl({2, -3}), Rational(1, 2)};
    t.steps = {s1, s2, s3};

    CheckReport rep = check_proof(t);
    CHECK(!rep.accepted);
    REQUIRE(rep.first_invalid().has_value());
    CHECK(*rep.first_invalid() == 2);
    CHECK(rep.steps[2].message.find("PrefixOrderViolated") != std::string::npos);

    // confirm the annotation is indeed wrong: the matrix is satisfied under
    // the witness extension, so the claimed residual 1/2 is off
    Assignment tau;
    tau.set(Var(1), true);
    tau.set(Var(2), false);
    tau.set(Var(3), true);
    for (const Clause& c : f.matrix) CHECK(eval_clause(c, tau) == TruthValue::True);
    CHECK(t.steps[2].conclusion.prob != Rational(1));
}

TEST_CASE("checker rejects malformed witness and premise violations") {
    ProofTrace t = ex31_trace();
    // break the witness
    t.steps[3].witness.set(Var(1), false);
    CHECK(!check_proof(t).accepted);

    // R.2 clause whose premise fails
    ProofTrace u = ex31_trace();
    u.steps[3].conclusion.clause = cl({-1, 2, 3});
    u.steps[3].witness = falsifying_assignment(u.steps[3].conclusion.clause);
    u.steps[4].premises = {3, 2};
    CheckReport rep = check_proof(u);
    CHECK(!rep.accepted);
    CHECK(rep.steps[3].message.find("PremiseViolated") != std::string::npos);
}

TEST_CASE("trace file round trip") {
    ProofTrace t = ex31_trace();
    std::string text = write_trace_string(t);
    ProofTrace u = read_trace_string(text);
    CHECK(u.formula.matrix == t.formula.matrix);
    CHECK(u.formula.prefix == t.formula.prefix);
    REQUIRE(u.steps.size() == t.steps.size());
    for (size_t i = 0; i < t.steps.size(); ++i) {
        CHECK(u.steps[i].rule == t.steps[i].rule);
        CHECK(u.steps[i].premises == t.steps[i].premises);
        CHECK(u.steps[i].conclusion == t.steps[i].conclusion);
        CHECK(u.steps[i].pivot == t.steps[i].pivot);
        CHECK(u.steps[i].witness == t.steps[i].witness);
    }
    CHECK(check_proof(u).accepted);

    // truncated file
    CHECK_THROWS_AS(read_trace_string(text.substr(0, text.size() / 2)), Error);
}

TEST_CASE("interpolating trace round trip keeps interpolants") {
    SsatFormula f = ex32();
    Partition part = ex32_partition(f);
    ProofTrace t;
    t.formula = f;
    t.partition = part;
    InterpolatingConclusion y0 = apply_interpolating_r1(cl({3}), f, part);
    DerivationStep s;
    s.rule = Rule::R2_1;
    s.conclusion = y0.clause;
    s.interpolant = y0.interpolant;
    t.steps.push_back(s);
    ProofTrace u = read_trace_string(write_trace_string(t));
    REQUIRE(u.partition.has_value());
    CHECK(u.partition->a_clauses == part.a_clauses);
    REQUIRE(u.steps.size() == 1);
    CHECK(u.steps[0].rule == Rule::R2_1);
    CHECK(ast::is_const(u.steps[0].interpolant, false));
}
