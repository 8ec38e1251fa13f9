#pragma once

#include "ssatc/ast.hpp"
#include "ssatc/formula.hpp"
#include "ssatc/partition.hpp"
#include "ssatc/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ssatc {

/// Clause annotated with its exact derived probability c^p.
struct AnnotatedClause {
    Clause clause;
    Rational prob; // in [0,1]

    bool operator==(const AnnotatedClause&) const = default;
};

enum class Rule { R1, R2, R3, R2_1, R2_2, R2_3 };

const char* rule_name(Rule r);
bool rule_is_interpolating(Rule r);

struct DerivationStep {
    Rule rule = Rule::R1;
    std::vector<uint32_t> premises; // step indices (0-based), earlier steps only
    AnnotatedClause conclusion;
    Ast interpolant;     // set iff rule is interpolating
    Var pivot;           // R3 / R2_3
    Assignment witness;  // R2 / R2_2: the satisfying partial assignment
};

/// Serialized derivation DAG over a formula, with an optional (A,B)
/// partition when the trace computes an interpolant.
struct ProofTrace {
    SsatFormula formula;
    std::optional<Partition> partition;
    std::vector<DerivationStep> steps;
};

/// Step lines:
///   s <id> R1 <clause-lits> 0 p <rational>
///   s <id> R2 <clause-lits> 0 p <rational> w <lit> ... 0
///   s <id> R3 <id1> <id2> x <pivot> <clause-lits> 0 p <rational>
///   i <id> <interpolant-sexpr>
/// preceded by a self-describing header (the formula in SDIMACS form and an
/// optional `a <matrix-index> ... 0` line naming the A-side clauses).
void write_trace(const ProofTrace& t, std::ostream& out);
std::string write_trace_string(const ProofTrace& t);
ProofTrace read_trace(std::istream& in);
ProofTrace read_trace_string(const std::string& text);
ProofTrace read_trace_file(const std::string& path);

} // namespace ssatc
