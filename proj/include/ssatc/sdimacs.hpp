#pragma once

#include "ssatc/formula.hpp"

#include <iosfwd>
#include <string>

namespace ssatc {

/// SDIMACS text format:
///   c comment
///   p cnf <nvars> <nclauses>
///   e <v> ... 0            existential block, prefix order = line order
///   r <prob> <v> ... 0     randomized block; <prob> decimal or "a/b"
///   <lit> ... 0            clauses
/// The formula must be closed: clause variables must appear in some block.
SsatFormula read_sdimacs(std::istream& in);
SsatFormula read_sdimacs_string(const std::string& text);
SsatFormula read_sdimacs_file(const std::string& path);

void write_sdimacs(const SsatFormula& f, std::ostream& out);
std::string write_sdimacs_string(const SsatFormula& f);

} // namespace ssatc
