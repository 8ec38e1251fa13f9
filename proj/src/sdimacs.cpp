#include "ssatc/sdimacs.hpp"

#include "ssatc/error.hpp"

#include <fstream>
#include <sstream>

namespace ssatc {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

} // namespace

SsatFormula read_sdimacs(std::istream& in) {
    SsatFormula f;
    bool have_header = false;
    size_t declared_clauses = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            long long nv = -1, nc = -1;
            if (!(ls >> kind >> nv >> nc) || kind != "cnf" || nv < 0 || nc < 0)
                fail(lineno, "malformed problem line");
            f.num_vars = static_cast<uint32_t>(nv);
            declared_clauses = static_cast<size_t>(nc);
            have_header = true;
            continue;
        }
        if (!have_header) fail(lineno, "expected 'p cnf <nvars> <nclauses>' before " + tok);
        if (tok == "e" || tok == "r") {
            Quantifier q = Quantifier::exists();
            if (tok == "r") {
                std::string p;
                if (!(ls >> p)) fail(lineno, "randomized block needs a probability");
                try {
                    q = Quantifier::random(Rational::from_string(p));
                } catch (const Error& e) {
                    fail(lineno, e.what());
                }
            }
            long long v;
            bool terminated = false;
            while (ls >> v) {
                if (v == 0) {
                    terminated = true;
                    break;
                }
                if (v < 0 || static_cast<uint32_t>(v) > f.num_vars)
                    fail(lineno, "bad variable " + std::to_string(v) + " in quantifier block");
                try {
                    f.prefix.append(Var(static_cast<uint32_t>(v)), q);
                } catch (const Error& e) {
                    fail(lineno, e.what());
                }
            }
            if (!terminated) fail(lineno, "quantifier block not terminated by 0");
            continue;
        }
        // clause line; the first token is already a literal
        std::vector<int> lits;
        long long first;
        try {
            first = std::stoll(tok);
        } catch (...) {
            fail(lineno, "unexpected token '" + tok + "'");
        }
        long long v = first;
        bool terminated = false;
        do {
            if (v == 0) {
                terminated = true;
                break;
            }
            uint32_t idx = static_cast<uint32_t>(v < 0 ? -v : v);
            if (idx > f.num_vars) fail(lineno, "literal " + std::to_string(v) + " out of range");
            lits.push_back(static_cast<int>(v));
        } while (ls >> v);
        if (!terminated) fail(lineno, "clause not terminated by 0");
        Clause c = Clause::from_dimacs(lits);
        if (c.tautological()) fail(lineno, "tautological clause " + c.to_dimacs_string());
        for (Lit l : c)
            if (!f.prefix.binds(l.var()))
                fail(lineno, "unbound variable " + std::to_string(l.var().idx) + " (formula must be closed)");
        f.matrix.push_back(std::move(c));
    }
    if (!have_header) throw Error(Errc::ParseError, "missing 'p cnf' header");
    if (declared_clauses != f.matrix.size())
        throw Error(Errc::ParseError, "header declares " + std::to_string(declared_clauses) +
                                          " clauses, found " + std::to_string(f.matrix.size()));
    f.validate();
    return f;
}

SsatFormula read_sdimacs_string(const std::string& text) {
    std::istringstream in(text);
    return read_sdimacs(in);
}

SsatFormula read_sdimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return read_sdimacs(in);
}

void write_sdimacs(const SsatFormula& f, std::ostream& out) {
    out << "p cnf " << f.num_vars << " " << f.matrix.size() << "\n";
    // contiguous same-quantifier runs become one block line each
    const auto& bs = f.prefix.bindings();
    size_t i = 0;
    while (i < bs.size()) {
        size_t j = i;
        while (j < bs.size() && bs[j].second == bs[i].second) ++j;
        if (bs[i].second.is_random())
            out << "r " << bs[i].second.prob.to_string();
        else
            out << "e";
        for (size_t k = i; k < j; ++k) out << " " << bs[k].first.idx;
        out << " 0\n";
        i = j;
    }
    for (const Clause& c : f.matrix) {
        std::string s = c.to_dimacs_string();
        if (!s.empty()) out << s << " ";
        out << "0\n";
    }
}

std::string write_sdimacs_string(const SsatFormula& f) {
    std::ostringstream ss;
    write_sdimacs(f, ss);
    return ss.str();
}

} // namespace ssatc
