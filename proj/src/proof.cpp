#include "ssatc/proof.hpp"

#include "ssatc/error.hpp"
#include "ssatc/sdimacs.hpp"

#include <fstream>
#include <sstream>

namespace ssatc {

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::R1: return "R1";
        case Rule::R2: return "R2";
        case Rule::R3: return "R3";
        case Rule::R2_1: return "R2.1";
        case Rule::R2_2: return "R2.2";
        case Rule::R2_3: return "R2.3";
    }
    return "?";
}

bool rule_is_interpolating(Rule r) {
    return r == Rule::R2_1 || r == Rule::R2_2 || r == Rule::R2_3;
}

namespace {

Rule base_rule(Rule r) {
    switch (r) {
        case Rule::R2_1: return Rule::R1;
        case Rule::R2_2: return Rule::R2;
        case Rule::R2_3: return Rule::R3;
        default: return r;
    }
}

Rule interpolating_rule(Rule r) {
    switch (r) {
        case Rule::R1: return Rule::R2_1;
        case Rule::R2: return Rule::R2_2;
        case Rule::R3: return Rule::R2_3;
        default: return r;
    }
}

} // namespace

void write_trace(const ProofTrace& t, std::ostream& out) {
    out << "c ssatc proof trace\n";
    write_sdimacs(t.formula, out);
    if (t.partition) {
        out << "a";
        for (uint32_t i : t.partition->a_clauses) out << " " << (i + 1);
        out << " 0\n";
    }
    for (size_t i = 0; i < t.steps.size(); ++i) {
        const DerivationStep& s = t.steps[i];
        out << "s " << (i + 1) << " ";
        switch (base_rule(s.rule)) {
            case Rule::R1: {
                out << "R1 " << s.conclusion.clause.to_dimacs_string();
                if (!s.conclusion.clause.empty()) out << " ";
                out << "0 p " << s.conclusion.prob.to_string();
                break;
            }
            case Rule::R2: {
                out << "R2 " << s.conclusion.clause.to_dimacs_string();
                if (!s.conclusion.clause.empty()) out << " ";
                out << "0 p " << s.conclusion.prob.to_string() << " w";
                for (const auto& [vidx, val] : s.witness.entries())
                    out << " " << (val ? static_cast<int>(vidx) : -static_cast<int>(vidx));
                out << " 0";
                break;
            }
            default: {
                out << "R3 " << (s.premises.at(0) + 1) << " " << (s.premises.at(1) + 1) << " x "
                    << s.pivot.idx << " " << s.conclusion.clause.to_dimacs_string();
                if (!s.conclusion.clause.empty()) out << " ";
                out << "0 p " << s.conclusion.prob.to_string();
                break;
            }
        }
        out << "\n";
        if (s.interpolant) out << "i " << (i + 1) << " " << ast::to_sexpr(s.interpolant) << "\n";
    }
}

std::string write_trace_string(const ProofTrace& t) {
    std::ostringstream ss;
    write_trace(t, ss);
    return ss.str();
}

ProofTrace read_trace(std::istream& in) {
    // split header (SDIMACS + optional partition) from step lines
    std::ostringstream header;
    std::vector<std::string> step_lines;
    std::vector<uint32_t> a_indices;
    bool have_partition = false;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "s" || tok == "i") {
            step_lines.push_back(line);
        } else if (tok == "a") {
            have_partition = true;
            long long v;
            bool terminated = false;
            while (ls >> v) {
                if (v == 0) {
                    terminated = true;
                    break;
                }
                if (v < 1) throw Error(Errc::ParseError, "bad partition index " + std::to_string(v));
                a_indices.push_back(static_cast<uint32_t>(v - 1));
            }
            if (!terminated) throw Error(Errc::ParseError, "partition line not terminated by 0");
        } else {
            header << line << "\n";
        }
    }

    ProofTrace t;
    {
        std::istringstream hs(header.str());
        t.formula = read_sdimacs(hs);
    }
    if (have_partition) t.partition = Partition::make(t.formula, a_indices);

    auto parse_clause_until_zero = [](std::istringstream& ls, int lineno) {
        std::vector<int> lits;
        long long v;
        while (ls >> v) {
            if (v == 0) return Clause::from_dimacs(lits);
            lits.push_back(static_cast<int>(v));
        }
        throw Error(Errc::ParseError, "step line " + std::to_string(lineno) + ": clause not terminated");
    };

    int lineno = 0;
    for (const std::string& sl : step_lines) {
        ++lineno;
        std::istringstream ls(sl);
        std::string tok;
        ls >> tok;
        if (tok == "i") {
            size_t id;
            if (!(ls >> id) || id == 0 || id > t.steps.size())
                throw Error(Errc::ParseError, "interpolant line references bad step id");
            std::string rest;
            std::getline(ls, rest);
            DerivationStep& st = t.steps[id - 1];
            st.interpolant = ast::parse_sexpr(rest);
            st.rule = interpolating_rule(st.rule);
            continue;
        }
        size_t id;
        std::string rule;
        if (!(ls >> id >> rule)) throw Error(Errc::ParseError, "malformed step line: " + sl);
        if (id != t.steps.size() + 1)
            throw Error(Errc::ParseError, "step ids must be dense and increasing, got " + std::to_string(id));
        DerivationStep st;
        if (rule == "R1") {
            st.rule = Rule::R1;
            st.conclusion.clause = parse_clause_until_zero(ls, lineno);
        } else if (rule == "R2") {
            st.rule = Rule::R2;
            st.conclusion.clause = parse_clause_until_zero(ls, lineno);
        } else if (rule == "R3") {
            st.rule = Rule::R3;
            long long p1, p2;
            std::string x;
            long long pivot;
            if (!(ls >> p1 >> p2 >> x >> pivot) || x != "x" || p1 < 1 || p2 < 1 || pivot < 1)
                throw Error(Errc::ParseError, "malformed R3 step: " + sl);
            if (static_cast<size_t>(p1) > t.steps.size() || static_cast<size_t>(p2) > t.steps.size())
                throw Error(Errc::ParseError, "R3 premises must reference earlier steps: " + sl);
            st.premises = {static_cast<uint32_t>(p1 - 1), static_cast<uint32_t>(p2 - 1)};
            st.pivot = Var(static_cast<uint32_t>(pivot));
            st.conclusion.clause = parse_clause_until_zero(ls, lineno);
        } else {
            throw Error(Errc::ParseError, "unknown rule '" + rule + "'");
        }
        std::string ptok, pval;
        if (!(ls >> ptok >> pval) || ptok != "p")
            throw Error(Errc::ParseError, "step missing probability annotation: " + sl);
        st.conclusion.prob = Rational::from_string(pval);
        if (rule == "R2") {
            std::string wtok;
            if (!(ls >> wtok) || wtok != "w")
                throw Error(Errc::ParseError, "R2 step missing witness: " + sl);
            long long v;
            bool terminated = false;
            while (ls >> v) {
                if (v == 0) {
                    terminated = true;
                    break;
                }
                st.witness.set(Var(static_cast<uint32_t>(v < 0 ? -v : v)), v > 0);
            }
            if (!terminated) throw Error(Errc::ParseError, "witness not terminated by 0: " + sl);
        }
        t.steps.push_back(std::move(st));
    }
    return t;
}

ProofTrace read_trace_string(const std::string& text) {
    std::istringstream in(text);
    return read_trace(in);
}

ProofTrace read_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return read_trace(in);
}

} // namespace ssatc
