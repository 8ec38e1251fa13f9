#include "ssatc/cnf.hpp"

#include "ssatc/error.hpp"

#include <algorithm>

namespace ssatc {

Var VarAllocator::fresh(const std::string& name) {
    Var v(next_++);
    if (names_) {
        if (names_->size() <= v.idx) names_->resize(v.idx + 1);
        (*names_)[v.idx] = name.empty() ? ("aux" + std::to_string(v.idx)) : name;
    }
    return v;
}

namespace {

// Negation-normal form: Not only at leaves (folded into literal signs).
Ast to_nnf(const Ast& a, bool negate) {
    switch (a->kind) {
        case AstKind::True: return ast::constant(!negate);
        case AstKind::False: return ast::constant(negate);
        case AstKind::Leaf: return negate ? ast::leaf(~a->lit) : a;
        case AstKind::Not: return to_nnf(a->children[0], !negate);
        case AstKind::And:
        case AstKind::Or: {
            const bool is_and = (a->kind == AstKind::And) != negate;
            std::vector<Ast> kids;
            kids.reserve(a->children.size());
            for (const Ast& c : a->children) kids.push_back(to_nnf(c, negate));
            return is_and ? ast::conjunction(std::move(kids)) : ast::disjunction(std::move(kids));
        }
    }
    return a;
}

constexpr size_t kDistributeBudget = 8;

struct CnfBuilder {
    VarAllocator& alloc;
    std::vector<Clause>& clauses;
    std::vector<Var>& aux;

    // Encodes an NNF subtree, returning the clause set for it. The False
    // constant yields the empty clause.
    std::vector<Clause> encode(const Ast& a) {
        switch (a->kind) {
            case AstKind::True: return {};
            case AstKind::False: return {Clause(std::vector<Lit>{})};
            case AstKind::Leaf: return {Clause({a->lit})};
            case AstKind::And: {
                std::vector<Clause> out;
                for (const Ast& c : a->children) {
                    auto part = encode(c);
                    out.insert(out.end(), part.begin(), part.end());
                }
                return out;
            }
            case AstKind::Or: {
                // Gather each child's clause set, then either distribute or
                // introduce a one-sided definition per multi-clause child.
                std::vector<std::vector<Clause>> parts;
                parts.reserve(a->children.size());
                size_t product = 1;
                for (const Ast& c : a->children) {
                    parts.push_back(encode(c));
                    if (parts.back().empty()) return {}; // child is true, whole Or is true
                    product *= parts.back().size();
                    if (product > 4 * kDistributeBudget) product = 4 * kDistributeBudget; // clamp
                }
                if (product <= kDistributeBudget) return distribute(parts);
                std::vector<Lit> top;
                std::vector<Clause> out;
                for (auto& part : parts) {
                    if (part.size() == 1) {
                        for (Lit l : part[0]) top.push_back(l);
                        continue;
                    }
                    Var a_var = alloc.fresh();
                    aux.push_back(a_var);
                    Lit pos(a_var, true);
                    for (const Clause& d : part) {
                        std::vector<Lit> ls(d.lits());
                        ls.push_back(~pos);
                        out.push_back(Clause(std::move(ls)));
                    }
                    top.push_back(pos);
                }
                Clause top_clause(std::move(top));
                if (!top_clause.tautological()) out.push_back(std::move(top_clause));
                return out;
            }
            case AstKind::Not: break; // NNF input has no Not nodes
        }
        throw Error(Errc::InvalidArgument, "encode: input not in NNF");
    }

    std::vector<Clause> distribute(const std::vector<std::vector<Clause>>& parts) {
        std::vector<Clause> acc = {Clause(std::vector<Lit>{})};
        for (const auto& part : parts) {
            std::vector<Clause> next;
            for (const Clause& left : acc)
                for (const Clause& d : part) {
                    Clause m = left.merged(d);
                    if (!m.tautological()) next.push_back(std::move(m));
                }
            acc = std::move(next);
        }
        return acc;
    }
};

CnfResult cnf_of_nnf(const Ast& nnf, VarAllocator& alloc) {
    CnfResult res;
    CnfBuilder b{alloc, res.clauses, res.aux_vars};
    res.clauses = b.encode(nnf);
    // drop duplicate clauses
    std::sort(res.clauses.begin(), res.clauses.end(),
              [](const Clause& x, const Clause& y) { return x.lits() < y.lits(); });
    res.clauses.erase(std::unique(res.clauses.begin(), res.clauses.end()), res.clauses.end());
    return res;
}

} // namespace

CnfResult to_cnf(const Ast& f, VarAllocator& alloc) {
    return cnf_of_nnf(to_nnf(ast::simplify(f), false), alloc);
}

CnfResult negate_to_cnf(const Ast& f, VarAllocator& alloc) {
    return cnf_of_nnf(to_nnf(ast::simplify(f), true), alloc);
}

} // namespace ssatc
