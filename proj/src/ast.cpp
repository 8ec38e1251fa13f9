#include "ssatc/ast.hpp"

#include "ssatc/error.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ssatc {
namespace ast {

namespace {

Ast make(AstKind kind, Lit lit, std::vector<Ast> children) {
    auto n = std::make_shared<AstNode>();
    n->kind = kind;
    n->lit = lit;
    n->children = std::move(children);
    return n;
}

const Ast& true_node() {
    static const Ast t = make(AstKind::True, Lit(), {});
    return t;
}

const Ast& false_node() {
    static const Ast f = make(AstKind::False, Lit(), {});
    return f;
}

} // namespace

Ast constant(bool value) { return value ? true_node() : false_node(); }

Ast leaf(Lit l) { return make(AstKind::Leaf, l, {}); }

Ast var(Var v) { return leaf(Lit(v, true)); }

Ast negation(Ast a) {
    switch (a->kind) {
        case AstKind::True: return false_node();
        case AstKind::False: return true_node();
        case AstKind::Leaf: return leaf(~a->lit);
        case AstKind::Not: return a->children[0];
        default: return make(AstKind::Not, Lit(), {std::move(a)});
    }
}

Ast conjunction(std::vector<Ast> children) {
    if (children.empty()) return true_node();
    if (children.size() == 1) return children[0];
    return make(AstKind::And, Lit(), std::move(children));
}

Ast disjunction(std::vector<Ast> children) {
    if (children.empty()) return false_node();
    if (children.size() == 1) return children[0];
    return make(AstKind::Or, Lit(), std::move(children));
}

Ast conjunction2(Ast a, Ast b) { return conjunction({std::move(a), std::move(b)}); }
Ast disjunction2(Ast a, Ast b) { return disjunction({std::move(a), std::move(b)}); }

bool is_const(const Ast& a, bool value) {
    return a->kind == (value ? AstKind::True : AstKind::False);
}

bool equal(const Ast& a, const Ast& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case AstKind::True:
        case AstKind::False: return true;
        case AstKind::Leaf: return a->lit == b->lit;
        default: break;
    }
    if (a->children.size() != b->children.size()) return false;
    for (size_t i = 0; i < a->children.size(); ++i)
        if (!equal(a->children[i], b->children[i])) return false;
    return true;
}

namespace {

// ordering key for child dedup: leaves by literal code, others structural
int cmp_nodes(const Ast& a, const Ast& b) {
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (a->kind == AstKind::Leaf) {
        if (a->lit != b->lit) return a->lit < b->lit ? -1 : 1;
        return 0;
    }
    if (a->children.size() != b->children.size())
        return a->children.size() < b->children.size() ? -1 : 1;
    for (size_t i = 0; i < a->children.size(); ++i) {
        int c = cmp_nodes(a->children[i], b->children[i]);
        if (c != 0) return c;
    }
    return 0;
}

} // namespace

Ast simplify(const Ast& a) {
    switch (a->kind) {
        case AstKind::True:
        case AstKind::False:
        case AstKind::Leaf: return a;
        case AstKind::Not: {
            Ast c = simplify(a->children[0]);
            return negation(std::move(c)); // negation() folds constants/leaves/double-Not
        }
        case AstKind::And:
        case AstKind::Or: {
            const bool is_and = a->kind == AstKind::And;
            std::vector<Ast> kids;
            for (const Ast& c0 : a->children) {
                Ast c = simplify(c0);
                if (is_const(c, is_and)) continue;       // neutral element
                if (is_const(c, !is_and)) return c;      // absorbing element
                if (c->kind == a->kind) {
                    for (const Ast& g : c->children) kids.push_back(g);
                } else {
                    kids.push_back(std::move(c));
                }
            }
            std::sort(kids.begin(), kids.end(),
                      [](const Ast& x, const Ast& y) { return cmp_nodes(x, y) < 0; });
            kids.erase(std::unique(kids.begin(), kids.end(),
                                   [](const Ast& x, const Ast& y) { return cmp_nodes(x, y) == 0; }),
                       kids.end());
            if (kids.empty()) return constant(is_and);
            if (kids.size() == 1) return kids[0];
            return make(a->kind, Lit(), std::move(kids));
        }
    }
    return a;
}

bool eval(const Ast& a, const Assignment& tau) {
    switch (a->kind) {
        case AstKind::True: return true;
        case AstKind::False: return false;
        case AstKind::Leaf: {
            auto v = tau.value(a->lit.var());
            if (!v.has_value())
                throw Error(Errc::InvalidArgument,
                            "eval: unassigned variable " + std::to_string(a->lit.var().idx));
            return *v == a->lit.positive();
        }
        case AstKind::Not: return !eval(a->children[0], tau);
        case AstKind::And:
            for (const Ast& c : a->children)
                if (!eval(c, tau)) return false;
            return true;
        case AstKind::Or:
            for (const Ast& c : a->children)
                if (eval(c, tau)) return true;
            return false;
    }
    return false;
}

namespace {

void collect_vars(const Ast& a, std::set<Var>& out) {
    if (a->kind == AstKind::Leaf) {
        out.insert(a->lit.var());
        return;
    }
    for (const Ast& c : a->children) collect_vars(c, out);
}

} // namespace

std::set<Var> vars(const Ast& a) {
    std::set<Var> out;
    collect_vars(a, out);
    return out;
}

Ast remap_vars(const Ast& a, const std::map<uint32_t, Var>& m) {
    switch (a->kind) {
        case AstKind::True:
        case AstKind::False: return a;
        case AstKind::Leaf: {
            auto it = m.find(a->lit.var().idx);
            if (it == m.end())
                throw Error(Errc::InvalidArgument,
                            "remap_vars: no image for variable " + std::to_string(a->lit.var().idx));
            return leaf(Lit(it->second, a->lit.positive()));
        }
        default: {
            std::vector<Ast> kids;
            kids.reserve(a->children.size());
            for (const Ast& c : a->children) kids.push_back(remap_vars(c, m));
            return make(a->kind, Lit(), std::move(kids));
        }
    }
}

bool equivalent(const Ast& a, const Ast& b, unsigned max_vars) {
    std::set<Var> vs = vars(a);
    for (Var v : vars(b)) vs.insert(v);
    if (vs.size() > max_vars)
        throw Error(Errc::TooLarge, "equivalence check over " + std::to_string(vs.size()) + " variables");
    std::vector<Var> order(vs.begin(), vs.end());
    const uint64_t n = 1ull << order.size();
    for (uint64_t bits = 0; bits < n; ++bits) {
        Assignment tau;
        for (size_t i = 0; i < order.size(); ++i) tau.set(order[i], (bits >> i) & 1);
        if (eval(a, tau) != eval(b, tau)) return false;
    }
    return true;
}

std::string to_sexpr(const Ast& a) {
    switch (a->kind) {
        case AstKind::True: return "true";
        case AstKind::False: return "false";
        case AstKind::Leaf: {
            std::string v = "(var " + std::to_string(a->lit.var().idx) + ")";
            return a->lit.positive() ? v : "(not " + v + ")";
        }
        case AstKind::Not: return "(not " + to_sexpr(a->children[0]) + ")";
        case AstKind::And:
        case AstKind::Or: {
            std::string out = a->kind == AstKind::And ? "(and" : "(or";
            for (const Ast& c : a->children) out += " " + to_sexpr(c);
            return out + ")";
        }
    }
    return "false";
}

namespace {

struct SexprParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }

    std::string token() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && s[pos] != ' ' && s[pos] != '\t' && s[pos] != '(' && s[pos] != ')') ++pos;
        return std::string(s.substr(start, pos - start));
    }

    Ast expr() {
        skip_ws();
        if (pos >= s.size()) throw Error(Errc::ParseError, "truncated interpolant expression");
        if (s[pos] != '(') {
            std::string t = token();
            if (t == "true") return constant(true);
            if (t == "false") return constant(false);
            throw Error(Errc::ParseError, "unexpected token '" + t + "' in interpolant expression");
        }
        ++pos; // '('
        std::string head = token();
        if (head == "var") {
            std::string idx = token();
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') throw Error(Errc::ParseError, "missing ')' after var");
            ++pos;
            unsigned long v = std::stoul(idx);
            if (v == 0) throw Error(Errc::ParseError, "variable index 0 in interpolant");
            return var(Var(static_cast<uint32_t>(v)));
        }
        std::vector<Ast> kids;
        while (true) {
            skip_ws();
            if (pos >= s.size()) throw Error(Errc::ParseError, "missing ')' in interpolant expression");
            if (s[pos] == ')') {
                ++pos;
                break;
            }
            kids.push_back(expr());
        }
        if (head == "not") {
            if (kids.size() != 1) throw Error(Errc::ParseError, "not takes one argument");
            return negation(kids[0]);
        }
        if (head == "and") {
            if (kids.empty()) throw Error(Errc::ParseError, "and needs arguments");
            return conjunction(std::move(kids));
        }
        if (head == "or") {
            if (kids.empty()) throw Error(Errc::ParseError, "or needs arguments");
            return disjunction(std::move(kids));
        }
        throw Error(Errc::ParseError, "unknown operator '" + head + "' in interpolant expression");
    }
};

std::string pretty_rec(const Ast& a, const std::vector<std::string>& names, int parent_prec) {
    auto name_of = [&](Var v) -> std::string {
        if (v.idx < names.size() && !names[v.idx].empty()) return names[v.idx];
        return "x" + std::to_string(v.idx);
    };
    switch (a->kind) {
        case AstKind::True: return "true";
        case AstKind::False: return "false";
        case AstKind::Leaf:
            return a->lit.positive() ? name_of(a->lit.var()) : "!" + name_of(a->lit.var());
        case AstKind::Not: return "!(" + pretty_rec(a->children[0], names, 0) + ")";
        case AstKind::And:
        case AstKind::Or: {
            const int prec = a->kind == AstKind::And ? 2 : 1;
            const char* op = a->kind == AstKind::And ? " & " : " | ";
            std::string out;
            for (size_t i = 0; i < a->children.size(); ++i) {
                if (i) out += op;
                out += pretty_rec(a->children[i], names, prec);
            }
            if (prec < parent_prec) return "(" + out + ")";
            return out;
        }
    }
    return "false";
}

} // namespace

Ast parse_sexpr(std::string_view s) {
    SexprParser p{s};
    Ast out = p.expr();
    p.skip_ws();
    if (p.pos != s.size())
        throw Error(Errc::ParseError, "trailing characters in interpolant expression");
    return out;
}

std::string pretty(const Ast& a, const std::vector<std::string>& names) {
    return pretty_rec(a, names, 0);
}

} // namespace ast
} // namespace ssatc
