#include "ssatc/prefix.hpp"

#include "ssatc/error.hpp"
#include "ssatc/formula.hpp"

namespace ssatc {

Quantifier Quantifier::random(Rational p) {
    if (p <= Rational::zero() || p >= Rational::one())
        throw Error(Errc::InvalidArgument, "randomized quantifier needs 0 < p < 1, got " + p.to_string());
    return Quantifier{QuantifierKind::Random, std::move(p)};
}

void Prefix::append(Var v, const Quantifier& q) {
    if (!v.valid()) throw Error(Errc::InvalidArgument, "variable index 0 cannot be bound");
    if (binds(v)) throw Error(Errc::DuplicateBinding, "variable " + std::to_string(v.idx) + " already bound");
    bindings_.emplace_back(v, q);
    if (pos_.size() <= v.idx) pos_.resize(v.idx + 1, 0);
    pos_[v.idx] = static_cast<uint32_t>(bindings_.size());
}

Prefix prefix_append(const Prefix& p, std::span<const Var> vars, const Quantifier& kind) {
    Prefix out = p;
    for (Var v : vars) out.append(v, kind);
    return out;
}

void SsatFormula::validate() const {
    for (const Clause& c : matrix) {
        if (c.tautological())
            throw Error(Errc::InvalidFormula, "tautological matrix clause " + c.to_dimacs_string());
        for (Lit l : c) {
            if (l.var().idx > num_vars)
                throw Error(Errc::InvalidFormula,
                            "variable " + std::to_string(l.var().idx) + " exceeds declared count");
            if (!prefix.binds(l.var()))
                throw Error(Errc::InvalidFormula,
                            "unbound variable " + std::to_string(l.var().idx) + " in clause " +
                                c.to_dimacs_string());
        }
    }
    for (const auto& [v, q] : prefix.bindings()) {
        if (v.idx > num_vars)
            throw Error(Errc::InvalidFormula,
                        "bound variable " + std::to_string(v.idx) + " exceeds declared count");
        (void)q;
    }
}

uint32_t SsatFormula::max_var_index() const {
    uint32_t m = 0;
    for (const auto& [v, q] : prefix.bindings()) m = std::max(m, v.idx);
    for (const Clause& c : matrix)
        for (Lit l : c) m = std::max(m, l.var().idx);
    return m;
}

} // namespace ssatc
