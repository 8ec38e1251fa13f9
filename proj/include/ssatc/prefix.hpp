#pragma once

#include "ssatc/rational.hpp"
#include "ssatc/types.hpp"

#include <span>
#include <utility>
#include <vector>

namespace ssatc {

enum class QuantifierKind { Exists, Random };

struct Quantifier {
    QuantifierKind kind = QuantifierKind::Exists;
    Rational prob; // meaningful iff kind == Random, 0 < prob < 1

    static Quantifier exists() { return Quantifier{QuantifierKind::Exists, Rational()}; }
    static Quantifier random(Rational p); // validates the open-interval bound

    bool is_random() const { return kind == QuantifierKind::Random; }
    bool operator==(const Quantifier&) const = default;
};

/// Ordered quantifier prefix Q_1 x_1 ... Q_n x_n. Positions are 1-based;
/// each variable is bound at most once.
class Prefix {
public:
    Prefix() = default;

    size_t size() const { return bindings_.size(); }
    bool empty() const { return bindings_.empty(); }

    bool binds(Var v) const { return position(v) != 0; }
    /// 1-based position of v in the prefix, 0 if unbound.
    uint32_t position(Var v) const {
        return v.idx < pos_.size() ? pos_[v.idx] : 0;
    }

    const std::pair<Var, Quantifier>& binding(size_t pos1) const { return bindings_[pos1 - 1]; }
    Var var_at(size_t pos1) const { return bindings_[pos1 - 1].first; }
    const Quantifier& quantifier_at(size_t pos1) const { return bindings_[pos1 - 1].second; }
    const Quantifier& quantifier_of(Var v) const { return quantifier_at(position(v)); }

    const std::vector<std::pair<Var, Quantifier>>& bindings() const { return bindings_; }

    /// Appends a binding innermost. Throws Error(DuplicateBinding).
    void append(Var v, const Quantifier& q);

    bool operator==(const Prefix&) const = default;

private:
    std::vector<std::pair<Var, Quantifier>> bindings_;
    std::vector<uint32_t> pos_; // var idx -> 1-based position, 0 unbound
};

/// Returns p with vars appended innermost in order, all under kind.
/// Throws Error(DuplicateBinding) if some var is already bound.
Prefix prefix_append(const Prefix& p, std::span<const Var> vars, const Quantifier& kind);

} // namespace ssatc
