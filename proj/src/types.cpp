#include "ssatc/types.hpp"

#include "ssatc/error.hpp"

#include <algorithm>

namespace ssatc {

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
    std::sort(lits_.begin(), lits_.end());
    lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
}

Clause Clause::from_dimacs(std::span<const int> lits) {
    std::vector<Lit> out;
    out.reserve(lits.size());
    for (int l : lits) out.push_back(Lit::from_dimacs(l));
    return Clause(std::move(out));
}

bool Clause::contains(Lit l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
}

bool Clause::tautological() const {
    // literals are sorted by code, so x and ~x are adjacent
    for (size_t i = 0; i + 1 < lits_.size(); ++i)
        if (lits_[i].var() == lits_[i + 1].var()) return true;
    return false;
}

Clause Clause::without(Lit l) const {
    std::vector<Lit> out;
    out.reserve(lits_.size() - 1);
    for (Lit x : lits_)
        if (x != l) out.push_back(x);
    Clause c;
    c.lits_ = std::move(out); // stays sorted
    return c;
}

Clause Clause::merged(const Clause& o) const {
    std::vector<Lit> out;
    out.reserve(lits_.size() + o.lits_.size());
    std::merge(lits_.begin(), lits_.end(), o.lits_.begin(), o.lits_.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    Clause c;
    c.lits_ = std::move(out);
    return c;
}

size_t Clause::hash() const {
    size_t h = 1469598103934665603ull;
    for (Lit l : lits_) h = (h ^ l.code()) * 1099511628211ull;
    return h;
}

std::string Clause::to_dimacs_string() const {
    std::string out;
    for (size_t i = 0; i < lits_.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(lits_[i].to_dimacs());
    }
    return out;
}

Assignment falsifying_assignment(const Clause& c) {
    if (c.tautological())
        throw Error(Errc::TautologicalClause, "clause " + c.to_dimacs_string() + " has no falsifying assignment");
    Assignment a;
    for (Lit l : c) a.set(l.var(), !l.positive());
    return a;
}

TruthValue eval_clause(const Clause& c, const Assignment& tau) {
    bool all_false = true;
    for (Lit l : c) {
        auto v = tau.value(l.var());
        if (!v.has_value()) {
            all_false = false;
            continue;
        }
        if (*v == l.positive()) return TruthValue::True;
    }
    return all_false ? TruthValue::False : TruthValue::Undetermined;
}

} // namespace ssatc
