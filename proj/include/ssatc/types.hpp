#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ssatc {

/// Propositional variable, 1-based dense index.
struct Var {
    uint32_t idx = 0;

    Var() = default;
    explicit Var(uint32_t i) : idx(i) {}
    bool valid() const { return idx != 0; }
    auto operator<=>(const Var&) const = default;
};

/// Literal: a variable or its negation, MiniSat-style packed code.
class Lit {
public:
    Lit() : code_(0) {}
    Lit(Var v, bool positive) : code_(v.idx * 2 + (positive ? 0 : 1)) {}

    static Lit from_dimacs(int n) { return Lit(Var(static_cast<uint32_t>(n < 0 ? -n : n)), n > 0); }

    Var var() const { return Var(code_ >> 1); }
    bool positive() const { return (code_ & 1) == 0; }
    Lit operator~() const {
        Lit l;
        l.code_ = code_ ^ 1;
        return l;
    }
    int to_dimacs() const { return positive() ? static_cast<int>(code_ >> 1) : -static_cast<int>(code_ >> 1); }
    uint32_t code() const { return code_; }

    auto operator<=>(const Lit&) const = default;

private:
    uint32_t code_;
};

/// Clause: canonical sorted set of literals (no duplicates). May be
/// tautological only where an operation explicitly allows it.
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Lit> lits);

    static Clause from_dimacs(std::span<const int> lits);

    bool empty() const { return lits_.empty(); }
    size_t size() const { return lits_.size(); }
    bool contains(Lit l) const;
    bool tautological() const;

    /// Clause without the (required present) literal l.
    Clause without(Lit l) const;
    /// Set union with another clause.
    Clause merged(const Clause& o) const;

    const std::vector<Lit>& lits() const { return lits_; }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    bool operator==(const Clause&) const = default;
    size_t hash() const;
    std::string to_dimacs_string() const; // "1 -2 3"

private:
    std::vector<Lit> lits_; // sorted by code, unique
};

enum class TruthValue { False, True, Undetermined };

/// Partial assignment of variables to truth values.
class Assignment {
public:
    Assignment() = default;

    void set(Var v, bool value) { map_[v.idx] = value; }
    std::optional<bool> value(Var v) const {
        auto it = map_.find(v.idx);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    bool defines(Var v) const { return map_.count(v.idx) != 0; }
    size_t size() const { return map_.size(); }
    bool empty() const { return map_.empty(); }

    /// Iteration in variable order as (index, value) pairs.
    const std::map<uint32_t, bool>& entries() const { return map_; }

    bool operator==(const Assignment&) const = default;

private:
    std::map<uint32_t, bool> map_;
};

/// The unique assignment falsifying a non-tautological clause:
/// x -> true iff ~x in c, x -> false iff x in c.
/// Throws Error(TautologicalClause) on tautologies.
Assignment falsifying_assignment(const Clause& c);

/// True if some literal is satisfied, false if all are falsified,
/// undetermined otherwise.
TruthValue eval_clause(const Clause& c, const Assignment& tau);

} // namespace ssatc
