#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "reasonkit/errors.hpp"

namespace reasonkit {

using Var = std::int32_t;

struct Literal {
    Var var = 0;
    bool positive = true;

    Literal negated() const { return {var, !positive}; }
    auto operator<=>(const Literal&) const = default;

    std::string str() const { return (positive ? "x" : "!x") + std::to_string(var); }
};

inline Literal pos(Var v) { return {v, true}; }
inline Literal neg(Var v) { return {v, false}; }

// Consistent set of literals: sorted by variable, at most one polarity per
// variable. Terms are read conjunctively, clauses disjunctively; both are
// just literal sets with different roles, so they share one implementation
// and stay distinct types.
template <class Tag>
class LiteralSet {
  public:
    LiteralSet() = default;

    explicit LiteralSet(std::vector<Literal> lits) : lits_(std::move(lits)) {
        std::sort(lits_.begin(), lits_.end());
        lits_.erase(std::unique(lits_.begin(), lits_.end()), lits_.end());
        for (std::size_t i = 1; i < lits_.size(); ++i)
            if (lits_[i].var == lits_[i - 1].var)
                throw InputError("inconsistent literal set: x" + std::to_string(lits_[i].var) +
                                 " occurs with both polarities");
    }

    LiteralSet(std::initializer_list<Literal> lits) : LiteralSet(std::vector<Literal>(lits)) {}

    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }
    const std::vector<Literal>& literals() const { return lits_; }

    bool contains(Literal l) const {
        return std::binary_search(lits_.begin(), lits_.end(), l);
    }

    // The literal on `v`, if any.
    const Literal* find_var(Var v) const {
        auto it = std::lower_bound(lits_.begin(), lits_.end(), Literal{v, false});
        if (it != lits_.end() && it->var == v) return &*it;
        return nullptr;
    }

    bool subset_of(const LiteralSet& other) const {
        return std::includes(other.lits_.begin(), other.lits_.end(), lits_.begin(), lits_.end());
    }

    bool shares_literal_with(const LiteralSet& other) const {
        auto a = lits_.begin();
        auto b = other.lits_.begin();
        while (a != lits_.end() && b != other.lits_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    LiteralSet with(Literal l) const {
        auto copy = lits_;
        copy.push_back(l);
        return LiteralSet(std::move(copy));
    }

    LiteralSet without(Literal l) const {
        std::vector<Literal> copy;
        copy.reserve(lits_.size());
        for (const auto& x : lits_)
            if (!(x == l)) copy.push_back(x);
        LiteralSet out;
        out.lits_ = std::move(copy); // already sorted and consistent
        return out;
    }

    std::vector<Var> vars() const {
        std::vector<Var> out;
        out.reserve(lits_.size());
        for (const auto& l : lits_) out.push_back(l.var);
        return out;
    }

    auto operator<=>(const LiteralSet&) const = default;

    std::string str() const {
        if (lits_.empty()) return "{}";
        std::string out = "{";
        for (std::size_t i = 0; i < lits_.size(); ++i) {
            if (i) out += ",";
            out += lits_[i].str();
        }
        return out + "}";
    }

  private:
    std::vector<Literal> lits_;
};

using Term = LiteralSet<struct TermTag>;
using Clause = LiteralSet<struct ClauseTag>;

inline Term term_from(const Clause& c) { return Term(c.literals()); }
inline Clause clause_from(const Term& t) { return Clause(t.literals()); }

// Complete Boolean assignment to the n features.
class Instance {
  public:
    Instance() = default;
    explicit Instance(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw InputError("instance bits must be 0 or 1");
    }

    static Instance from_string(const std::string& s) {
        std::vector<std::uint8_t> bits;
        bits.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1') throw ParseError("instance string must be over {0,1}: '" + s + "'");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return Instance(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }
    bool operator==(const Instance&) const = default;

    Literal literal_of(Var v) const { return {v, bits_[static_cast<std::size_t>(v)] != 0}; }

    // t_x: the term fixing every feature to its value in x.
    Term term() const {
        std::vector<Literal> lits;
        lits.reserve(bits_.size());
        for (std::size_t i = 0; i < bits_.size(); ++i)
            lits.push_back({static_cast<Var>(i), bits_[i] != 0});
        return Term(std::move(lits));
    }

    // The subterm of t_x over the given (sorted) variables.
    Term term_over(const std::vector<Var>& vars) const {
        std::vector<Literal> lits;
        lits.reserve(vars.size());
        for (Var v : vars) lits.push_back(literal_of(v));
        return Term(std::move(lits));
    }

    std::string str() const {
        std::string out;
        out.reserve(bits_.size());
        for (auto b : bits_) out += static_cast<char>('0' + b);
        return out;
    }

  private:
    std::vector<std::uint8_t> bits_;
};

} // namespace reasonkit
