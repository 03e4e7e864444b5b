#pragma once

#include "homvar/errors.hpp"
#include "homvar/rational.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace homvar {

// Exponent vector over the m independent-variable slots. Slots are 1-based
// throughout the library. Values are immutable after construction.
//
// The canonical order is graded lexicographic: shorter indices first, and
// within a grade the index whose leading slots carry more weight comes
// first, so for m = 2 and length 2 the order is (2,0), (1,1), (0,2).
class MultiIndex {
public:
    explicit MultiIndex(int m) : counts_(static_cast<size_t>(m), 0) {}
    MultiIndex(std::initializer_list<int> counts) : counts_(counts) {}
    explicit MultiIndex(std::vector<int> counts) : counts_(std::move(counts)) {}

    static MultiIndex unit(int m, int slot) {
        MultiIndex r(m);
        r.counts_[static_cast<size_t>(slot - 1)] = 1;
        return r;
    }

    int dim() const { return static_cast<int>(counts_.size()); }

    int length() const {
        int s = 0;
        for (int c : counts_) s += c;
        return s;
    }

    int at(int slot) const { return counts_[static_cast<size_t>(slot - 1)]; }

    bool is_zero() const { return length() == 0; }

    // I! = product of the slot-count factorials.
    BigInt factorial() const {
        BigInt r = 1;
        for (int c : counts_) r *= int_factorial(c);
        return r;
    }

    // |I|!/I!, the multinomial coefficient counting ordered index tuples.
    BigInt weight() const { return int_factorial(length()) / factorial(); }

    MultiIndex plus(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (size_t i = 0; i < counts_.size(); ++i) r.counts_[i] += o.counts_[i];
        return r;
    }

    // Componentwise subtraction; nullopt when any count would go negative.
    std::optional<MultiIndex> try_minus(const MultiIndex& o) const {
        MultiIndex r = *this;
        for (size_t i = 0; i < counts_.size(); ++i) {
            r.counts_[i] -= o.counts_[i];
            if (r.counts_[i] < 0) return std::nullopt;
        }
        return r;
    }

    MultiIndex minus(const MultiIndex& o) const {
        auto r = try_minus(o);
        if (!r)
            throw DegenerateIndex("multi-index subtraction " + to_string() +
                                  " - " + o.to_string() + " has a negative count");
        return *r;
    }

    MultiIndex incremented(int slot) const {
        MultiIndex r = *this;
        r.counts_[static_cast<size_t>(slot - 1)] += 1;
        return r;
    }

    bool operator==(const MultiIndex& o) const { return counts_ == o.counts_; }

    bool operator<(const MultiIndex& o) const {
        int la = length(), lb = o.length();
        if (la != lb) return la < lb;
        for (size_t i = 0; i < counts_.size(); ++i) {
            if (counts_[i] != o.counts_[i]) return counts_[i] > o.counts_[i];
        }
        return false;
    }

    const std::vector<int>& counts() const { return counts_; }

    // Textual form "(c1,...,cm)".
    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < counts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(counts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> counts_;
};

// All multi-indices of length p over m slots, in the canonical order, without
// repetition. List size is C(p+m-1, m-1).
std::vector<MultiIndex> enumerate_multiindices(int m, int p);

// Falling-factorial weight M!/(M-I)!; requires M >= I componentwise.
BigInt falling_weight(const MultiIndex& M, const MultiIndex& I);

}  // namespace homvar
