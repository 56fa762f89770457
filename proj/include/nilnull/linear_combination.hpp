#pragma once

// Sparse finite linear combinations of monomial keys with Gaussian-rational
// coefficients. Zero coefficients are never stored, so two combinations are
// equal iff their term maps are equal.

#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "nilnull/gauss_rational.hpp"

namespace nilnull {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

/// Graded order: lower total degree first, then lexicographically larger
/// exponent vectors first (so B1^2 precedes B1*B2 precedes B2^2).
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return b < a;
    }
};

template <class Key, class Compare = std::less<Key>>
class LinearCombination {
public:
    using map_type = std::map<Key, GaussRational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;
    LinearCombination(Key key, GaussRational coeff) { add(std::move(key), std::move(coeff)); }

    void add(const Key& key, const GaussRational& coeff) {
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void add(const LinearCombination& other, const GaussRational& scale = 1) {
        if (scale.is_zero()) return;
        for (const auto& [k, c] : other.terms_) add(k, scale.is_one() ? c : c * scale);
    }

    GaussRational coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? GaussRational{} : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const map_type& terms() const { return terms_; }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }

    LinearCombination& operator+=(const LinearCombination& o) {
        add(o);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        add(o, -1);
        return *this;
    }
    LinearCombination& operator*=(const GaussRational& s) {
        if (s.is_zero()) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return *this;
    }
    LinearCombination operator-() const {
        LinearCombination r = *this;
        for (auto& [k, c] : r.terms_) c = -c;
        return r;
    }

    friend bool operator==(const LinearCombination& a, const LinearCombination& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LinearCombination& a, const LinearCombination& b) { return !(a == b); }

private:
    map_type terms_;
};

}  // namespace nilnull
