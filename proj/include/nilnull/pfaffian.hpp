#pragma once

// Pfaffians over commutative coefficient rings and the index-set Pfaffians
// Pf(K), Pf^k(K'), Pf_h(K') of an algebra, all valued in the center
// polynomial ring.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilnull/lie_algebra.hpp"
#include "nilnull/matrix.hpp"
#include "nilnull/poly.hpp"

namespace nilnull {

/// A sorted duplicate-free set of 1-based B-indices.
class SubsetK {
public:
    SubsetK() = default;
    SubsetK(std::initializer_list<std::size_t> xs) : SubsetK(std::vector<std::size_t>(xs)) {}
    explicit SubsetK(std::vector<std::size_t> xs) : m_(std::move(xs)) {
        std::sort(m_.begin(), m_.end());
        if (std::adjacent_find(m_.begin(), m_.end()) != m_.end())
            throw Error(ErrorKind::InvalidInput, "index set contains a repeated index");
        if (!m_.empty() && m_.front() == 0) throw Error(ErrorKind::InvalidInput, "index sets are 1-based");
    }

    static SubsetK from_mask(std::uint64_t mask) {
        SubsetK s;
        for (std::size_t j = 0; mask; ++j, mask >>= 1u)
            if (mask & 1u) s.m_.push_back(j + 1);
        return s;
    }

    const std::vector<std::size_t>& members() const { return m_; }
    std::size_t size() const { return m_.size(); }
    bool empty() const { return m_.empty(); }
    bool is_even() const { return m_.size() % 2 == 0; }
    std::size_t operator[](std::size_t pos) const { return m_[pos]; }
    auto begin() const { return m_.begin(); }
    auto end() const { return m_.end(); }

    bool contains(std::size_t k) const { return std::binary_search(m_.begin(), m_.end(), k); }

    /// 0-based position of k inside the set; k must be a member.
    std::size_t position(std::size_t k) const {
        return static_cast<std::size_t>(std::lower_bound(m_.begin(), m_.end(), k) - m_.begin());
    }

    SubsetK with(std::size_t k) const {
        if (contains(k)) return *this;
        SubsetK s = *this;
        s.m_.insert(std::lower_bound(s.m_.begin(), s.m_.end(), k), k);
        return s;
    }
    SubsetK without(std::size_t k) const {
        SubsetK s = *this;
        auto it = std::lower_bound(s.m_.begin(), s.m_.end(), k);
        if (it != s.m_.end() && *it == k) s.m_.erase(it);
        return s;
    }

    bool is_subset_of(const SubsetK& o) const { return std::includes(o.m_.begin(), o.m_.end(), m_.begin(), m_.end()); }

    std::uint64_t mask() const {
        std::uint64_t r = 0;
        for (auto k : m_) r |= std::uint64_t{1} << (k - 1);
        return r;
    }

    void require_within(std::size_t beta) const {
        if (!m_.empty() && m_.back() > beta)
            throw Error(ErrorKind::DimensionMismatch, "index " + std::to_string(m_.back()) + " exceeds beta = " +
                                                          std::to_string(beta));
    }

    friend bool operator==(const SubsetK& a, const SubsetK& b) { return a.m_ == b.m_; }
    friend bool operator!=(const SubsetK& a, const SubsetK& b) { return a.m_ != b.m_; }
    friend bool operator<(const SubsetK& a, const SubsetK& b) { return a.m_ < b.m_; }

private:
    std::vector<std::size_t> m_;
};

inline std::string to_string(const SubsetK& s) {
    std::string out = "{";
    for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + std::to_string(s[j]);
    return out + "}";
}

/// (-1)^(number of members of S strictly smaller than k).
inline int sign_of(const SubsetK& s, std::size_t k) {
    auto below = std::lower_bound(s.begin(), s.end(), k) - s.begin();
    return below % 2 ? -1 : 1;
}

namespace detail {
inline bool ring_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool ring_is_zero(const GaussRational& x) { return x.is_zero(); }
inline bool ring_is_zero(const Poly& x) { return x.is_zero(); }

template <class T>
class PfRecursion {
public:
    explicit PfRecursion(const Matrix<T>& a) : a_(a) {}

    // Expansion along the largest index of the subset.
    T eval(std::uint64_t mask) {
        if (mask == 0) return T(1);
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; (mask >> j) != 0; ++j)
            if ((mask >> j) & 1u) idx.push_back(j);
        const std::size_t last = idx.back();
        T total(0);
        for (std::size_t j = 0; j + 1 < idx.size(); ++j) {
            const T& entry = a_(idx[j], last);
            if (ring_is_zero(entry)) continue;
            std::uint64_t rest = mask & ~(std::uint64_t{1} << idx[j]) & ~(std::uint64_t{1} << last);
            T term = entry * eval(rest);
            if (j % 2)
                total -= term;
            else
                total += term;
        }
        memo_.emplace(mask, total);
        return total;
    }

private:
    const Matrix<T>& a_;
    std::unordered_map<std::uint64_t, T> memo_;
};
}  // namespace detail

/// Pfaffian of an even-dimensional antisymmetric matrix over a commutative
/// ring. The empty matrix has Pfaffian 1. Dimension is limited to 64.
template <class T>
T pf_generic(const Matrix<T>& a) {
    if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "Pfaffian of a non-square matrix");
    const std::size_t n = a.rows();
    if (n % 2) throw Error(ErrorKind::OddDimension, "Pfaffian of a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    if (n > 64) throw Error(ErrorKind::DimensionMismatch, "Pfaffian dimension above 64 is unsupported");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c)
            if (!(a(r, c) == -a(c, r)))
                throw Error(ErrorKind::NotAntisymmetric, "entry (" + std::to_string(r + 1) + "," +
                                                             std::to_string(c + 1) + ") is not minus its transpose");
    if (n == 0) return T(1);
    detail::PfRecursion<T> rec(a);
    return rec.eval(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

/// The matrix (i [B_{k_a}, B_{k_b}])_{a,b} over the center polynomials.
inline Matrix<CenterPoly> bracket_matrix(const LieAlg2Step& alg, const SubsetK& s) {
    s.require_within(alg.beta());
    const std::size_t n = s.size();
    Matrix<CenterPoly> a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t m = 1; m <= alg.gamma(); ++m) {
                const mpq_class& v = alg.c(s[r], s[c], m);
                if (sgn(v) != 0) a(r, c) += CenterPoly::variable(m - 1, GaussRational(0, v));
            }
    return a;
}

/// Pf(K) = pf(i[B_k, B_l])_{k,l in K}; Pf of the empty set is 1.
inline CenterPoly pf_K(const LieAlg2Step& alg, const SubsetK& k) {
    if (!k.is_even()) throw Error(ErrorKind::OddDimension, "Pf(K) needs an even index set, got " + to_string(k));
    return pf_generic(bracket_matrix(alg, k));
}

/// Pf^k(K') = sign_{K'}(k) Pf(K' \ {k}) for odd K' and k in K'.
inline CenterPoly pf_upper(const LieAlg2Step& alg, const SubsetK& kp, std::size_t k) {
    if (kp.is_even()) throw Error(ErrorKind::InvalidInput, "Pf^k(K') needs an odd index set, got " + to_string(kp));
    if (!kp.contains(k))
        throw Error(ErrorKind::IndexNotInSet, "index " + std::to_string(k) + " is not in " + to_string(kp));
    CenterPoly p = pf_K(alg, kp.without(k));
    return sign_of(kp, k) < 0 ? -p : p;
}

/// Pf_h(K') = 0 if h in K', else -sign_{K'}(h) Pf(K' + {h}), for odd K'.
inline CenterPoly pf_lower(const LieAlg2Step& alg, const SubsetK& kp, std::size_t h) {
    if (kp.is_even()) throw Error(ErrorKind::InvalidInput, "Pf_h(K') needs an odd index set, got " + to_string(kp));
    if (h < 1 || h > alg.beta()) throw Error(ErrorKind::UnknownGenerator, "B" + std::to_string(h));
    if (kp.contains(h)) return CenterPoly();
    CenterPoly p = pf_K(alg, kp.with(h));
    return sign_of(kp, h) < 0 ? p : -p;
}

/// Memoized Pf(S) for every index set of one algebra; not thread-safe.
class PfaffianCache {
public:
    explicit PfaffianCache(AlgebraPtr alg) : alg_(std::move(alg)) {}

    const CenterPoly& pf(const SubsetK& s) {
        auto [it, inserted] = cache_.try_emplace(s.mask());
        if (inserted) it->second = pf_K(*alg_, s);
        return it->second;
    }

    CenterPoly upper(const SubsetK& kp, std::size_t k) {
        if (!kp.contains(k))
            throw Error(ErrorKind::IndexNotInSet, "index " + std::to_string(k) + " is not in " + to_string(kp));
        const CenterPoly& p = pf(kp.without(k));
        return sign_of(kp, k) < 0 ? -p : p;
    }

    const AlgebraPtr& algebra() const { return alg_; }

private:
    AlgebraPtr alg_;
    std::unordered_map<std::uint64_t, CenterPoly> cache_;
};

}  // namespace nilnull
