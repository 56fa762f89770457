#pragma once

// Weyl algebra W_d in Q-left normal order: keys are [q_1..q_d, p_1..p_d]
// and the monomial is Q_1^{q_1}...Q_d^{q_d} P_1^{p_1}...P_d^{p_d}.
// Relation: [P_k, Q_l] = -i delta_{kl}. W_0 is the field of scalars.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nilnull/linear_combination.hpp"
#include "nilnull/multi_index.hpp"

namespace nilnull {

class WElem {
public:
    using Terms = LinearCombination<Exponents, GradedLex>;

    WElem() = default;
    explicit WElem(std::size_t d) : d_(d) {}
    WElem(std::size_t d, const GaussRational& scalar) : d_(d) { terms_.add(Exponents(2 * d, 0), scalar); }

    static WElem P(std::size_t d, std::size_t k, const GaussRational& coeff = 1) { return gen(d, d + k - 1, k, "P", coeff); }
    static WElem Q(std::size_t d, std::size_t k, const GaussRational& coeff = 1) { return gen(d, k - 1, k, "Q", coeff); }

    static WElem monomial(const Exponents& q, const Exponents& p, const GaussRational& coeff = 1) {
        if (q.size() != p.size()) throw Error(ErrorKind::DimensionMismatch, "Q and P exponent lengths differ");
        Exponents key(q);
        key.insert(key.end(), p.begin(), p.end());
        WElem w(q.size());
        w.terms_.add(key, coeff);
        return w;
    }

    static WElem from_terms(std::size_t d, Terms terms) {
        for (const auto& [k, c] : terms)
            if (k.size() != 2 * d) throw Error(ErrorKind::DimensionMismatch, "Weyl key length differs from 2d");
        WElem w(d);
        w.terms_ = std::move(terms);
        return w;
    }

    std::size_t d() const { return d_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }

    std::uint64_t degree() const {
        std::uint64_t g = 0;
        for (const auto& [k, c] : terms_) g = std::max(g, total_degree(k));
        return g;
    }

    /// Scalar multiple of the unit?
    bool is_scalar() const { return terms_.is_zero() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }
    GaussRational scalar_part() const { return terms_.coefficient(Exponents(2 * d_, 0)); }

    WElem& operator+=(const WElem& o) {
        check(o);
        terms_ += o.terms_;
        return *this;
    }
    WElem& operator-=(const WElem& o) {
        check(o);
        terms_ -= o.terms_;
        return *this;
    }
    WElem& operator*=(const GaussRational& s) {
        terms_ *= s;
        return *this;
    }
    WElem operator-() const {
        WElem r(d_);
        r.terms_ = -terms_;
        return r;
    }

    friend WElem operator+(WElem a, const WElem& b) { return a += b; }
    friend WElem operator-(WElem a, const WElem& b) { return a -= b; }
    friend WElem operator*(WElem a, const GaussRational& s) { return a *= s; }
    friend WElem operator*(const GaussRational& s, WElem a) { return a *= s; }
    friend WElem operator*(const WElem& a, const WElem& b);
    WElem& operator*=(const WElem& o) { return *this = *this * o; }

    friend bool operator==(const WElem& a, const WElem& b) { return a.d_ == b.d_ && a.terms_ == b.terms_; }
    friend bool operator!=(const WElem& a, const WElem& b) { return !(a == b); }

private:
    static WElem gen(std::size_t d, std::size_t slot, std::size_t k, const char* name, const GaussRational& coeff) {
        if (k < 1 || k > d) throw Error(ErrorKind::UnknownGenerator, name + std::to_string(k) + " in W_" + std::to_string(d));
        Exponents key(2 * d, 0);
        key[slot] = 1;
        WElem w(d);
        w.terms_.add(key, coeff);
        return w;
    }

    void check(const WElem& o) const {
        if (o.d_ != d_) throw Error(ErrorKind::DimensionMismatch, "Weyl algebras W_" + std::to_string(d_) +
                                                                      " and W_" + std::to_string(o.d_) + " differ");
    }

    std::size_t d_ = 0;
    Terms terms_;
};

namespace detail {

/// P^n Q^m = sum_k C(n,k) C(m,k) k! (-i)^k Q^{m-k} P^{n-k}, as (k, coefficient) pairs.
inline std::vector<std::pair<std::uint32_t, GaussRational>> reorder_pq(std::uint32_t n, std::uint32_t m) {
    std::vector<std::pair<std::uint32_t, GaussRational>> out;
    for (std::uint32_t k = 0; k <= std::min(n, m); ++k) {
        mpz_class bn, bm;
        mpz_bin_uiui(bn.get_mpz_t(), n, k);
        mpz_bin_uiui(bm.get_mpz_t(), m, k);
        mpz_class c = bn * bm * factorial(k);
        // (-i)^k = i^{3k}
        out.emplace_back(k, GaussRational(mpq_class(c)) * GaussRational::i_pow(3 * k % 4));
    }
    return out;
}

/// Coefficient * Q^qa (P^pa Q^qb) P^pb in normal order, added into out.
inline void add_ordered_product(std::size_t d, const Exponents& qa, const Exponents& pa, const Exponents& qb,
                                const Exponents& pb, const GaussRational& coeff, WElem::Terms& out) {
    // Per-index expansions are independent; iterate over their product.
    std::vector<std::vector<std::pair<std::uint32_t, GaussRational>>> parts(d);
    for (std::size_t j = 0; j < d; ++j) parts[j] = reorder_pq(pa[j], qb[j]);
    std::vector<std::size_t> choice(d, 0);
    while (true) {
        Exponents key(2 * d, 0);
        GaussRational c = coeff;
        for (std::size_t j = 0; j < d; ++j) {
            const auto& [k, w] = parts[j][choice[j]];
            key[j] = qa[j] + qb[j] - k;
            key[d + j] = pa[j] - k + pb[j];
            c *= w;
        }
        out.add(key, c);
        std::size_t j = 0;
        while (j < d && ++choice[j] == parts[j].size()) choice[j++] = 0;
        if (j == d) break;
    }
}

inline void split_key(std::size_t d, const Exponents& key, Exponents& q, Exponents& p) {
    q.assign(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(d));
    p.assign(key.begin() + static_cast<std::ptrdiff_t>(d), key.end());
}

}  // namespace detail

inline WElem operator*(const WElem& a, const WElem& b) {
    a.check(b);
    const std::size_t d = a.d_;
    WElem out(d);
    Exponents qa, pa, qb, pb;
    for (const auto& [ka, ca] : a.terms_) {
        detail::split_key(d, ka, qa, pa);
        for (const auto& [kb, cb] : b.terms_) {
            detail::split_key(d, kb, qb, pb);
            detail::add_ordered_product(d, qa, pa, qb, pb, ca * cb, out.terms_);
        }
    }
    return out;
}

/// Antilinear anti-automorphism fixing every P_k and Q_k.
inline WElem w_star(const WElem& a) {
    const std::size_t d = a.d();
    WElem::Terms out;
    Exponents q, p, zero(d, 0);
    for (const auto& [k, c] : a.terms()) {
        detail::split_key(d, k, q, p);
        // (Q^q P^p)* = P^p Q^q
        detail::add_ordered_product(d, zero, p, q, zero, c.conj(), out);
    }
    return WElem::from_terms(d, std::move(out));
}

inline WElem w_commutator(const WElem& a, const WElem& b) { return a * b - b * a; }

/// Every monomial lies in span{1, P_k, Q_k}.
inline bool is_filtered_degree1(const WElem& a) { return a.degree() <= 1; }

}  // namespace nilnull
