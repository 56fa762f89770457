#pragma once

// Elements of the universal enveloping *-algebra in PBW normal form.
//
// A monomial key is one exponent vector of length beta + gamma: the first
// beta entries are B-exponents, the remaining gamma are C-exponents, and the
// monomial is B_1^{a_1}...B_beta^{a_beta} C_1^{b_1}...C_gamma^{b_gamma}.
// The product is computed from the closed formula
//   B^alpha B_j = B^{alpha+e_j} + sum_{i>j} alpha_i [B_i,B_j] B^{alpha-e_i},
// valid because brackets are central. normalize() is an independent
// adjacent-swap rewriting engine over raw words.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nilnull/lie_algebra.hpp"
#include "nilnull/linear_combination.hpp"
#include "nilnull/poly.hpp"

namespace nilnull {

class UElem {
public:
    using Terms = LinearCombination<Exponents, GradedLex>;

    UElem() = default;
    explicit UElem(AlgebraPtr alg) : alg_(std::move(alg)) {}
    UElem(AlgebraPtr alg, const GaussRational& scalar) : alg_(std::move(alg)) {
        terms_.add(Exponents(alg_->dim(), 0), scalar);
    }

    static UElem B(const AlgebraPtr& alg, std::size_t j, const GaussRational& coeff = 1) {
        if (j < 1 || j > alg->beta()) throw Error(ErrorKind::UnknownGenerator, "B" + std::to_string(j));
        Exponents e(alg->dim(), 0);
        e[j - 1] = 1;
        UElem u(alg);
        u.terms_.add(e, coeff);
        return u;
    }

    static UElem C(const AlgebraPtr& alg, std::size_t j, const GaussRational& coeff = 1) {
        if (j < 1 || j > alg->gamma()) throw Error(ErrorKind::UnknownGenerator, "C" + std::to_string(j));
        Exponents e(alg->dim(), 0);
        e[alg->beta() + j - 1] = 1;
        UElem u(alg);
        u.terms_.add(e, coeff);
        return u;
    }

    /// coeff * B^a C^b with a of length beta and b of length gamma.
    static UElem monomial(const AlgebraPtr& alg, const Exponents& a, const Exponents& b,
                          const GaussRational& coeff = 1) {
        if (a.size() != alg->beta() || b.size() != alg->gamma())
            throw Error(ErrorKind::DimensionMismatch, "monomial exponent lengths do not match the algebra");
        Exponents e(a);
        e.insert(e.end(), b.begin(), b.end());
        UElem u(alg);
        u.terms_.add(e, coeff);
        return u;
    }

    /// Builds an element directly from full-length keys.
    static UElem from_terms(const AlgebraPtr& alg, Terms terms) {
        for (const auto& [k, c] : terms)
            if (k.size() != alg->dim()) throw Error(ErrorKind::DimensionMismatch, "key length differs from dim");
        UElem u(alg);
        u.terms_ = std::move(terms);
        return u;
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }
    std::size_t size() const { return terms_.size(); }

    GaussRational coefficient(const Exponents& key) const { return terms_.coefficient(key); }

    /// Total degree in B's and C's combined.
    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, total_degree(k));
        return d;
    }

    std::uint64_t b_degree() const {
        std::uint64_t d = 0;
        for (const auto& [k, c] : terms_) {
            std::uint64_t s = 0;
            for (std::size_t j = 0; j < alg_->beta(); ++j) s += k[j];
            d = std::max(d, s);
        }
        return d;
    }

    UElem& operator+=(const UElem& o) {
        adopt(o);
        terms_ += o.terms_;
        return *this;
    }
    UElem& operator-=(const UElem& o) {
        adopt(o);
        terms_ -= o.terms_;
        return *this;
    }
    UElem& operator*=(const GaussRational& s) {
        terms_ *= s;
        return *this;
    }
    UElem operator-() const {
        UElem r(alg_);
        r.terms_ = -terms_;
        return r;
    }

    friend UElem operator+(UElem a, const UElem& b) { return a += b; }
    friend UElem operator-(UElem a, const UElem& b) { return a -= b; }
    friend UElem operator*(UElem a, const GaussRational& s) { return a *= s; }
    friend UElem operator*(const GaussRational& s, UElem a) { return a *= s; }
    friend UElem operator*(const UElem& a, const UElem& b);
    UElem& operator*=(const UElem& o) { return *this = *this * o; }

    friend bool operator==(const UElem& a, const UElem& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return same_algebra(a.alg_, b.alg_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const UElem& a, const UElem& b) { return !(a == b); }

    UElem pow(unsigned k) const {
        UElem r(alg_, 1), base = *this;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

private:
    // The zero element may be algebra-less (default-constructed); it adopts
    // the algebra of whatever it is combined with.
    void adopt(const UElem& o) {
        if (!o.alg_) return;
        if (!alg_) {
            alg_ = o.alg_;
            return;
        }
        require_same_algebra(alg_, o.alg_);
    }

    AlgebraPtr alg_;
    Terms terms_;
};

namespace detail {

/// Right-multiplies every term of `in` by B_j (j is 1-based).
inline UElem::Terms right_mul_B(const LieAlg2Step& alg, const UElem::Terms& in, std::size_t j) {
    UElem::Terms out;
    const std::size_t beta = alg.beta();
    for (const auto& [key, coeff] : in) {
        Exponents k = key;
        ++k[j - 1];
        out.add(k, coeff);
        for (std::size_t i = j + 1; i <= beta; ++i) {
            const auto n = key[i - 1];
            if (n == 0) continue;
            for (std::size_t m = 1; m <= alg.gamma(); ++m) {
                const mpq_class& c = alg.c(i, j, m);
                if (sgn(c) == 0) continue;
                Exponents r = key;
                --r[i - 1];
                ++r[beta + m - 1];
                out.add(r, coeff * GaussRational(c * n));
            }
        }
    }
    return out;
}

/// Right-multiplies every term by C^b (b is the C part of a full key).
inline UElem::Terms right_mul_C(const LieAlg2Step& alg, const UElem::Terms& in, const Exponents& key) {
    bool trivial = true;
    for (std::size_t m = alg.beta(); m < key.size(); ++m) trivial = trivial && key[m] == 0;
    if (trivial) return in;
    UElem::Terms out;
    for (const auto& [k, c] : in) {
        Exponents r = k;
        for (std::size_t m = alg.beta(); m < key.size(); ++m) r[m] += key[m];
        out.add(r, c);
    }
    return out;
}

}  // namespace detail

inline UElem operator*(const UElem& a, const UElem& b) {
    if (a.is_zero() || b.is_zero()) return UElem(a.alg_ ? a.alg_ : b.alg_);
    require_same_algebra(a.alg_, b.alg_);
    const auto& alg = *a.alg_;
    UElem out(a.alg_);
    for (const auto& [kb, cb] : b.terms_) {
        UElem::Terms acc = a.terms_;
        for (std::size_t j = 1; j <= alg.beta(); ++j)
            for (std::uint32_t t = 0; t < kb[j - 1]; ++t) acc = detail::right_mul_B(alg, acc, j);
        acc = detail::right_mul_C(alg, acc, kb);
        out.terms_.add(acc, cb);
    }
    return out;
}

/// Embeds a real vector over the (B, C) basis as a degree-1 element.
inline UElem iota(const AlgebraPtr& alg, const std::vector<mpq_class>& x) {
    if (x.size() != alg->dim())
        throw Error(ErrorKind::DimensionMismatch, "iota expects a vector of length beta + gamma = " +
                                                      std::to_string(alg->dim()));
    UElem u(alg);
    for (std::size_t j = 1; j <= alg->beta(); ++j)
        if (sgn(x[j - 1]) != 0) u += UElem::B(alg, j, GaussRational(x[j - 1]));
    for (std::size_t m = 1; m <= alg->gamma(); ++m)
        if (sgn(x[alg->beta() + m - 1]) != 0) u += UElem::C(alg, m, GaussRational(x[alg->beta() + m - 1]));
    return u;
}

/// Antilinear anti-automorphism with X* = -X on the Lie algebra.
inline UElem star(const UElem& a) {
    if (a.is_zero()) return a;
    const auto& alg = *a.algebra();
    UElem out(a.algebra());
    for (const auto& [key, coeff] : a.terms()) {
        Exponents start(key.size(), 0);
        for (std::size_t m = alg.beta(); m < key.size(); ++m) start[m] = key[m];
        GaussRational c = coeff.conj();
        if (total_degree(key) % 2) c = -c;
        UElem::Terms acc(start, c);
        for (std::size_t j = alg.beta(); j >= 1; --j)
            for (std::uint32_t t = 0; t < key[j - 1]; ++t) acc = detail::right_mul_B(alg, acc, j);
        out += UElem::from_terms(a.algebra(), std::move(acc));
    }
    return out;
}

inline UElem commutator(const UElem& a, const UElem& b) { return a * b - b * a; }

/// k-fold iterated commutator [x, [x, ... [x, a]]].
inline UElem ad_power(const UElem& x, UElem a, unsigned k) {
    for (unsigned t = 0; t < k; ++t) a = commutator(x, a);
    return a;
}

/// Embeds a polynomial in C_1..C_gamma.
inline UElem from_center(const AlgebraPtr& alg, const CenterPoly& p) {
    UElem::Terms terms;
    for (const auto& [e, c] : p.terms()) {
        if (e.size() > alg->gamma())
            throw Error(ErrorKind::DimensionMismatch, "center polynomial uses more than gamma variables");
        Exponents k(alg->dim(), 0);
        for (std::size_t m = 0; m < e.size(); ++m) k[alg->beta() + m] = e[m];
        terms.add(k, c);
    }
    return UElem::from_terms(alg, std::move(terms));
}

/// The element as a center polynomial, or nullopt if some B-exponent is nonzero.
inline std::optional<CenterPoly> as_center(const UElem& u) {
    CenterPoly p;
    if (u.is_zero()) return p;
    const std::size_t beta = u.algebra()->beta();
    for (const auto& [k, c] : u.terms()) {
        for (std::size_t j = 0; j < beta; ++j)
            if (k[j]) return std::nullopt;
        p.add_term(Exponents(k.begin() + static_cast<std::ptrdiff_t>(beta), k.end()), c);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Raw words and the rewriting engine.

/// One generator in a raw word: B_index or C_index (1-based).
struct Letter {
    bool central = false;
    std::size_t index = 0;
};

struct RawTerm {
    GaussRational coeff = 1;
    std::vector<Letter> word;
};

/// Rewrites a sum of raw words into PBW form by adjacent swaps
/// B_k B_j -> B_j B_k + [B_k, B_j] for k > j; C's are moved out directly.
inline UElem normalize(const AlgebraPtr& alg, const std::vector<RawTerm>& raw) {
    const std::size_t beta = alg->beta(), gamma = alg->gamma();
    using State = std::pair<std::vector<std::size_t>, Exponents>;  // B-word, C-exponents
    std::map<State, GaussRational> work;
    auto push = [&](State s, const GaussRational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = work.try_emplace(std::move(s), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) work.erase(it);
        }
    };
    for (const auto& t : raw) {
        State s{{}, Exponents(gamma, 0)};
        for (const auto& l : t.word) {
            if (l.central) {
                if (l.index < 1 || l.index > gamma) throw Error(ErrorKind::UnknownGenerator, "C" + std::to_string(l.index));
                ++s.second[l.index - 1];
            } else {
                if (l.index < 1 || l.index > beta) throw Error(ErrorKind::UnknownGenerator, "B" + std::to_string(l.index));
                s.first.push_back(l.index);
            }
        }
        push(std::move(s), t.coeff);
    }

    UElem::Terms done;
    while (!work.empty()) {
        auto node = work.extract(work.begin());
        auto& [word, cexp] = node.key();
        const GaussRational coeff = node.mapped();
        std::size_t pos = 0;
        while (pos + 1 < word.size() && word[pos] <= word[pos + 1]) ++pos;
        if (pos + 1 >= word.size()) {
            Exponents key(beta + gamma, 0);
            for (auto j : word) ++key[j - 1];
            for (std::size_t m = 0; m < gamma; ++m) key[beta + m] = cexp[m];
            done.add(key, coeff);
            continue;
        }
        const std::size_t k = word[pos], j = word[pos + 1];
        for (std::size_t m = 1; m <= gamma; ++m) {
            const mpq_class& c = alg->c(k, j, m);
            if (sgn(c) == 0) continue;
            State corr{word, cexp};
            corr.first.erase(corr.first.begin() + static_cast<std::ptrdiff_t>(pos),
                             corr.first.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
            ++corr.second[m - 1];
            push(std::move(corr), coeff * GaussRational(c));
        }
        State swapped{word, cexp};
        std::swap(swapped.first[pos], swapped.first[pos + 1]);
        push(std::move(swapped), coeff);
    }
    return UElem::from_terms(alg, std::move(done));
}

}  // namespace nilnull
