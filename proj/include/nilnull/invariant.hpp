#pragma once

// Invariant elements E_{K,m}, dual elements D_{K,l}, the derivations
// ad_D^alpha, and the expansion Pf(K)^r a = sum_alpha p_alpha B_K^alpha with
// coefficients p_alpha in the subalgebra generated by the E_{K,m} and the
// center.
//
// Multiindices alpha over K are indexed by position in the sorted set K.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilnull/multi_index.hpp"
#include "nilnull/pfaffian.hpp"
#include "nilnull/ustar.hpp"

namespace nilnull {

// ---------------------------------------------------------------------------
// Abstract polynomials in the symbols E_{K,m} (noncommuting among
// themselves) and C_j (central).

struct InvKey {
    std::vector<std::size_t> word;  // m-indices of E factors, left to right
    Exponents center;               // C-exponents, trailing zeros trimmed

    std::uint64_t degree() const { return word.size() + total_degree(center); }

    friend bool operator==(const InvKey& a, const InvKey& b) { return a.word == b.word && a.center == b.center; }
};

struct InvKeyOrder {
    bool operator()(const InvKey& a, const InvKey& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.word != b.word) return a.word < b.word;
        return GradedLex{}(a.center, b.center);
    }
};

class InvariantPoly {
public:
    using Terms = LinearCombination<InvKey, InvKeyOrder>;

    InvariantPoly() = default;
    InvariantPoly(const GaussRational& c) { terms_.add(InvKey{}, c); }  // NOLINT(google-explicit-constructor)

    static InvariantPoly E(std::size_t m, const GaussRational& coeff = 1) {
        InvariantPoly p;
        p.terms_.add(InvKey{{m}, {}}, coeff);
        return p;
    }

    static InvariantPoly C(std::size_t j, const GaussRational& coeff = 1) {
        return center(CenterPoly::variable(j - 1, coeff));
    }

    static InvariantPoly center(const CenterPoly& c) {
        InvariantPoly p;
        for (const auto& [e, v] : c.terms()) p.terms_.add(InvKey{{}, e}, v);
        return p;
    }

    void add_term(InvKey key, const GaussRational& c) {
        Poly::trim(key.center);
        terms_.add(key, c);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
        return d;
    }

    InvariantPoly& operator+=(const InvariantPoly& o) {
        terms_ += o.terms_;
        return *this;
    }
    InvariantPoly& operator-=(const InvariantPoly& o) {
        terms_ -= o.terms_;
        return *this;
    }
    InvariantPoly& operator*=(const GaussRational& s) {
        terms_ *= s;
        return *this;
    }
    InvariantPoly operator-() const {
        InvariantPoly r;
        r.terms_ = -terms_;
        return r;
    }

    friend InvariantPoly operator+(InvariantPoly a, const InvariantPoly& b) { return a += b; }
    friend InvariantPoly operator-(InvariantPoly a, const InvariantPoly& b) { return a -= b; }
    friend InvariantPoly operator*(InvariantPoly a, const GaussRational& s) { return a *= s; }
    friend InvariantPoly operator*(const GaussRational& s, InvariantPoly a) { return a *= s; }
    friend InvariantPoly operator*(const InvariantPoly& a, const InvariantPoly& b) {
        InvariantPoly out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                InvKey k;
                k.word = ka.word;
                k.word.insert(k.word.end(), kb.word.begin(), kb.word.end());
                k.center.assign(std::max(ka.center.size(), kb.center.size()), 0);
                for (std::size_t j = 0; j < ka.center.size(); ++j) k.center[j] += ka.center[j];
                for (std::size_t j = 0; j < kb.center.size(); ++j) k.center[j] += kb.center[j];
                out.terms_.add(k, ca * cb);
            }
        return out;
    }
    InvariantPoly& operator*=(const InvariantPoly& o) { return *this = *this * o; }

    friend bool operator==(const InvariantPoly& a, const InvariantPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const InvariantPoly& a, const InvariantPoly& b) { return !(a == b); }

private:
    Terms terms_;
};

// ---------------------------------------------------------------------------

/// All invariant and dual elements for one even index set K.
class InvariantFrame {
public:
    InvariantFrame(AlgebraPtr alg, SubsetK k) : alg_(std::move(alg)), k_(std::move(k)) {
        if (!k_.is_even()) throw Error(ErrorKind::OddDimension, "K must have even cardinality, got " + to_string(k_));
        k_.require_within(alg_->beta());
        pf_ = pf_K(*alg_, k_);
        inv_.resize(alg_->beta() + 1);
        dual_.resize(alg_->beta() + 1);
        for (std::size_t m = 1; m <= alg_->beta(); ++m) {
            if (k_.contains(m)) {
                const SubsetK rest = k_.without(m);
                UElem d(alg_);
                for (auto kk : rest) d += from_center(alg_, pf_upper(*alg_, rest, kk)) * UElem::B(alg_, kk);
                dual_[m] = sign_of(k_, m) < 0 ? -d : d;
            } else {
                const SubsetK ext = k_.with(m);
                UElem e(alg_);
                for (auto kk : ext) e += from_center(alg_, pf_upper(*alg_, ext, kk)) * UElem::B(alg_, kk);
                inv_[m] = sign_of(k_, m) < 0 ? -e : e;
            }
        }
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const SubsetK& K() const { return k_; }
    const CenterPoly& pf() const { return pf_; }

    /// E_{K,m}.
    const UElem& invariant(std::size_t m) const {
        check_index(m);
        if (k_.contains(m)) throw Error(ErrorKind::IndexInK, std::to_string(m) + " lies in K = " + to_string(k_));
        return inv_[m];
    }

    /// D_{K,l}.
    const UElem& dual(std::size_t l) const {
        check_index(l);
        if (!k_.contains(l)) throw Error(ErrorKind::IndexNotInK, std::to_string(l) + " is not in K = " + to_string(k_));
        return dual_[l];
    }

    std::vector<std::size_t> outside() const {
        std::vector<std::size_t> out;
        for (std::size_t m = 1; m <= alg_->beta(); ++m)
            if (!k_.contains(m)) out.push_back(m);
        return out;
    }

    /// B_K^alpha.
    UElem b_power(const MultiIdx& alpha) const {
        if (alpha.size() != k_.size()) throw Error(ErrorKind::DimensionMismatch, "multiindex length differs from |K|");
        Exponents a(alg_->beta(), 0), b(alg_->gamma(), 0);
        for (std::size_t j = 0; j < k_.size(); ++j) a[k_[j] - 1] = alpha[j];
        return UElem::monomial(alg_, a, b);
    }

    /// Substitutes E_m -> E_{K,m} and C_j -> C_j, multiplying in word order.
    UElem evaluate(const InvariantPoly& p) const {
        UElem out(alg_);
        for (const auto& [key, c] : p.terms()) {
            if (key.center.size() > alg_->gamma())
                throw Error(ErrorKind::UnknownGenerator, "C" + std::to_string(key.center.size()));
            Exponents cb(alg_->gamma(), 0);
            std::copy(key.center.begin(), key.center.end(), cb.begin());
            UElem t = UElem::monomial(alg_, Exponents(alg_->beta(), 0), cb, c);
            for (auto m : key.word) t = t * invariant(m);
            out += t;
        }
        return out;
    }

    /// ad_{D,1}^{alpha'_1} ... ad_{D,2d}^{alpha'_{2d}} (a).
    UElem ad_dual(const MultiIdx& alpha_p, UElem a) const {
        if (alpha_p.size() != k_.size()) throw Error(ErrorKind::DimensionMismatch, "multiindex length differs from |K|");
        if (a.algebra()) require_same_algebra(alg_, a.algebra());
        for (std::size_t j = k_.size(); j-- > 0;) a = ad_power(dual_[k_[j]], std::move(a), alpha_p[j]);
        return a;
    }

private:
    void check_index(std::size_t m) const {
        if (m < 1 || m > alg_->beta()) throw Error(ErrorKind::UnknownGenerator, "B" + std::to_string(m));
    }

    AlgebraPtr alg_;
    SubsetK k_;
    CenterPoly pf_;
    std::vector<UElem> inv_, dual_;
};

inline UElem invariant_elem(const AlgebraPtr& alg, const SubsetK& k, std::size_t m) {
    return InvariantFrame(alg, k).invariant(m);
}

inline UElem dual_elem(const AlgebraPtr& alg, const SubsetK& k, std::size_t l) {
    return InvariantFrame(alg, k).dual(l);
}

inline UElem ad_dual(const AlgebraPtr& alg, const SubsetK& k, const MultiIdx& alpha_p, const UElem& a) {
    return InvariantFrame(alg, k).ad_dual(alpha_p, a);
}

// ---------------------------------------------------------------------------
// Expansion certificates.

struct ExpansionCoeff {
    InvariantPoly abstract;
    UElem evaluated;
};

struct ExpansionCert {
    SubsetK K;
    unsigned r = 0;
    unsigned s = 0;
    std::map<MultiIdx, ExpansionCoeff, GradedLex> coeffs;
};

namespace detail {

using ExpansionState = std::map<MultiIdx, InvariantPoly, GradedLex>;

inline void accumulate(ExpansionState& st, const MultiIdx& alpha, const InvariantPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = st.try_emplace(alpha, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) st.erase(it);
    }
}

/// (sum p_alpha B_K^alpha) * B_{k_j}, with j a position in K.
inline ExpansionState times_b(const LieAlg2Step& alg, const SubsetK& k, const ExpansionState& st, std::size_t j) {
    ExpansionState out;
    for (const auto& [alpha, p] : st) {
        MultiIdx up = alpha;
        ++up[j];
        accumulate(out, up, p);
        for (std::size_t i = j + 1; i < k.size(); ++i) {
            if (alpha[i] == 0) continue;
            MultiIdx down = alpha;
            --down[i];
            for (std::size_t m = 1; m <= alg.gamma(); ++m) {
                const mpq_class& c = alg.c(k[i], k[j], m);
                if (sgn(c) == 0) continue;
                accumulate(out, down, p * InvariantPoly::C(m, GaussRational(c * alpha[i])));
            }
        }
    }
    return out;
}

}  // namespace detail

/// Pf(K)^r a = sum_alpha p_alpha B_K^alpha with r the largest number of
/// B-factors outside K in any PBW monomial of a (r = 0 when K is empty).
inline ExpansionCert expand_over_invariants(const InvariantFrame& frame, const UElem& a) {
    const auto& alg = *frame.algebra();
    const SubsetK& k = frame.K();
    const std::size_t beta = alg.beta();
    if (a.algebra()) require_same_algebra(frame.algebra(), a.algebra());

    ExpansionCert cert;
    cert.K = k;
    if (a.is_zero()) return cert;

    auto outside_count = [&](const Exponents& key) {
        unsigned n = 0;
        for (std::size_t m = 1; m <= beta; ++m)
            if (!k.contains(m)) n += key[m - 1];
        return n;
    };
    unsigned r = 0;
    if (!k.empty())
        for (const auto& [key, c] : a.terms()) r = std::max(r, outside_count(key));

    // Pf(K)^t and the per-m correction weights -sign_K(m) Pf^k(K+{m}).
    std::vector<InvariantPoly> pf_pow{InvariantPoly(1)};
    const InvariantPoly pf = InvariantPoly::center(frame.pf());
    for (unsigned t = 1; t <= r; ++t) pf_pow.push_back(pf_pow.back() * pf);
    std::vector<std::vector<InvariantPoly>> correction(beta + 1);
    for (std::size_t m = 1; m <= beta; ++m) {
        if (k.contains(m)) continue;
        const SubsetK ext = k.with(m);
        for (auto kk : k) {
            CenterPoly w = pf_upper(alg, ext, kk);
            correction[m].push_back(InvariantPoly::center(sign_of(k, m) < 0 ? w : -w));
        }
    }

    detail::ExpansionState total;
    for (const auto& [key, coeff] : a.terms()) {
        InvKey ck;
        ck.center.assign(key.begin() + static_cast<std::ptrdiff_t>(beta), key.end());
        InvariantPoly start;
        start.add_term(ck, coeff);
        const unsigned spare = k.empty() ? 0 : r - outside_count(key);
        detail::ExpansionState st{{MultiIdx(k.size(), 0), start * pf_pow[spare]}};
        for (std::size_t b = 1; b <= beta; ++b)
            for (std::uint32_t t = 0; t < key[b - 1]; ++t) {
                if (k.contains(b)) {
                    st = detail::times_b(alg, k, st, k.position(b));
                    continue;
                }
                // Pf(K) B_b = E_{K,b} - sign_K(b) sum_{k in K} Pf^k(K+{b}) B_k; E_{K,b}
                // commutes with every B_k, k in K, so it joins the coefficient.
                detail::ExpansionState next;
                for (const auto& [alpha, p] : st) detail::accumulate(next, alpha, p * InvariantPoly::E(b));
                for (std::size_t j = 0; j < k.size(); ++j) {
                    detail::ExpansionState scaled;
                    for (const auto& [alpha, p] : st) detail::accumulate(scaled, alpha, p * correction[b][j]);
                    for (const auto& [alpha, p] : detail::times_b(alg, k, scaled, j)) detail::accumulate(next, alpha, p);
                }
                st = std::move(next);
            }
        for (const auto& [alpha, p] : st) detail::accumulate(total, alpha, p);
    }

    cert.r = r;
    for (auto& [alpha, p] : total) {
        cert.s = std::max<unsigned>(cert.s, static_cast<unsigned>(abs_of(alpha)));
        UElem ev = frame.evaluate(p);
        cert.coeffs.emplace(alpha, ExpansionCoeff{std::move(p), std::move(ev)});
    }
    return cert;
}

inline ExpansionCert expand_over_invariants(const AlgebraPtr& alg, const SubsetK& k, const UElem& a) {
    return expand_over_invariants(InvariantFrame(alg, k), a);
}

/// sum_alpha p_alpha B_K^alpha from the evaluated coefficients.
inline UElem reconstruct(const InvariantFrame& frame, const ExpansionCert& cert) {
    UElem out(frame.algebra());
    for (const auto& [alpha, c] : cert.coeffs) out += c.evaluated * frame.b_power(alpha);
    return out;
}

/// Checks Pf(K)^r a = sum p_alpha B_K^alpha and that every abstract coefficient
/// evaluates to the stored one.
inline bool verify_certificate(const InvariantFrame& frame, const UElem& a, const ExpansionCert& cert) {
    if (cert.K != frame.K()) return false;
    for (const auto& [alpha, c] : cert.coeffs)
        if (frame.evaluate(c.abstract) != c.evaluated) return false;
    UElem lhs = from_center(frame.algebra(), frame.pf().pow(cert.r)) * a;
    return lhs == reconstruct(frame, cert);
}

using MembershipPredicate = std::function<bool(const UElem&)>;

/// Expansion whose coefficients all lie in the ideal decided by `member`.
/// Coefficients are recovered top-down through ad_D, then cross-checked
/// against Pf(K)^s times the plain expansion.
inline ExpansionCert extract_ideal_coeffs(const InvariantFrame& frame, const UElem& a, const MembershipPredicate& member) {
    if (!member(a)) throw Error(ErrorKind::InvalidInput, "the element to expand is not in the ideal");
    ExpansionCert base = expand_over_invariants(frame, a);
    ExpansionCert cert;
    cert.K = frame.K();
    if (base.coeffs.empty()) return cert;

    const auto& alg = frame.algebra();
    const unsigned s = base.s;
    const UElem pf = from_center(alg, frame.pf());
    std::vector<UElem> pf_pow{UElem(alg, 1)};
    for (unsigned t = 1; t <= std::max(s, base.r); ++t) pf_pow.push_back(pf_pow.back() * pf);
    const UElem scaled_a = pf_pow[base.r] * a;

    // Pf(K)^s p'_alpha, recovered from the top degree down.
    std::map<MultiIdx, UElem, GradedLex> recovered;
    const auto all = multi_indices_up_to(frame.K().size(), s);
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        const MultiIdx& ap = *it;
        const unsigned t = static_cast<unsigned>(abs_of(ap));
        UElem lhs = pf_pow[s - t] * frame.ad_dual(ap, scaled_a);
        const GaussRational it_pow = GaussRational::i_pow(t);
        for (const auto& [alpha, val] : recovered) {
            if (alpha == ap || !leq(ap, alpha)) continue;
            GaussRational w = it_pow * GaussRational(mpq_class(factorial(alpha) / factorial(minus(alpha, ap))));
            lhs -= w * val * frame.b_power(minus(alpha, ap));
        }
        lhs *= (it_pow * GaussRational(mpq_class(factorial(ap)))).inv();
        if (!lhs.is_zero()) recovered.emplace(ap, std::move(lhs));
    }

    const InvariantPoly pf_s = InvariantPoly::center(frame.pf().pow(s));
    for (const auto& [alpha, c] : base.coeffs) {
        UElem expect = pf_pow[s] * c.evaluated;
        auto it = recovered.find(alpha);
        const UElem got = it == recovered.end() ? UElem(alg) : it->second;
        if (got != expect)
            throw Error(ErrorKind::ConstructionBug, "recovered coefficient disagrees with the expansion");
        if (!member(got)) throw Error(ErrorKind::MembershipViolated, "an extracted coefficient is not in the ideal");
        cert.coeffs.emplace(alpha, ExpansionCoeff{pf_s * c.abstract, got});
    }
    for (const auto& [alpha, v] : recovered)
        if (!base.coeffs.count(alpha))
            throw Error(ErrorKind::ConstructionBug, "recovered a coefficient absent from the expansion");
    cert.r = base.r + s;
    cert.s = s;
    return cert;
}

inline ExpansionCert extract_ideal_coeffs(const AlgebraPtr& alg, const SubsetK& k, const UElem& a,
                                          const MembershipPredicate& member) {
    return extract_ideal_coeffs(InvariantFrame(alg, k), a, member);
}

// ---------------------------------------------------------------------------

struct IdentityReport {
    struct Entry {
        std::string identity;
        bool passed = false;
    };
    std::vector<Entry> entries;

    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
};

/// Checks, for all admissible indices:
///   [E_{K,m}, B_h]  = -i sign_K(m) Pf_h(K+{m})
///   [E_{K,m}, D_{K,l}] = 0
///   [D_{K,l}, B_l'] = i delta_{l,l'} Pf(K)
inline IdentityReport check_commutator_identities(const AlgebraPtr& alg, const SubsetK& k) {
    InvariantFrame frame(alg, k);
    IdentityReport rep;
    const std::string ks = to_string(k);
    const GaussRational i = GaussRational::i();
    for (auto m : frame.outside()) {
        const UElem& e = frame.invariant(m);
        for (std::size_t h = 1; h <= alg->beta(); ++h) {
            UElem rhs = from_center(alg, pf_lower(*alg, k.with(m), h)) * (sign_of(k, m) < 0 ? i : -i);
            rep.entries.push_back({"[E_{" + ks + "," + std::to_string(m) + "}, B" + std::to_string(h) +
                                       "] = -i sign Pf_h",
                                   commutator(e, UElem::B(alg, h)) == rhs});
        }
        for (auto l : k)
            rep.entries.push_back({"[E_{" + ks + "," + std::to_string(m) + "}, D_{" + ks + "," + std::to_string(l) + "}] = 0",
                                   commutator(e, frame.dual(l)).is_zero()});
    }
    for (auto l : k)
        for (auto lp : k) {
            UElem rhs = l == lp ? from_center(alg, frame.pf()) * i : UElem(alg);
            rep.entries.push_back({"[D_{" + ks + "," + std::to_string(l) + "}, B" + std::to_string(lp) +
                                       "] = i delta Pf(K)",
                                   commutator(frame.dual(l), UElem::B(alg, lp)) == rhs});
        }
    return rep;
}

}  // namespace nilnull
