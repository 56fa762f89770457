#pragma once

// Filtered *-morphisms U*(g) -> W_d, their synthesis from characters on the
// invariant subalgebra, and vanishing-ideal predicates.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nilnull/invariant.hpp"
#include "nilnull/span.hpp"
#include "nilnull/weyl.hpp"

namespace nilnull {

/// A validated filtered *-morphism. Images are listed for
/// B_1..B_beta, C_1..C_gamma; construct through check_wellformed.
class FMorphism {
public:
    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t d() const { return d_; }
    const std::vector<WElem>& images() const { return images_; }
    const WElem& image_B(std::size_t j) const { return images_.at(j - 1); }
    const WElem& image_C(std::size_t m) const { return images_.at(alg_->beta() + m - 1); }

    friend bool operator==(const FMorphism& a, const FMorphism& b) {
        return same_algebra(a.alg_, b.alg_) && a.d_ == b.d_ && a.images_ == b.images_;
    }

    friend FMorphism check_wellformed(const AlgebraPtr&, std::size_t, std::vector<WElem>);

private:
    FMorphism(AlgebraPtr alg, std::size_t d, std::vector<WElem> images)
        : alg_(std::move(alg)), d_(d), images_(std::move(images)) {}

    AlgebraPtr alg_;
    std::size_t d_ = 0;
    std::vector<WElem> images_;
};

/// Validates a candidate: filtered, antihermitian images, bracket compatible,
/// central images commuting with everything.
inline FMorphism check_wellformed(const AlgebraPtr& alg, std::size_t d, std::vector<WElem> images) {
    const std::size_t beta = alg->beta(), n = alg->dim();
    if (images.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "expected " + std::to_string(n) + " images, got " +
                                                      std::to_string(images.size()));
    auto label = [&](std::size_t pos) {
        return pos < beta ? "B" + std::to_string(pos + 1) : "C" + std::to_string(pos - beta + 1);
    };
    for (std::size_t p = 0; p < n; ++p) {
        if (images[p].d() != d)
            throw Error(ErrorKind::DimensionMismatch, "image of " + label(p) + " lives in W_" +
                                                          std::to_string(images[p].d()) + ", expected W_" + std::to_string(d));
        if (!is_filtered_degree1(images[p]))
            throw Error(ErrorKind::NotFiltered, "image of " + label(p) + " has degree above 1");
        if (w_star(images[p]) != -images[p])
            throw Error(ErrorKind::NotAntihermitian, "image of " + label(p) + " is not antihermitian");
    }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            WElem lhs = w_commutator(images[p], images[q]);
            WElem rhs(d);
            if (q < beta)
                for (std::size_t m = 1; m <= alg->gamma(); ++m) {
                    const mpq_class& c = alg->c(p + 1, q + 1, m);
                    if (sgn(c) != 0) rhs += images[beta + m - 1] * GaussRational(c);
                }
            if (lhs != rhs)
                throw BracketMismatch(p + 1, q + 1, "[image of " + label(p) + ", image of " + label(q) +
                                                        "] differs from the image of their bracket");
        }
    return FMorphism(alg, d, std::move(images));
}

/// Evaluates the unique unital *-morphism extending the images.
inline WElem apply(const FMorphism& phi, const UElem& a) {
    const std::size_t d = phi.d();
    WElem out(d);
    if (a.is_zero()) return out;
    require_same_algebra(phi.algebra(), a.algebra());
    std::map<std::pair<std::size_t, std::uint32_t>, WElem> powers;
    auto power = [&](std::size_t pos, std::uint32_t e) -> const WElem& {
        auto key = std::make_pair(pos, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        WElem r(d, 1);
        for (std::uint32_t t = 0; t < e; ++t) r = r * phi.images()[pos];
        return powers.emplace(key, std::move(r)).first->second;
    };
    for (const auto& [key, c] : a.terms()) {
        WElem t(d, c);
        for (std::size_t pos = 0; pos < key.size(); ++pos)
            if (key[pos]) t = t * power(pos, key[pos]);
        out += t;
    }
    return out;
}

inline bool in_kernel(const FMorphism& phi, const UElem& a) { return apply(phi, a).is_zero(); }

/// Membership in the intersection of kernels; the empty intersection is everything.
inline bool in_vanishing_ideal(const std::vector<FMorphism>& s, const UElem& a) {
    for (const auto& phi : s)
        if (!in_kernel(phi, a)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Ideal handles.

struct VanishingIdeal {
    std::vector<FMorphism> morphisms;
};

/// The *-ideal generated by gens. Membership is only semi-decided: a bounded
/// span search proves membership, a certifier morphism killing the
/// generators but not the element proves non-membership.
struct GeneratedStarIdeal {
    AlgebraPtr algebra;
    std::vector<UElem> gens;
    std::vector<FMorphism> certifiers;
    unsigned degree_bound = 2;
};

using IdealHandle = std::variant<VanishingIdeal, GeneratedStarIdeal>;

/// True iff every generator (hence every star of one) lies in ker phi.
inline bool zeros_membership(const FMorphism& phi, const GeneratedStarIdeal& ideal) {
    for (const auto& g : ideal.gens)
        if (!in_kernel(phi, g)) return false;
    return true;
}

enum class Verdict { True, False, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

/// All PBW monomials of total degree <= bound.
inline std::vector<UElem> pbw_monomials(const AlgebraPtr& alg, unsigned bound) {
    std::vector<UElem> out;
    for (const auto& e : multi_indices_up_to(alg->dim(), bound)) {
        UElem::Terms t(e, 1);
        out.push_back(UElem::from_terms(alg, std::move(t)));
    }
    return out;
}

/// Bounded decision for membership in a generated *-ideal.
inline Verdict generated_membership(const GeneratedStarIdeal& ideal, const UElem& a) {
    if (a.is_zero()) return Verdict::True;
    require_same_algebra(ideal.algebra, a.algebra());
    SpanBasis<Exponents, GradedLex> span;
    const auto monos = pbw_monomials(ideal.algebra, ideal.degree_bound);
    std::vector<UElem> gens;
    for (const auto& g : ideal.gens) {
        gens.push_back(g);
        gens.push_back(star(g));
    }
    for (const auto& g : gens)
        for (const auto& u : monos) {
            UElem ug = u * g;
            for (const auto& v : monos) span.insert((ug * v).terms());
        }
    if (span.contains(a.terms())) return Verdict::True;
    for (const auto& phi : ideal.certifiers)
        if (zeros_membership(phi, ideal) && !in_kernel(phi, a)) return Verdict::False;
    return Verdict::Inconclusive;
}

/// Membership for either handle kind; Inconclusive only for generated ideals.
inline Verdict ideal_member(const IdealHandle& ideal, const UElem& a) {
    if (const auto* v = std::get_if<VanishingIdeal>(&ideal))
        return in_vanishing_ideal(v->morphisms, a) ? Verdict::True : Verdict::False;
    return generated_membership(std::get<GeneratedStarIdeal>(ideal), a);
}

// ---------------------------------------------------------------------------
// Characters and synthesis.

/// A *-character on the invariant subalgebra for K, given by the real values
/// valE[m] = phi(i E_{K,m}) for m outside K and valC[j-1] = phi(i C_j).
struct CharSpec {
    SubsetK K;
    std::map<std::size_t, mpq_class> valE;
    std::vector<mpq_class> valC;
};

/// phi on center polynomials: C_j -> -i valC[j-1].
inline GaussRational char_eval(const CharSpec& spec, const CenterPoly& p) {
    std::vector<GaussRational> at;
    for (const auto& v : spec.valC) at.emplace_back(mpq_class(0), -v);
    return p.evaluate(at);
}

/// Rows X_1..X_d, Y_1..Y_d (coordinates in the original basis) with
/// omega(X_k,X_l) = omega(Y_k,Y_l) = 0 and omega(X_k,Y_l) = -delta_{kl},
/// where omega(u,v) = u^T Omega v.
inline Matrix<mpq_class> symplectic_basis(const Matrix<mpq_class>& omega) {
    const std::size_t n = omega.rows();
    if (omega.cols() != n) throw Error(ErrorKind::DimensionMismatch, "symplectic form must be square");
    if (n % 2) throw Error(ErrorKind::OddDimension, "symplectic form of odd dimension " + std::to_string(n));
    if (sgn(pf_generic(omega)) == 0) throw Error(ErrorKind::Degenerate, "the form is degenerate (Pfaffian 0)");

    using Vec = std::vector<mpq_class>;
    auto form = [&](const Vec& u, const Vec& v) {
        mpq_class s = 0;
        for (std::size_t r = 0; r < n; ++r) {
            if (sgn(u[r]) == 0) continue;
            for (std::size_t c = 0; c < n; ++c) s += u[r] * omega(r, c) * v[c];
        }
        return s;
    };
    std::vector<Vec> rest;
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n, 0);
        e[j] = 1;
        rest.push_back(std::move(e));
    }
    std::vector<Vec> xs, ys;
    while (!rest.empty()) {
        std::size_t a = 0, b = 0;
        mpq_class w = 0;
        for (std::size_t j = 0; j < rest.size() && sgn(w) == 0; ++j)
            for (std::size_t k = j + 1; k < rest.size(); ++k) {
                w = form(rest[j], rest[k]);
                if (sgn(w) != 0) {
                    a = j;
                    b = k;
                    break;
                }
            }
        if (sgn(w) == 0) throw Error(ErrorKind::Degenerate, "no nondegenerate pair left");
        Vec x = rest[a], y = rest[b];
        for (auto& v : y) v = -v / w;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(b));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(a));
        for (auto& v : rest) {
            mpq_class wy = form(v, y), wx = form(v, x);
            for (std::size_t r = 0; r < n; ++r) v[r] += wy * x[r] - wx * y[r];
        }
        xs.push_back(std::move(x));
        ys.push_back(std::move(y));
    }
    const std::size_t d = n / 2;
    Matrix<mpq_class> t(n, n);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t c = 0; c < n; ++c) {
            t(k, c) = xs[k][c];
            t(d + k, c) = ys[k][c];
        }
    Matrix<mpq_class> expect(n, n);
    for (std::size_t k = 0; k < d; ++k) {
        expect(k, d + k) = -1;
        expect(d + k, k) = 1;
    }
    if (!(t * omega * t.transpose() == expect))
        throw Error(ErrorKind::ConstructionBug, "symplectic basis failed its own check");
    return t;
}

/// All even subsets of {1..beta} strictly containing k.
inline std::vector<SubsetK> even_strict_supersets(std::size_t beta, const SubsetK& k) {
    std::vector<SubsetK> out;
    const std::uint64_t base = k.mask();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << beta); ++mask) {
        if ((mask & base) != base || mask == base) continue;
        SubsetK s = SubsetK::from_mask(mask);
        if (s.is_even()) out.push_back(std::move(s));
    }
    return out;
}

/// Checks the Pfaffian preconditions of a character; throws PfaffianConditionFailed.
inline void check_character(const AlgebraPtr& alg, const CharSpec& spec) {
    const SubsetK& k = spec.K;
    if (!k.is_even()) throw Error(ErrorKind::OddDimension, "K must have even cardinality, got " + to_string(k));
    k.require_within(alg->beta());
    if (spec.valC.size() != alg->gamma())
        throw Error(ErrorKind::DimensionMismatch, "valC has " + std::to_string(spec.valC.size()) +
                                                      " entries, expected gamma = " + std::to_string(alg->gamma()));
    for (const auto& [m, v] : spec.valE)
        if (m < 1 || m > alg->beta() || k.contains(m))
            throw Error(ErrorKind::InvalidInput, "valE given for index " + std::to_string(m) + ", which is not outside K");
    for (std::size_t m = 1; m <= alg->beta(); ++m)
        if (!k.contains(m) && !spec.valE.count(m))
            throw Error(ErrorKind::InvalidInput, "valE missing for index " + std::to_string(m));
    if (char_eval(spec, pf_K(*alg, k)).is_zero())
        throw Error(ErrorKind::PfaffianConditionFailed, "phi(Pf(K)) = 0 for K = " + to_string(k));
    for (const auto& l : even_strict_supersets(alg->beta(), k))
        if (!char_eval(spec, pf_K(*alg, l)).is_zero())
            throw Error(ErrorKind::PfaffianConditionFailed, "phi(Pf(L)) != 0 for L = " + to_string(l) +
                                                                " strictly containing K = " + to_string(k));
}

/// Builds a filtered *-morphism into W_{|K|/2} extending the character.
inline FMorphism character_to_morphism(const AlgebraPtr& alg, const CharSpec& spec) {
    check_character(alg, spec);
    const SubsetK& k = spec.K;
    const std::size_t beta = alg->beta(), n = k.size(), d = n / 2;
    const GaussRational i = GaussRational::i();

    Matrix<mpq_class> omega(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t m = 1; m <= alg->gamma(); ++m) omega(r, c) += alg->c(k[r], k[c], m) * spec.valC[m - 1];
    const Matrix<mpq_class> t = n ? symplectic_basis(omega) : Matrix<mpq_class>();

    // Rows of basis: new vectors in B-coordinates; targets: their images.
    Matrix<GaussRational> basis(beta, beta);
    std::vector<WElem> target;
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t j = 0; j < n; ++j) basis(row, k[j] - 1) = GaussRational(t(row, j));
        target.push_back(row < d ? WElem::P(d, row + 1, i) : WElem::Q(d, row - d + 1, i));
    }
    std::size_t row = n;
    for (std::size_t m = 1; m <= beta; ++m) {
        if (k.contains(m)) continue;
        const SubsetK ext = k.with(m);
        const int sg = sign_of(k, m);
        for (auto kk : ext) basis(row, kk - 1) = char_eval(spec, pf_upper(*alg, ext, kk)) * GaussRational(sg);
        target.push_back(WElem(d, GaussRational(mpq_class(0), -spec.valE.at(m))));
        ++row;
    }
    auto inv = inverse(basis);
    if (!inv) throw Error(ErrorKind::ConstructionBug, "adapted basis is singular");

    std::vector<WElem> images;
    for (std::size_t h = 0; h < beta; ++h) {
        WElem img(d);
        for (std::size_t r = 0; r < beta; ++r)
            if (!(*inv)(h, r).is_zero()) img += target[r] * (*inv)(h, r);
        images.push_back(std::move(img));
    }
    for (std::size_t m = 0; m < alg->gamma(); ++m) images.emplace_back(d, GaussRational(mpq_class(0), -spec.valC[m]));

    FMorphism phi = check_wellformed(alg, d, std::move(images));
    InvariantFrame frame(alg, k);
    for (const auto& [m, v] : spec.valE)
        if (apply(phi, frame.invariant(m)) != WElem(d, GaussRational(mpq_class(0), -v)))
            throw Error(ErrorKind::ConstructionBug, "image of E_{K," + std::to_string(m) + "} is not the character value");
    for (std::size_t m = 1; m <= alg->gamma(); ++m)
        if (apply(phi, UElem::C(alg, m)) != WElem(d, GaussRational(mpq_class(0), -spec.valC[m - 1])))
            throw Error(ErrorKind::ConstructionBug, "image of C" + std::to_string(m) + " is not the character value");
    return phi;
}

// ---------------------------------------------------------------------------
// Heisenberg morphisms (B1 = X, B2 = Y, C1 = Z).

/// B1 -> iP, B2 -> -i lambda Q, C1 -> -i lambda; kernel contains iC1 - lambda.
inline FMorphism heisenberg_phi(const AlgebraPtr& h, const mpq_class& lambda) {
    const GaussRational i = GaussRational::i();
    return check_wellformed(h, 1, {WElem::P(1, 1, i), WElem::Q(1, 1, -i * GaussRational(lambda)),
                                   WElem(1, -i * GaussRational(lambda))});
}

/// B1 -> i xi, B2 -> i eta, C1 -> 0 in W_0.
inline FMorphism heisenberg_psi(const AlgebraPtr& h, const mpq_class& xi, const mpq_class& eta) {
    const GaussRational i = GaussRational::i();
    return check_wellformed(h, 0, {WElem(0, i * GaussRational(xi)), WElem(0, i * GaussRational(eta)), WElem(0)});
}

}  // namespace nilnull
