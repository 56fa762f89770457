#pragma once

// Orchestration over representable ideals: the even-subset poset and its
// linear extension, type-K checks, ideal-quotient predicates, and the
// Heisenberg and f3 workflows.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilnull/morphism.hpp"

namespace nilnull {

/// Even subsets of {1..beta} ordered by cardinality, then lexicographically.
/// Any subset precedes its proper supersets.
inline std::vector<SubsetK> toposort(std::size_t beta) {
    if (beta >= 63) throw Error(ErrorKind::InvalidInput, "beta too large for subset enumeration");
    std::vector<SubsetK> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << beta); ++mask) {
        SubsetK s = SubsetK::from_mask(mask);
        if (s.is_even()) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const SubsetK& a, const SubsetK& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

/// Pf(L) lies in the ideal for every even L strictly containing K.
/// Throws UndecidableForHandle when a bounded oracle cannot decide.
inline bool type_check(const AlgebraPtr& alg, const IdealHandle& ideal, const SubsetK& k) {
    for (const auto& l : even_strict_supersets(alg->beta(), k)) {
        switch (ideal_member(ideal, from_center(alg, pf_K(*alg, l)))) {
            case Verdict::True: break;
            case Verdict::False: return false;
            case Verdict::Inconclusive:
                throw Error(ErrorKind::UndecidableForHandle, "membership of Pf(" + to_string(l) +
                                                                 ") in the generated ideal is undecided within the bound");
        }
    }
    return true;
}

struct QuotientResult {
    bool value = true;
    std::optional<UElem> witness;  // a product a*u*g outside the ideal when value is false
};

/// a in I : <<Jgens>>, tested through a*u*g in I for PBW monomials u of
/// degree <= bound. Because W_d has no zero divisors, a*u*g lies in a kernel
/// for every u as soon as a*g does, so the answer is exact for vanishing ideals.
inline QuotientResult ideal_quotient_test(const VanishingIdeal& ideal, const std::vector<UElem>& jgens, const UElem& a,
                                          unsigned bound = 1) {
    QuotientResult res;
    if (a.is_zero() || jgens.empty()) return res;
    const auto monos = pbw_monomials(a.algebra(), bound);
    for (const auto& g : jgens) {
        for (const auto& u : monos) {
            UElem p = a * u * g;
            if (!in_vanishing_ideal(ideal.morphisms, p)) {
                res.value = false;
                res.witness = std::move(p);
                return res;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Heisenberg workflow.

struct HeisenbergMu {
    std::vector<mpq_class> lambda;  // distinct values of Phi(i C1), first-seen order
    CenterPoly mu;                  // prod (i C1 - lambda)
    CenterPoly mu_x;                // same product over nonzero lambda
};

/// Lambda, mu and mu^x for a finite set of morphisms on the Heisenberg algebra.
inline HeisenbergMu heisenberg_mu(const AlgebraPtr& h, const std::vector<FMorphism>& s) {
    if (!same_algebra(h, heisenberg_algebra()))
        throw Error(ErrorKind::AlgebraMismatch, "heisenberg_mu needs the Heisenberg algebra");
    HeisenbergMu out{{}, CenterPoly(1), CenterPoly(1)};
    const CenterPoly iz = CenterPoly::variable(0, GaussRational::i());
    for (const auto& phi : s) {
        require_same_algebra(h, phi.algebra());
        const WElem z = phi.image_C(1);
        if (!z.is_scalar())
            throw Error(ErrorKind::NonScalarCentralImage, "the image of C1 is not a multiple of the unit");
        const GaussRational v = GaussRational::i() * z.scalar_part();
        if (!v.is_real()) throw Error(ErrorKind::NonScalarCentralImage, "the image of iC1 is not real");
        if (std::find(out.lambda.begin(), out.lambda.end(), v.re()) != out.lambda.end()) continue;
        out.lambda.push_back(v.re());
        const CenterPoly factor = iz - CenterPoly(GaussRational(v.re()));
        out.mu *= factor;
        if (sgn(v.re()) != 0) out.mu_x *= factor;
    }
    if (!in_vanishing_ideal(s, from_center(h, out.mu)))
        throw Error(ErrorKind::ConstructionBug, "mu does not vanish on every morphism");
    return out;
}

/// I = (intersection of ker Psi_{xi,eta} over N) cap (intersection of ker Phi_lambda over lambdaX).
/// N is either a finite point list or the real zero set of varietyGens in
/// the commuting variables x, y, with Psi_{xi,eta}(-i B1) = xi, Psi(-i B2) = eta.
struct HeisenbergIdealDesc {
    std::vector<mpq_class> lambda_x;
    std::optional<std::vector<std::pair<mpq_class, mpq_class>>> points;
    std::vector<Poly> variety_gens;
    bool real_declared = false;
    unsigned degree_bound = 0;  // 0 selects 2 + max generator degree + degree of the tested polynomial
};

/// The commutative shadow of a modulo C1: B1^m B2^n -> (i x)^m (i y)^n.
inline Poly heisenberg_shadow(const UElem& a) {
    Poly q;
    for (const auto& [key, c] : a.terms()) {
        if (key[2] != 0) continue;
        q.add_term(Exponents{key[0], key[1]}, c * GaussRational::i_pow((key[0] + key[1]) % 4));
    }
    return q;
}

/// Bounded test of q in the ideal generated by gens in Q(i)[x, y].
inline bool poly_ideal_member_bounded(const Poly& q, const std::vector<Poly>& gens, unsigned bound) {
    if (q.is_zero()) return true;
    SpanBasis<Exponents, GradedLex> span;
    for (const auto& g : gens) {
        const auto dg = g.degree();
        if (dg > bound) continue;
        for (const auto& e : multi_indices_up_to(2, bound - dg)) span.insert((Poly::monomial(e) * g).terms());
    }
    return span.contains(q.terms());
}

inline bool heisenberg_ideal_membership(const AlgebraPtr& h, const HeisenbergIdealDesc& desc, const UElem& a) {
    if (!same_algebra(h, heisenberg_algebra()))
        throw Error(ErrorKind::AlgebraMismatch, "heisenberg_ideal_membership needs the Heisenberg algebra");
    if (a.algebra()) require_same_algebra(h, a.algebra());
    for (const auto& l : desc.lambda_x) {
        if (sgn(l) == 0) throw Error(ErrorKind::InvalidInput, "LambdaX must not contain 0");
        if (!in_kernel(heisenberg_phi(h, l), a)) return false;
    }
    if (desc.points) {
        for (const auto& [xi, eta] : *desc.points)
            if (!in_kernel(heisenberg_psi(h, xi, eta), a)) return false;
        return true;
    }
    if (!desc.real_declared)
        throw Error(ErrorKind::NotRealDeclared, "an infinite zero set needs generators declared to form a real ideal");
    const Poly q = heisenberg_shadow(a);
    if (q.is_zero()) return true;
    if (desc.variety_gens.empty()) return false;  // N is the whole plane
    unsigned bound = desc.degree_bound;
    if (bound == 0) {
        std::uint64_t gmax = 0;
        for (const auto& g : desc.variety_gens) gmax = std::max(gmax, g.degree());
        bound = static_cast<unsigned>(2 + gmax + q.degree());
    }
    if (poly_ideal_member_bounded(q, desc.variety_gens, bound)) return true;
    throw Error(ErrorKind::Inconclusive, "no certificate of degree <= " + std::to_string(bound) +
                                             " for the commutative part; raise the degree bound");
}

// ---------------------------------------------------------------------------
// f3 workflow.

struct DemoReport {
    struct Entry {
        std::string check;
        bool passed = false;
        std::string detail;
    };
    std::vector<Entry> entries;

    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
};

/// Characters used by the f3 demonstration, one per two-element K.
inline std::vector<CharSpec> f3_sample_characters() {
    return {
        CharSpec{{2, 3}, {{1, mpq_class(0)}}, {1, 0, 0}},
        CharSpec{{1, 3}, {{2, mpq_class(1)}}, {0, 2, 0}},
        CharSpec{{1, 2}, {{3, mpq_class(3, 2)}}, {0, 0, -1}},
    };
}

/// Xi = B1 C1 + B2 C2 + B3 C3.
inline UElem f3_xi(const AlgebraPtr& f) {
    UElem xi(f);
    for (std::size_t j = 1; j <= 3; ++j) xi += UElem::B(f, j) * UElem::C(f, j);
    return xi;
}

inline DemoReport f3_demo() {
    const AlgebraPtr f = f3_algebra();
    const GaussRational i = GaussRational::i();
    DemoReport rep;
    const UElem xi = f3_xi(f);
    for (std::size_t j = 1; j <= 3; ++j)
        rep.entries.push_back({"[Xi, B" + std::to_string(j) + "] = 0", commutator(xi, UElem::B(f, j)).is_zero(), ""});
    rep.entries.push_back({"i Xi = E_{{2,3},1}", invariant_elem(f, {2, 3}, 1) == i * xi, ""});
    rep.entries.push_back({"i Xi = -E_{{1,3},2}", invariant_elem(f, {1, 3}, 2) == -i * xi, ""});
    rep.entries.push_back({"i Xi = E_{{1,2},3}", invariant_elem(f, {1, 2}, 3) == i * xi, ""});

    for (const auto& spec : f3_sample_characters()) {
        std::string name = "morphism from character on K = " + to_string(spec.K);
        try {
            FMorphism phi = character_to_morphism(f, spec);
            InvariantFrame frame(f, spec.K);
            bool ok = true;
            for (const auto& [m, v] : spec.valE)
                ok = ok && apply(phi, i * frame.invariant(m)) == WElem(phi.d(), GaussRational(v));
            ok = ok && apply(phi, i * xi).is_scalar();
            std::ostringstream detail;
            detail << "d = " << phi.d();
            rep.entries.push_back({name, ok, detail.str()});
        } catch (const Error& e) {
            rep.entries.push_back({name, false, e.what()});
        }
    }
    // Fixed reference morphism for K = {2,3}, valC = (1,0,0), valE = 0.
    try {
        FMorphism phi = character_to_morphism(f, f3_sample_characters().front());
        bool ok = phi.image_B(1).is_zero() && phi.image_B(2) == WElem::P(1, 1, i) &&
                  phi.image_B(3) == WElem::Q(1, 1, -i) && phi.image_C(1) == WElem(1, -i) &&
                  phi.image_C(2).is_zero() && phi.image_C(3).is_zero();
        rep.entries.push_back({"K = {2,3} morphism is B1 -> 0, B2 -> iP, B3 -> -iQ, C1 -> -i", ok, ""});
    } catch (const Error& e) {
        rep.entries.push_back({"K = {2,3} reference morphism", false, e.what()});
    }
    return rep;
}

}  // namespace nilnull
