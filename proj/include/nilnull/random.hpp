#pragma once

// Seeded samplers for property checks: scalars, elements, algebras,
// antisymmetric matrices and invariant polynomials.

#include <cstddef>
#include <random>
#include <vector>

#include "nilnull/invariant.hpp"
#include "nilnull/weyl.hpp"

namespace nilnull {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// p/q with |p| <= range and 1 <= q <= max_den.
inline mpq_class random_rational(Rng& rng, long range = 4, long max_den = 3) {
    mpq_class q(mpz_class(uniform_int(rng, -range, range)), mpz_class(uniform_int(rng, 1, max_den)));
    q.canonicalize();
    return q;
}

inline mpq_class random_nonzero_rational(Rng& rng, long range = 4, long max_den = 3) {
    mpq_class q;
    do q = random_rational(rng, range, max_den);
    while (sgn(q) == 0);
    return q;
}

inline GaussRational random_gauss(Rng& rng, long range = 3, long max_den = 2) {
    return {random_rational(rng, range, max_den), random_rational(rng, range, max_den)};
}

inline Exponents random_exponents(Rng& rng, std::size_t n, unsigned max_total) {
    Exponents e(n, 0);
    if (n == 0) return e;
    const auto total = static_cast<unsigned>(uniform_int(rng, 0, max_total));
    for (unsigned t = 0; t < total; ++t) ++e[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1))];
    return e;
}

/// Random element with B-degree <= max_b and C-degree <= max_c per monomial.
inline UElem random_uelem(const AlgebraPtr& alg, Rng& rng, unsigned max_b, unsigned max_c = 1, std::size_t terms = 4) {
    UElem u(alg);
    for (std::size_t t = 0; t < terms; ++t)
        u += UElem::monomial(alg, random_exponents(rng, alg->beta(), max_b), random_exponents(rng, alg->gamma(), max_c),
                             random_gauss(rng));
    return u;
}

inline WElem random_welem(std::size_t d, Rng& rng, unsigned max_deg, std::size_t terms = 4) {
    WElem w(d);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e = random_exponents(rng, 2 * d, max_deg);
        Exponents q(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(d)), p(e.begin() + static_cast<std::ptrdiff_t>(d), e.end());
        w += WElem::monomial(q, p, random_gauss(rng));
    }
    return w;
}

/// A validated algebra with the given dimensions, retrying random sparse
/// integer structure constants until the center check passes. Returns
/// nullptr when no attempt succeeds.
inline AlgebraPtr random_algebra(Rng& rng, std::size_t beta, std::size_t gamma, int attempts = 200) {
    for (int a = 0; a < attempts; ++a) {
        RawLieTable raw{beta, gamma, {}};
        for (std::size_t j = 1; j <= beta; ++j)
            for (std::size_t k = j + 1; k <= beta; ++k) {
                std::vector<mpq_class> c(gamma);
                bool any = false;
                for (auto& v : c) {
                    v = uniform_int(rng, 0, 2) == 0 ? mpq_class(uniform_int(rng, -2, 2)) : mpq_class(0);
                    any = any || sgn(v) != 0;
                }
                if (any) raw.brackets.push_back({j, k, std::move(c)});
            }
        try {
            return validate_lie(raw);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::CenterTooSmall) throw;
        }
    }
    return nullptr;
}

/// A validated algebra with 2 <= beta <= max_beta and 1 <= gamma <= max_gamma.
inline AlgebraPtr random_valid_algebra(Rng& rng, std::size_t max_beta, std::size_t max_gamma) {
    while (true) {
        const auto beta = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long>(max_beta)));
        const auto gamma = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(max_gamma)));
        if (auto alg = random_algebra(rng, beta, gamma, 50)) return alg;
    }
}

inline Matrix<mpq_class> random_antisymmetric(Rng& rng, std::size_t n, long range = 5) {
    Matrix<mpq_class> a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            a(r, c) = random_rational(rng, range, 3);
            a(c, r) = -a(r, c);
        }
    return a;
}

inline Poly random_poly(Rng& rng, std::size_t vars, unsigned max_deg, std::size_t terms) {
    Poly p;
    for (std::size_t t = 0; t < terms; ++t) p.add_term(random_exponents(rng, vars, max_deg), GaussRational(random_rational(rng, 3, 2)));
    return p;
}

inline Matrix<Poly> random_antisymmetric_poly(Rng& rng, std::size_t n, std::size_t vars = 3) {
    Matrix<Poly> a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) {
            a(r, c) = random_poly(rng, vars, 1, 2);
            a(c, r) = -a(r, c);
        }
    return a;
}

/// Random abstract polynomial in E_m (m in outside) and C_1..C_gamma.
inline InvariantPoly random_invariant_poly(Rng& rng, const std::vector<std::size_t>& outside, std::size_t gamma,
                                           unsigned max_deg = 2, std::size_t terms = 3) {
    InvariantPoly p;
    for (std::size_t t = 0; t < terms; ++t) {
        InvKey key;
        const auto deg = static_cast<unsigned>(uniform_int(rng, 0, max_deg));
        key.center.assign(gamma, 0);
        for (unsigned e = 0; e < deg; ++e) {
            const bool pick_e = !outside.empty() && (gamma == 0 || uniform_int(rng, 0, 1) == 0);
            if (pick_e)
                key.word.push_back(outside[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(outside.size()) - 1))]);
            else if (gamma > 0)
                ++key.center[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(gamma) - 1))];
        }
        p.add_term(std::move(key), random_gauss(rng));
    }
    return p;
}

}  // namespace nilnull
