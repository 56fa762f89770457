#pragma once

// Shared generators of test inputs: admissible characters, kernel
// generators of a morphism, and random kernel elements.

#include <optional>
#include <vector>

#include "nilnull/nilnull.hpp"

namespace fixture {

using namespace nilnull;

/// Random character on K passing the Pfaffian preconditions, or nullopt
/// after repeated failures. With zero_center, every valC is 0.
inline std::optional<CharSpec> random_character(const AlgebraPtr& alg, const SubsetK& k, Rng& rng, bool zero_center = false) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        CharSpec spec{k, {}, {}};
        for (std::size_t m = 0; m < alg->gamma(); ++m) spec.valC.push_back(zero_center ? mpq_class(0) : random_rational(rng, 3, 2));
        for (std::size_t m = 1; m <= alg->beta(); ++m)
            if (!k.contains(m)) spec.valE[m] = random_rational(rng, 3, 2);
        try {
            check_character(alg, spec);
            return spec;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PfaffianConditionFailed) throw;
        }
        // The empty set only admits characters vanishing on every bracket.
        if (k.size() == 0) zero_center = true;
    }
    return std::nullopt;
}

/// Linear kernel generators of phi: combinations c_0 + sum c_p X_p of the
/// unit and the basis elements whose images cancel.
inline std::vector<UElem> kernel_generators(const FMorphism& phi) {
    const auto& alg = phi.algebra();
    const std::size_t d = phi.d(), n = alg->dim();
    // Columns: unit, then each basis element. Rows: coefficient of 1, Q_k, P_k.
    Matrix<GaussRational> m(2 * d + 1, n + 1);
    m(0, 0) = 1;
    for (std::size_t p = 0; p < n; ++p) {
        const WElem& w = phi.images()[p];
        for (const auto& [key, c] : w.terms()) {
            std::size_t row = 0;
            for (std::size_t s = 0; s < 2 * d; ++s)
                if (key[s]) row = s + 1;
            m(row, p + 1) += c;
        }
    }
    std::vector<UElem> out;
    for (const auto& v : kernel(m)) {
        UElem g(alg, v[0]);
        for (std::size_t p = 0; p < n; ++p) {
            if (v[p + 1].is_zero()) continue;
            g += p < alg->beta() ? UElem::B(alg, p + 1, v[p + 1]) : UElem::C(alg, p - alg->beta() + 1, v[p + 1]);
        }
        out.push_back(std::move(g));
    }
    return out;
}

/// Random element of the two-sided ideal generated by gens.
inline UElem random_ideal_element(const AlgebraPtr& alg, const std::vector<UElem>& gens, Rng& rng, unsigned max_b = 1,
                                  std::size_t terms = 2) {
    UElem a(alg);
    for (std::size_t t = 0; t < terms && !gens.empty(); ++t) {
        const auto& g = gens[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(gens.size()) - 1))];
        a += random_uelem(alg, rng, max_b, 1, 2) * g * random_uelem(alg, rng, max_b, 1, 2);
    }
    return a;
}

}  // namespace fixture
