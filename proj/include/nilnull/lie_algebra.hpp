#pragma once

// Validated 2-step nilpotent real Lie algebras with basis
// B_1..B_beta, C_1..C_gamma, where the C's span the center and
// [B_j, B_k] = sum_m c^m_{jk} C_m.
//
// Generator indices are 1-based throughout the public API, matching the
// usual mathematical notation.

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "nilnull/error.hpp"
#include "nilnull/matrix.hpp"

namespace nilnull {

/// One entry of a sparse bracket table: [B_j, B_k] = sum_m c[m-1] C_m.
struct BracketEntry {
    std::size_t j = 0;
    std::size_t k = 0;
    std::vector<mpq_class> c;
};

/// Raw, unvalidated structure constants as read from a file.
struct RawLieTable {
    std::size_t beta = 0;
    std::size_t gamma = 0;
    std::vector<BracketEntry> brackets;
};

class LieAlg2Step {
public:
    std::size_t beta() const { return beta_; }
    std::size_t gamma() const { return gamma_; }
    std::size_t dim() const { return beta_ + gamma_; }

    /// c^m_{jk}, all indices 1-based.
    const mpq_class& c(std::size_t j, std::size_t k, std::size_t m) const {
        return table_[index(j, k, m)];
    }

    /// Coordinates of [B_j, B_k] in the C-basis.
    std::vector<mpq_class> bracket_basis(std::size_t j, std::size_t k) const {
        std::vector<mpq_class> out(gamma_);
        for (std::size_t m = 1; m <= gamma_; ++m) out[m - 1] = c(j, k, m);
        return out;
    }

    /// Bracket of two real vectors in the span of the B's.
    std::vector<mpq_class> bracket_vec(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) const {
        if (x.size() != beta_ || y.size() != beta_)
            throw Error(ErrorKind::DimensionMismatch,
                        "bracket_vec expects vectors of length beta = " + std::to_string(beta_));
        std::vector<mpq_class> out(gamma_, mpq_class(0));
        for (std::size_t j = 1; j <= beta_; ++j) {
            if (sgn(x[j - 1]) == 0) continue;
            for (std::size_t k = 1; k <= beta_; ++k) {
                if (sgn(y[k - 1]) == 0) continue;
                mpq_class w = x[j - 1] * y[k - 1];
                for (std::size_t m = 1; m <= gamma_; ++m) out[m - 1] += w * c(j, k, m);
            }
        }
        return out;
    }

    /// Sparse table listing each nonzero bracket once (j < k).
    RawLieTable to_raw() const {
        RawLieTable raw{beta_, gamma_, {}};
        for (std::size_t j = 1; j <= beta_; ++j)
            for (std::size_t k = j + 1; k <= beta_; ++k) {
                auto v = bracket_basis(j, k);
                bool nonzero = false;
                for (const auto& x : v) nonzero = nonzero || sgn(x) != 0;
                if (nonzero) raw.brackets.push_back({j, k, std::move(v)});
            }
        return raw;
    }

    friend bool operator==(const LieAlg2Step& a, const LieAlg2Step& b) {
        return a.beta_ == b.beta_ && a.gamma_ == b.gamma_ && a.table_ == b.table_;
    }

    friend std::shared_ptr<const LieAlg2Step> validate_lie_dense(std::size_t, std::size_t, std::vector<mpq_class>);

private:
    LieAlg2Step(std::size_t beta, std::size_t gamma, std::vector<mpq_class> table)
        : beta_(beta), gamma_(gamma), table_(std::move(table)) {}

    std::size_t index(std::size_t j, std::size_t k, std::size_t m) const {
        return ((j - 1) * beta_ + (k - 1)) * gamma_ + (m - 1);
    }

    std::size_t beta_ = 0, gamma_ = 0;
    std::vector<mpq_class> table_;
};

using AlgebraPtr = std::shared_ptr<const LieAlg2Step>;

/// Validates a dense table laid out as table[((j-1)*beta + (k-1))*gamma + (m-1)].
/// Throws AntisymmetryViolation or CenterTooSmall.
inline AlgebraPtr validate_lie_dense(std::size_t beta, std::size_t gamma, std::vector<mpq_class> table) {
    if (table.size() != beta * beta * gamma)
        throw Error(ErrorKind::DimensionMismatch, "structure table has " + std::to_string(table.size()) +
                                                      " entries, expected beta*beta*gamma = " +
                                                      std::to_string(beta * beta * gamma));
    auto at = [&](std::size_t j, std::size_t k, std::size_t m) -> const mpq_class& {
        return table[((j - 1) * beta + (k - 1)) * gamma + (m - 1)];
    };
    for (std::size_t j = 1; j <= beta; ++j)
        for (std::size_t k = j; k <= beta; ++k)
            for (std::size_t m = 1; m <= gamma; ++m)
                if (at(j, k, m) != -at(k, j, m)) throw AntisymmetryViolation(j, k, m);

    // a in Q^beta is central iff sum_j a_j c^m_{jk} = 0 for all k, m.
    if (beta > 0) {
        Matrix<mpq_class> sys(beta * gamma, beta);
        for (std::size_t j = 1; j <= beta; ++j)
            for (std::size_t k = 1; k <= beta; ++k)
                for (std::size_t m = 1; m <= gamma; ++m) sys((k - 1) * gamma + (m - 1), j - 1) = at(j, k, m);
        auto ker = kernel(sys);
        if (!ker.empty()) throw CenterTooSmall(ker.front());
    }
    return AlgebraPtr(new LieAlg2Step(beta, gamma, std::move(table)));
}

/// Validates a sparse table. An entry for (j,k) implies the mirrored entry
/// (k,j) = -c unless (k,j) is listed explicitly; unlisted pairs are zero.
inline AlgebraPtr validate_lie(const RawLieTable& raw) {
    const std::size_t beta = raw.beta, gamma = raw.gamma;
    std::vector<mpq_class> table(beta * beta * gamma, mpq_class(0));
    std::vector<bool> explicit_pair(beta * beta, false);
    for (const auto& e : raw.brackets) {
        if (e.j < 1 || e.j > beta || e.k < 1 || e.k > beta)
            throw Error(ErrorKind::DimensionMismatch, "bracket index out of range: (" + std::to_string(e.j) +
                                                          "," + std::to_string(e.k) + ")");
        if (e.c.size() != gamma)
            throw Error(ErrorKind::DimensionMismatch, "bracket (" + std::to_string(e.j) + "," +
                                                          std::to_string(e.k) + ") has " +
                                                          std::to_string(e.c.size()) + " coefficients, expected " +
                                                          std::to_string(gamma));
        if (explicit_pair[(e.j - 1) * beta + (e.k - 1)])
            throw Error(ErrorKind::InvalidInput, "bracket (" + std::to_string(e.j) + "," + std::to_string(e.k) +
                                                     ") listed twice");
        explicit_pair[(e.j - 1) * beta + (e.k - 1)] = true;
        for (std::size_t m = 1; m <= gamma; ++m) table[((e.j - 1) * beta + (e.k - 1)) * gamma + (m - 1)] = e.c[m - 1];
    }
    for (const auto& e : raw.brackets) {
        if (explicit_pair[(e.k - 1) * beta + (e.j - 1)]) continue;
        for (std::size_t m = 1; m <= gamma; ++m)
            table[((e.k - 1) * beta + (e.j - 1)) * gamma + (m - 1)] = -e.c[m - 1];
    }
    return validate_lie_dense(beta, gamma, std::move(table));
}

/// Heisenberg algebra: [B_1, B_2] = C_1.
inline AlgebraPtr heisenberg_algebra() {
    return validate_lie({2, 1, {{1, 2, {mpq_class(1)}}}});
}

/// Free 2-step nilpotent algebra on three generators:
/// [B_1,B_2] = C_3, [B_2,B_3] = C_1, [B_3,B_1] = C_2.
inline AlgebraPtr f3_algebra() {
    auto e = [](int a, int b, int c) { return std::vector<mpq_class>{a, b, c}; };
    return validate_lie({3, 3, {{1, 2, e(0, 0, 1)}, {2, 3, e(1, 0, 0)}, {3, 1, e(0, 1, 0)}}});
}

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (!same_algebra(a, b)) throw Error(ErrorKind::AlgebraMismatch, "operands belong to different Lie algebras");
}

}  // namespace nilnull
