#pragma once

// Commutative sparse polynomials over Q(i) in variables x_1, x_2, ...
// Exponent vectors are stored with trailing zeros trimmed, so a polynomial
// does not need to know how many variables its ring has. Used for the
// central subalgebra generated by C_1..C_gamma and for the commutative
// quotient C[X,Y] of the Heisenberg workflow.

#include <algorithm>
#include <string>
#include <vector>
#include <utility>

#include "nilnull/linear_combination.hpp"

namespace nilnull {

class Poly {
public:
    using Terms = LinearCombination<Exponents, GradedLex>;

    Poly() = default;
    Poly(long c) : Poly(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const GaussRational& c) { terms_.add(Exponents{}, c); }  // NOLINT(google-explicit-constructor)

    /// coeff * x_{var+1} (var is 0-based).
    static Poly variable(std::size_t var, const GaussRational& coeff = 1) {
        Exponents e(var + 1, 0);
        e[var] = 1;
        Poly p;
        p.terms_.add(e, coeff);
        return p;
    }

    static Poly monomial(Exponents e, const GaussRational& coeff = 1) {
        trim(e);
        Poly p;
        p.terms_.add(e, coeff);
        return p;
    }

    static void trim(Exponents& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }

    bool is_constant() const {
        return terms_.is_zero() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    GaussRational constant_term() const { return terms_.coefficient(Exponents{}); }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    /// Number of variables actually used (highest index + 1).
    std::size_t arity() const {
        std::size_t n = 0;
        for (const auto& [e, c] : terms_) n = std::max(n, e.size());
        return n;
    }

    void add_term(Exponents e, const GaussRational& c) {
        trim(e);
        terms_.add(e, c);
    }

    Poly& operator+=(const Poly& o) {
        terms_ += o.terms_;
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        terms_ -= o.terms_;
        return *this;
    }
    Poly& operator*=(const GaussRational& s) {
        terms_ *= s;
        return *this;
    }
    Poly operator-() const {
        Poly r;
        r.terms_ = -terms_;
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t j = 0; j < ea.size(); ++j) e[j] += ea[j];
                for (std::size_t j = 0; j < eb.size(); ++j) e[j] += eb[j];
                out.terms_.add(e, ca * cb);
            }
        return out;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    friend Poly operator*(Poly a, const GaussRational& s) { return a *= s; }
    friend Poly operator*(const GaussRational& s, Poly a) { return a *= s; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(unsigned k) const {
        Poly r = 1, base = *this;
        while (k) {
            if (k & 1u) r *= base;
            k >>= 1u;
            if (k) base *= base;
        }
        return r;
    }

    /// Complex conjugation of coefficients (variables taken as real).
    Poly conj() const {
        Poly r;
        for (const auto& [e, c] : terms_) r.terms_.add(e, c.conj());
        return r;
    }

    /// Evaluate at a point (values[j] substituted for x_{j+1}).
    GaussRational evaluate(const std::vector<GaussRational>& values) const {
        GaussRational total;
        for (const auto& [e, c] : terms_) {
            GaussRational t = c;
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (!e[j]) continue;
                if (j >= values.size())
                    throw Error(ErrorKind::DimensionMismatch, "too few values to evaluate polynomial");
                t *= values[j].pow(e[j]);
            }
            total += t;
        }
        return total;
    }

private:
    Terms terms_;
};

/// Polynomial in the central generators C_1..C_gamma (variable j <-> C_{j+1}).
using CenterPoly = Poly;

}  // namespace nilnull
