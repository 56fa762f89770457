#pragma once

// Exact Gaussian rationals a + b i with a, b in Q. This is the coefficient
// field of every algebra in the library.

#include <cctype>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "nilnull/error.hpp"

namespace nilnull {

/// Parses "p", "-p", "p/q" (whitespace around tokens is ignored).
inline mpq_class parse_rational(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty rational literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    auto slash = s.find('/');
    auto digits_ok = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    bool ok = slash == std::string::npos ? digits_ok(start, s.size())
                                         : digits_ok(start, slash) && digits_ok(slash + 1, s.size());
    if (!ok) throw Error(ErrorKind::InvalidInput, "malformed rational literal '" + std::string(text) + "'");
    if (slash != std::string::npos) {
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q(s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const mpq_class& q) { return q.get_str(); }

class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussRational(mpq_class re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {mpq_class(0), mpq_class(1)}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussRational conj() const { return {re_, -im_}; }

    /// |z|^2 as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRational inv() const {
        if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
        mpq_class n = norm();
        return {re_ / n, -im_ / n};
    }

    GaussRational operator-() const { return {-re_, -im_}; }

    GaussRational& operator+=(const GaussRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& o) {
        if (o.is_real()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) { return *this *= o.inv(); }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    /// i^k for any integer k >= 0.
    static GaussRational i_pow(unsigned k) {
        switch (k % 4) {
            case 0: return 1;
            case 1: return i();
            case 2: return -1;
            default: return -i();
        }
    }

    GaussRational pow(unsigned k) const {
        GaussRational result = 1, base = *this;
        while (k) {
            if (k & 1u) result *= base;
            base *= base;
            k >>= 1u;
        }
        return result;
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// Plain-text form that the expression grammar accepts back: "3/2",
// "-i", "1/2*i", "1 - 2/3*i".
inline std::string to_string(const GaussRational& z) {
    const auto& re = z.re();
    const auto& im = z.im();
    if (sgn(im) == 0) return re.get_str();
    mpq_class aim = abs(im);
    std::string imag = aim == 1 ? "i" : aim.get_str() + "*i";
    if (sgn(re) == 0) return sgn(im) < 0 ? "-" + imag : imag;
    return re.get_str() + (sgn(im) < 0 ? " - " : " + ") + imag;
}

inline std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << to_string(z); }

}  // namespace nilnull
