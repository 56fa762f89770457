#pragma once

// Multiindex helpers: |alpha|, alpha!, the elementwise partial order and
// graded enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "nilnull/linear_combination.hpp"

namespace nilnull {

using MultiIdx = Exponents;

inline std::uint64_t abs_of(const MultiIdx& a) { return total_degree(a); }

inline mpz_class factorial(std::uint64_t n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// alpha! = prod_j alpha_j!
inline mpz_class factorial(const MultiIdx& a) {
    mpz_class r = 1;
    for (auto v : a) r *= factorial(v);
    return r;
}

/// Elementwise partial order: a <= b iff a_j <= b_j for every j.
inline bool leq(const MultiIdx& a, const MultiIdx& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

/// a - b, requires leq(b, a).
inline MultiIdx minus(const MultiIdx& a, const MultiIdx& b) {
    MultiIdx r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
    return r;
}

inline MultiIdx unit_index(std::size_t n, std::size_t j) {
    MultiIdx r(n, 0);
    r[j] = 1;
    return r;
}

/// All multiindices of length n with |alpha| <= s, in graded-lex order.
inline std::vector<MultiIdx> multi_indices_up_to(std::size_t n, std::uint64_t s) {
    std::vector<MultiIdx> out;
    MultiIdx cur(n, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t left) {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (std::uint64_t v = 0; v <= left; ++v) {
            cur[pos] = static_cast<std::uint32_t>(v);
            rec(pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(0, s);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

}  // namespace nilnull
