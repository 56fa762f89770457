#include <gtest/gtest.h>

#include "nilnull/nilnull.hpp"

using namespace nilnull;

namespace {

const GaussRational I = GaussRational::i();

UElem B(const AlgebraPtr& a, std::size_t j) { return UElem::B(a, j); }
UElem C(const AlgebraPtr& a, std::size_t j) { return UElem::C(a, j); }

/// Random word of letters, as a raw term for the rewriting engine.
RawTerm random_word(const AlgebraPtr& alg, Rng& rng, std::size_t len) {
    RawTerm t{random_gauss(rng), {}};
    for (std::size_t k = 0; k < len; ++k) {
        const bool central = alg->gamma() > 0 && uniform_int(rng, 0, 3) == 0;
        const auto n = central ? alg->gamma() : alg->beta();
        t.word.push_back({central, static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(n)))});
    }
    return t;
}

UElem word_product(const AlgebraPtr& alg, const RawTerm& t) {
    UElem u(alg, t.coeff);
    for (const auto& l : t.word) u = u * (l.central ? C(alg, l.index) : B(alg, l.index));
    return u;
}

}  // namespace

TEST(UStar, Iota) {
    auto h = heisenberg_algebra();
    EXPECT_EQ(iota(h, {1, 0, 0}), B(h, 1));
    EXPECT_TRUE(iota(h, {0, 0, 0}).is_zero());
    auto f = f3_algebra();
    EXPECT_EQ(iota(f, {0, 1, 1, 0, 0, 0}), B(f, 2) + B(f, 3));
    EXPECT_THROW((void)iota(f, {1}), Error);
}

TEST(UStar, NormalizeExamples) {
    auto h = heisenberg_algebra();
    EXPECT_EQ(normalize(h, {{1, {{false, 2}, {false, 1}}}}), B(h, 1) * B(h, 2) - C(h, 1));
    EXPECT_EQ(normalize(h, {{1, {{true, 1}, {false, 1}}}}), UElem::monomial(h, {1, 0}, {1}));
    auto f = f3_algebra();
    EXPECT_EQ(normalize(f, {{1, {{false, 3}, {false, 2}}}}), UElem::monomial(f, {0, 1, 1}, {0, 0, 0}) - C(f, 1));
    try {
        (void)normalize(h, {{1, {{false, 3}}}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownGenerator);
    }
}

TEST(UStar, MulExamples) {
    auto h = heisenberg_algebra();
    EXPECT_EQ(B(h, 1) * B(h, 2), UElem::monomial(h, {1, 1}, {0}));
    EXPECT_EQ(B(h, 2) * B(h, 1), UElem::monomial(h, {1, 1}, {0}) - C(h, 1));
    EXPECT_EQ(B(h, 2).pow(2) * B(h, 1), UElem::monomial(h, {1, 2}, {0}) - UElem::monomial(h, {0, 1}, {1}, 2));
}

TEST(UStar, StarExamples) {
    auto h = heisenberg_algebra();
    EXPECT_EQ(star(B(h, 1)), -B(h, 1));
    EXPECT_EQ(star(C(h, 1)), -C(h, 1));
    EXPECT_EQ(star(B(h, 1) * B(h, 2)), B(h, 1) * B(h, 2) - C(h, 1));
    EXPECT_EQ(star(UElem(h, I)), UElem(h, -I));
}

TEST(UStar, CommutatorExamples) {
    auto h = heisenberg_algebra();
    EXPECT_EQ(commutator(B(h, 1), B(h, 2)), C(h, 1));
    EXPECT_EQ(commutator(B(h, 1), B(h, 2).pow(2)), UElem::monomial(h, {0, 1}, {1}, 2));
    auto f = f3_algebra();
    EXPECT_EQ(commutator(B(f, 2), B(f, 3)), C(f, 1));
    EXPECT_EQ(commutator(B(f, 3), B(f, 1)), C(f, 2));
    EXPECT_EQ(commutator(B(f, 1), B(f, 2)), C(f, 3));
}

TEST(UStar, HeisenbergLadder) {
    auto h = heisenberg_algebra();
    EXPECT_EQ(ad_power(B(h, 1), B(h, 2), 1), C(h, 1));
    EXPECT_EQ(ad_power(B(h, 1), B(h, 2), 0), B(h, 2));
    for (unsigned k = 1; k <= 5; ++k)
        EXPECT_EQ(ad_power(B(h, 1), B(h, 2).pow(k), k), C(h, 1).pow(k) * GaussRational(mpq_class(factorial(k))));
    // One more step kills it.
    EXPECT_TRUE(ad_power(B(h, 1), B(h, 2).pow(3), 4).is_zero());
}

TEST(UStar, CenterRoundTrip) {
    auto f = f3_algebra();
    CenterPoly p = CenterPoly::variable(0, I) * CenterPoly::variable(2) + CenterPoly(3);
    UElem u = from_center(f, p);
    auto back = as_center(u);
    ASSERT_TRUE(back);
    EXPECT_EQ(*back, p);
    EXPECT_FALSE(as_center(B(f, 1)));
}

TEST(UStar, AlgebraMismatch) {
    auto h = heisenberg_algebra();
    auto f = f3_algebra();
    try {
        (void)(B(h, 1) * B(f, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AlgebraMismatch);
    }
    EXPECT_THROW((void)B(h, 3), Error);
    EXPECT_THROW((void)C(h, 2), Error);
}

// Property: closed-form product agrees with adjacent-swap rewriting.
TEST(UStarProperty, ProductMatchesRewriting) {
    Rng rng(17);
    std::vector<AlgebraPtr> algs{heisenberg_algebra(), f3_algebra()};
    for (int t = 0; t < 6; ++t) algs.push_back(random_valid_algebra(rng, 5, 3));
    for (const auto& alg : algs)
        for (int t = 0; t < 40; ++t) {
            std::vector<RawTerm> raw{random_word(alg, rng, static_cast<std::size_t>(uniform_int(rng, 0, 6))),
                                     random_word(alg, rng, static_cast<std::size_t>(uniform_int(rng, 0, 6)))};
            EXPECT_EQ(normalize(alg, raw), word_product(alg, raw[0]) + word_product(alg, raw[1]));
        }
}

TEST(UStarProperty, RingAndStarLaws) {
    Rng rng(23);
    for (int n = 0; n < 6; ++n) {
        AlgebraPtr alg = n == 0 ? heisenberg_algebra() : n == 1 ? f3_algebra() : random_valid_algebra(rng, 4, 3);
        const UElem one(alg, 1);
        for (int t = 0; t < 25; ++t) {
            UElem a = random_uelem(alg, rng, 3), b = random_uelem(alg, rng, 3), c = random_uelem(alg, rng, 2);
            const GaussRational z = random_gauss(rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
            EXPECT_EQ(a * (b + c), a * b + a * c);
            EXPECT_EQ(a * one, a);
            EXPECT_EQ(one * a, a);
            EXPECT_EQ(star(star(a)), a);
            EXPECT_EQ(star(a * b), star(b) * star(a));
            EXPECT_EQ(star(z * a), z.conj() * star(a));
            EXPECT_TRUE(commutator(a, a).is_zero());
            // Jacobi identity.
            EXPECT_TRUE((commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b)))
                            .is_zero());
        }
    }
}

TEST(UStarProperty, CentralElementsCommute) {
    Rng rng(29);
    auto f = f3_algebra();
    for (int t = 0; t < 20; ++t) {
        UElem a = random_uelem(f, rng, 3);
        for (std::size_t m = 1; m <= 3; ++m) EXPECT_TRUE(commutator(C(f, m), a).is_zero());
    }
}
