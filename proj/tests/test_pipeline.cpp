#include <gtest/gtest.h>

#include "nilnull/nilnull.hpp"

using namespace nilnull;

namespace {

const GaussRational I = GaussRational::i();

UElem B(const AlgebraPtr& a, std::size_t j) { return UElem::B(a, j); }
UElem C(const AlgebraPtr& a, std::size_t j) { return UElem::C(a, j); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no exception";
    return ErrorKind::InvalidInput;
}

/// iC1 - 2, the generator cut out by Phi_2.
UElem mu_x(const AlgebraPtr& h) { return C(h, 1) * I - UElem(h, 2); }

HeisenbergIdealDesc finite_desc() {
    HeisenbergIdealDesc d;
    d.lambda_x = {mpq_class(2)};
    d.points = std::vector<std::pair<mpq_class, mpq_class>>{{0, 0}};
    return d;
}

/// Random element of (s(V(N)) + <<C1>>) (iC1 - 2) for N = {(0,0)}.
UElem heisenberg_member(const AlgebraPtr& h, Rng& rng) {
    UElem inner = random_uelem(h, rng, 2) * B(h, 1) + B(h, 2) * random_uelem(h, rng, 2) +
                  random_uelem(h, rng, 1) * C(h, 1) * random_uelem(h, rng, 1);
    return inner * mu_x(h) * random_uelem(h, rng, 1);
}

}  // namespace

TEST(Toposort, SmallCases) {
    EXPECT_EQ(toposort(0).size(), 1u);
    auto two = toposort(2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], SubsetK{});
    EXPECT_EQ(two[1], (SubsetK{1, 2}));
    EXPECT_EQ(toposort(3).size(), 4u);
}

TEST(Toposort, LinearExtensionOfInclusion) {
    for (std::size_t beta = 0; beta <= 6; ++beta) {
        auto order = toposort(beta);
        EXPECT_EQ(order.size(), std::size_t{1} << (beta == 0 ? 0 : beta - 1));
        for (std::size_t a = 0; a < order.size(); ++a)
            for (std::size_t b = 0; b < order.size(); ++b)
                if (a != b && order[a].is_subset_of(order[b])) {
                    EXPECT_LT(a, b);
                }
    }
}

TEST(TypeCheck, Examples) {
    auto h = heisenberg_algebra();
    EXPECT_TRUE(type_check(h, VanishingIdeal{{heisenberg_psi(h, 0, 0)}}, {}));
    EXPECT_FALSE(type_check(h, VanishingIdeal{{heisenberg_phi(h, 2)}}, {}));
    EXPECT_TRUE(type_check(h, VanishingIdeal{{heisenberg_phi(h, 2)}}, {1, 2}));
    EXPECT_TRUE(type_check(h, GeneratedStarIdeal{h, {C(h, 1)}, {}, 1}, {}));
    EXPECT_EQ(kind_of([&] { (void)type_check(h, GeneratedStarIdeal{h, {B(h, 1) * B(h, 1)}, {}, 0}, {}); }),
              ErrorKind::UndecidableForHandle);
}

TEST(Quotient, Examples) {
    auto h = heisenberg_algebra();
    VanishingIdeal both{{heisenberg_phi(h, 2), heisenberg_psi(h, 0, 0)}};
    EXPECT_TRUE(ideal_quotient_test(both, {mu_x(h)}, B(h, 1)).value);
    EXPECT_TRUE(ideal_quotient_test(both, {B(h, 1) * mu_x(h)}, UElem(h, 1)).value);
    VanishingIdeal phi_only{{heisenberg_phi(h, 2)}};
    auto r = ideal_quotient_test(phi_only, {UElem(h, 1)}, B(h, 1));
    EXPECT_FALSE(r.value);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(*r.witness, B(h, 1));
}

TEST(QuotientProperty, QuotientTimesGeneratorLiesInIdeal) {
    // (I : J) J is contained in I, spot-checked with J = <<iC1 - 2>>.
    auto h = heisenberg_algebra();
    VanishingIdeal ideal{{heisenberg_phi(h, 2), heisenberg_psi(h, 0, 0)}};
    Rng rng(79);
    int accepted = 0;
    for (int t = 0; t < 40; ++t) {
        UElem a = random_uelem(h, rng, 2);
        if (t % 2) a = a * B(h, 1);
        if (!ideal_quotient_test(ideal, {mu_x(h)}, a).value) continue;
        ++accepted;
        const UElem prod = a * mu_x(h);
        EXPECT_TRUE(in_vanishing_ideal(ideal.morphisms, prod));
        EXPECT_TRUE(in_vanishing_ideal(ideal.morphisms, prod * B(h, 2)));
    }
    EXPECT_GT(accepted, 0);
}

TEST(HeisenbergMuTest, Examples) {
    auto h = heisenberg_algebra();
    const CenterPoly iz = CenterPoly::variable(0, I);
    auto r = heisenberg_mu(h, {heisenberg_phi(h, 2), heisenberg_psi(h, 0, 0)});
    EXPECT_EQ(r.lambda, (std::vector<mpq_class>{2, 0}));
    EXPECT_EQ(r.mu, iz * (iz - CenterPoly(2)));
    EXPECT_EQ(r.mu_x, iz - CenterPoly(2));
    auto s = heisenberg_mu(h, {heisenberg_psi(h, 1, 1)});
    EXPECT_EQ(s.lambda, (std::vector<mpq_class>{0}));
    EXPECT_EQ(s.mu, iz);
    EXPECT_EQ(s.mu_x, CenterPoly(1));
    auto e = heisenberg_mu(h, {});
    EXPECT_TRUE(e.lambda.empty());
    EXPECT_EQ(e.mu, CenterPoly(1));
    EXPECT_EQ(kind_of([&] { (void)heisenberg_mu(f3_algebra(), {}); }), ErrorKind::AlgebraMismatch);
}

TEST(HeisenbergMembership, FiniteExamples) {
    auto h = heisenberg_algebra();
    const auto desc = finite_desc();
    EXPECT_TRUE(heisenberg_ideal_membership(h, desc, B(h, 1) * mu_x(h)));
    EXPECT_TRUE(heisenberg_ideal_membership(h, desc, C(h, 1) * I * mu_x(h)));
    EXPECT_FALSE(heisenberg_ideal_membership(h, desc, UElem(h, 1)));
}

TEST(HeisenbergMembership, TwentyMembersTwentyNonMembers) {
    auto h = heisenberg_algebra();
    const auto desc = finite_desc();
    Rng rng(83);
    const std::vector<UElem> outside{UElem(h, 1), B(h, 1), C(h, 1), mu_x(h), B(h, 2) + UElem(h, 3)};
    for (int t = 0; t < 20; ++t) {
        const UElem a = heisenberg_member(h, rng);
        EXPECT_TRUE(heisenberg_ideal_membership(h, desc, a));
        EXPECT_FALSE(heisenberg_ideal_membership(h, desc, a + outside[static_cast<std::size_t>(t) % outside.size()]));
    }
}

TEST(HeisenbergMembership, GeneratedIdealIsInsidePhiKernel) {
    auto h = heisenberg_algebra();
    FMorphism phi = heisenberg_phi(h, 2);
    Rng rng(89);
    for (int t = 0; t < 20; ++t)
        EXPECT_TRUE(in_kernel(phi, random_uelem(h, rng, 2) * mu_x(h) * random_uelem(h, rng, 2)));
}

TEST(HeisenbergMembership, InfiniteZeroSet) {
    auto h = heisenberg_algebra();
    HeisenbergIdealDesc desc;
    desc.lambda_x = {mpq_class(2)};
    desc.variety_gens = {parse_poly("x^2 + y^2 - 1")};
    desc.real_declared = true;
    const UElem circle = B(h, 1) * B(h, 1) + B(h, 2) * B(h, 2) + UElem(h, 1);
    EXPECT_TRUE(heisenberg_ideal_membership(h, desc, circle * mu_x(h)));
    EXPECT_FALSE(heisenberg_ideal_membership(h, desc, circle));  // Phi_2 does not kill it.
    desc.degree_bound = 1;
    EXPECT_EQ(kind_of([&] { (void)heisenberg_ideal_membership(h, desc, circle * mu_x(h)); }), ErrorKind::Inconclusive);
    desc.real_declared = false;
    EXPECT_EQ(kind_of([&] { (void)heisenberg_ideal_membership(h, desc, circle * mu_x(h)); }), ErrorKind::NotRealDeclared);
}

TEST(HeisenbergMembership, WholePlaneAndBadLambda) {
    auto h = heisenberg_algebra();
    HeisenbergIdealDesc desc;
    desc.real_declared = true;
    EXPECT_FALSE(heisenberg_ideal_membership(h, desc, B(h, 1)));
    EXPECT_TRUE(heisenberg_ideal_membership(h, desc, C(h, 1) * B(h, 1)));
    desc.lambda_x = {mpq_class(0)};
    EXPECT_EQ(kind_of([&] { (void)heisenberg_ideal_membership(h, desc, C(h, 1)); }), ErrorKind::InvalidInput);
}

TEST(GaloisProperty, ZerosOfVanishingIdealKeepIt) {
    // Every a in V(S) lies in V(S') for S' = pool members killing probe generators of V(S).
    auto h = heisenberg_algebra();
    const std::vector<FMorphism> s{heisenberg_phi(h, 2), heisenberg_psi(h, 0, 0)};
    GeneratedStarIdeal probes{h, {B(h, 1) * mu_x(h), B(h, 2) * mu_x(h), C(h, 1) * mu_x(h)}, {}, 1};
    for (const auto& g : probes.gens) ASSERT_TRUE(in_vanishing_ideal(s, g));
    std::vector<FMorphism> pool;
    for (int l : {-1, 1, 2, 3}) pool.push_back(heisenberg_phi(h, l));
    for (int x : {-1, 0, 1})
        for (int y : {-1, 0, 1}) pool.push_back(heisenberg_psi(h, x, y));
    std::vector<FMorphism> s_prime;
    for (const auto& phi : pool)
        if (zeros_membership(phi, probes)) s_prime.push_back(phi);
    EXPECT_EQ(s_prime.size(), 2u);
    Rng rng(97);
    for (int t = 0; t < 20; ++t) {
        const UElem a = heisenberg_member(h, rng);
        ASSERT_TRUE(in_vanishing_ideal(s, a));
        EXPECT_TRUE(in_vanishing_ideal(s_prime, a));
    }

    auto f = f3_algebra();
    const FMorphism phi = character_to_morphism(f, f3_sample_characters().front());
    GeneratedStarIdeal f_probes{f, {C(f, 1) * I - UElem(f, 1), C(f, 2), C(f, 3), B(f, 1)}, {}, 1};
    std::vector<FMorphism> f_pool{phi};
    for (int e : {0, 1, -2})
        for (int c1 : {1, 2}) f_pool.push_back(character_to_morphism(f, CharSpec{{2, 3}, {{1, e}}, {c1, 0, 0}}));
    // A shifted morphism B2 -> iP + i, B3 -> -iQ.
    f_pool.push_back(check_wellformed(f, 1, {WElem(1), WElem::P(1, 1, I) + WElem(1, I), WElem::Q(1, 1, -I), WElem(1, -I), WElem(1), WElem(1)}));
    std::vector<FMorphism> f_prime;
    for (const auto& m : f_pool)
        if (zeros_membership(m, f_probes)) f_prime.push_back(m);
    EXPECT_GE(f_prime.size(), 2u);
    for (int t = 0; t < 20; ++t) {
        UElem a(f);
        for (const auto& g : f_probes.gens) a += random_uelem(f, rng, 1) * g * random_uelem(f, rng, 1);
        ASSERT_TRUE(in_kernel(phi, a));
        EXPECT_TRUE(in_vanishing_ideal(f_prime, a));
    }
}

TEST(F3Demo, AllChecksPass) {
    DemoReport rep = f3_demo();
    EXPECT_GE(rep.entries.size(), 10u);
    for (const auto& e : rep.entries) EXPECT_TRUE(e.passed) << e.check << " " << e.detail;
}
