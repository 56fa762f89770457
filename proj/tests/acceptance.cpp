// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "nilnull/nilnull.hpp"
#include "oracles.hpp"

using namespace nilnull;

namespace {

const GaussRational I = GaussRational::i();

struct Outcome {
    bool passed = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && passed) {
            passed = false;
            note = what;
        }
    }
};

UElem B(const AlgebraPtr& a, std::size_t j) { return UElem::B(a, j); }
UElem C(const AlgebraPtr& a, std::size_t j) { return UElem::C(a, j); }

/// The Heisenberg algebra, f3 and 20 random validated algebras with beta <= 5, gamma <= 4.
std::vector<AlgebraPtr> test_algebras() {
    static const std::vector<AlgebraPtr> algs = [] {
        Rng rng(2024);
        std::vector<AlgebraPtr> out{heisenberg_algebra(), f3_algebra()};
        for (int t = 0; t < 20; ++t) out.push_back(random_valid_algebra(rng, 5, 4));
        return out;
    }();
    return algs;
}

std::string describe(const SubsetK& k, const AlgebraPtr& alg) {
    std::ostringstream os;
    os << "K = " << to_string(k) << " on an algebra with beta = " << alg->beta() << ", gamma = " << alg->gamma();
    return os.str();
}

// 1. Pfaffians.
Outcome pfaffian_correctness() {
    Outcome o;
    Rng rng(1);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(2 * uniform_int(rng, 1, 4));
        auto a = random_antisymmetric(rng, n);
        const mpq_class p = pf_generic(a);
        o.require(p * p == oracle::det_rational(a), "rational pf^2 != det, size " + std::to_string(n));
    }
    for (int t = 0; t < 50; ++t) {
        const auto n = static_cast<std::size_t>(2 * uniform_int(rng, 1, 3));
        auto a = random_antisymmetric_poly(rng, n);
        const Poly p = pf_generic(a);
        o.require(p * p == oracle::det_poly(a), "polynomial pf^2 != det, size " + std::to_string(n));
    }
    for (std::size_t n = 0; n <= 6; n += 2)
        for (int t = 0; t < 10; ++t) {
            auto a = random_antisymmetric(rng, n);
            o.require(pf_generic(a) == oracle::pfaffian_by_permutations(a), "recursion != permutation sum");
            auto q = random_antisymmetric_poly(rng, n);
            o.require(pf_generic(q) == oracle::pfaffian_by_permutations(q), "polynomial recursion != permutation sum");
        }
    return o;
}

// 2. Odd index set identity.
Outcome odd_identity() {
    Outcome o;
    for (const auto& alg : test_algebras()) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << alg->beta()); ++mask) {
            const SubsetK kp = SubsetK::from_mask(mask);
            if (kp.is_even()) continue;
            for (std::size_t h = 1; h <= alg->beta(); ++h) {
                UElem lhs(alg);
                for (auto k : kp) lhs += from_center(alg, pf_upper(*alg, kp, k)) * commutator(B(alg, k), B(alg, h));
                o.require(lhs == from_center(alg, pf_lower(*alg, kp, h)) * (-I), describe(kp, alg));
            }
        }
    }
    return o;
}

// 3. Commutator identity families.
Outcome commutator_families() {
    Outcome o;
    for (const auto& alg : test_algebras())
        for (const auto& k : toposort(alg->beta())) {
            for (const auto& e : check_commutator_identities(alg, k).entries) o.require(e.passed, e.identity + ", " + describe(k, alg));
        }
    return o;
}

void check_dual(Outcome& o, const AlgebraPtr& alg, const SubsetK& k) {
    InvariantFrame frame(alg, k);
    const UElem ipf = from_center(alg, frame.pf()) * I;
    const auto idx = multi_indices_up_to(k.size(), 3);
    for (const auto& a : idx)
        for (const auto& ap : idx) {
            UElem expect(alg);
            if (leq(ap, a))
                expect = ipf.pow(static_cast<unsigned>(abs_of(ap))) * frame.b_power(minus(a, ap)) *
                         GaussRational(mpq_class(factorial(a) / factorial(minus(a, ap))));
            o.require(frame.ad_dual(ap, frame.b_power(a)) == expect, "closed form fails, " + describe(k, alg));
        }
}

// 4. Dual closed form and invariance.
Outcome dual_closed_form() {
    Outcome o;
    check_dual(o, f3_algebra(), {2, 3});
    Rng rng(4);
    AlgebraPtr alg;
    do alg = random_algebra(rng, 4, 3);
    while (!alg || pf_K(*alg, {1, 2}).is_zero());
    check_dual(o, alg, {1, 2});
    for (const auto& a : {f3_algebra(), alg})
        for (const auto& k : toposort(a->beta())) {
            InvariantFrame frame(a, k);
            for (auto m : frame.outside())
                for (auto l : k)
                    o.require(commutator(frame.dual(l), frame.invariant(m)).is_zero(), "ad_D E != 0, " + describe(k, a));
        }
    return o;
}

// 5. Expansion reconstruction.
Outcome expansion_reconstruction() {
    Outcome o;
    Rng rng(5);
    std::vector<AlgebraPtr> algs{heisenberg_algebra(), f3_algebra()};
    for (int t = 0; t < 3; ++t) algs.push_back(random_valid_algebra(rng, 4, 3));
    for (const auto& alg : algs) {
        std::vector<InvariantFrame> frames;
        for (const auto& k : toposort(alg->beta())) frames.emplace_back(alg, k);
        for (int t = 0; t < 200; ++t) {
            const UElem a = random_uelem(alg, rng, 3);
            for (const auto& frame : frames)
                o.require(verify_certificate(frame, a, expand_over_invariants(frame, a)), "reconstruction fails, " + describe(frame.K(), alg));
        }
    }
    return o;
}

// 6. Extraction of ideal coefficients.
Outcome extraction() {
    Outcome o;
    Rng rng(6);
    std::vector<std::pair<AlgebraPtr, CharSpec>> specs;
    const auto f = f3_algebra(), h = heisenberg_algebra();
    for (const auto& k : std::vector<SubsetK>{{2, 3}, {1, 3}, {1, 2}})
        for (int t = 0; t < 2; ++t) specs.emplace_back(f, *fixture::random_character(f, k, rng));
    for (int t = 0; t < 2; ++t) specs.emplace_back(h, *fixture::random_character(h, {1, 2}, rng));
    while (specs.size() < 10) {
        auto alg = random_valid_algebra(rng, 4, 2);
        auto order = toposort(alg->beta());
        if (auto spec = fixture::random_character(alg, order.back(), rng)) specs.emplace_back(alg, *spec);
    }
    for (const auto& [alg, spec] : specs) {
        const FMorphism phi = character_to_morphism(alg, spec);
        const auto gens = fixture::kernel_generators(phi);
        auto member = [&](const UElem& u) { return in_kernel(phi, u); };
        InvariantFrame frame(alg, spec.K);
        for (int t = 0; t < 20; ++t) {
            const UElem a = fixture::random_ideal_element(alg, gens, rng);
            o.require(member(a), "constructed element is not in the kernel");
            try {
                const ExpansionCert cert = extract_ideal_coeffs(frame, a, member);
                o.require(verify_certificate(frame, a, cert), "extraction certificate does not verify");
                for (const auto& [alpha, c] : cert.coeffs) o.require(member(c.evaluated), "coefficient outside the kernel");
            } catch (const Error& e) {
                o.require(false, e.what());
            }
        }
    }
    return o;
}

// 7. Morphism synthesis.
Outcome synthesis() {
    Outcome o;
    Rng rng(7);
    for (const auto& alg : {f3_algebra(), heisenberg_algebra()})
        for (const auto& k : toposort(alg->beta())) {
            for (int t = 0; t < 30; ++t) {
                auto spec = fixture::random_character(alg, k, rng);
                if (!spec) {
                    o.require(false, "no admissible character found, " + describe(k, alg));
                    break;
                }
                const FMorphism phi = character_to_morphism(alg, *spec);
                try {
                    (void)check_wellformed(alg, phi.d(), phi.images());
                } catch (const Error& e) {
                    o.require(false, e.what());
                }
                InvariantFrame frame(alg, k);
                for (int s = 0; s < 50; ++s) {
                    const InvariantPoly p = random_invariant_poly(rng, frame.outside(), alg->gamma(), 3, 3);
                    GaussRational expect;
                    for (const auto& [key, c] : p.terms()) {
                        GaussRational v = c;
                        for (auto m : key.word) v *= GaussRational(mpq_class(0), -spec->valE.at(m));
                        for (std::size_t j = 0; j < key.center.size(); ++j)
                            v *= GaussRational(mpq_class(0), -spec->valC[j]).pow(key.center[j]);
                        expect += v;
                    }
                    o.require(apply(phi, frame.evaluate(p)) == WElem(phi.d(), expect), "extension property fails, " + describe(k, alg));
                }
            }
            // Violating specs: Pf(K) killed, or Pf(L) alive for some L strictly containing K.
            CharSpec bad{k, {}, std::vector<mpq_class>(alg->gamma(), 0)};
            for (std::size_t m = 1; m <= alg->beta(); ++m)
                if (!k.contains(m)) bad.valE[m] = 1;
            if (k.size() == 0) bad.valC.assign(alg->gamma(), 1);
            try {
                (void)character_to_morphism(alg, bad);
                o.require(false, "violating character accepted, " + describe(k, alg));
            } catch (const Error& e) {
                o.require(e.kind() == ErrorKind::PfaffianConditionFailed, std::string("wrong rejection: ") + e.what());
            }
        }
    return o;
}

// 8. Heisenberg ladder.
Outcome ladder() {
    Outcome o;
    const auto h = heisenberg_algebra();
    for (unsigned k = 0; k <= 5; ++k)
        o.require(ad_power(B(h, 1), B(h, 2).pow(k), k) == C(h, 1).pow(k) * GaussRational(mpq_class(factorial(k))),
                  "k = " + std::to_string(k));
    return o;
}

// 9. Heisenberg workflow.
Outcome heisenberg_workflow() {
    Outcome o;
    const auto h = heisenberg_algebra();
    const UElem mu_x = C(h, 1) * I - UElem(h, 2);
    const FMorphism phi2 = heisenberg_phi(h, 2), psi = heisenberg_psi(h, 0, 0);
    const HeisenbergMu r = heisenberg_mu(h, {phi2, psi});
    o.require(r.lambda == std::vector<mpq_class>{2, 0}, "Lambda != {2, 0}");
    o.require(from_center(h, r.mu_x) == mu_x, "mu^x != iC1 - 2");

    HeisenbergIdealDesc desc;
    desc.lambda_x = {mpq_class(2)};
    desc.points = std::vector<std::pair<mpq_class, mpq_class>>{{0, 0}};
    Rng rng(9);
    const std::vector<UElem> outside{UElem(h, 1), B(h, 1), C(h, 1), mu_x, B(h, 2) + UElem(h, 3)};
    for (int t = 0; t < 20; ++t) {
        // (s(V(N)) + <<C1>>) mu^x with N = {(0,0)}.
        const UElem inner = random_uelem(h, rng, 2) * B(h, 1) + B(h, 2) * random_uelem(h, rng, 2) +
                            random_uelem(h, rng, 1) * C(h, 1) * random_uelem(h, rng, 1);
        const UElem member = inner * mu_x * random_uelem(h, rng, 1);
        o.require(heisenberg_ideal_membership(h, desc, member), "member rejected");
        o.require(!heisenberg_ideal_membership(h, desc, member + outside[static_cast<std::size_t>(t) % outside.size()]),
                  "non-member accepted");
        o.require(in_kernel(phi2, random_uelem(h, rng, 2) * mu_x * random_uelem(h, rng, 2)), "<<iC1 - 2>> not in ker Phi_2");
    }
    return o;
}

// 10. f3 workflow.
Outcome f3_workflow() {
    Outcome o;
    for (const auto& e : f3_demo().entries) o.require(e.passed, e.check + " " + e.detail);
    return o;
}

// 11. Algebra axioms.
Outcome algebra_axioms() {
    Outcome o;
    Rng rng(11);
    std::vector<AlgebraPtr> algs{heisenberg_algebra(), f3_algebra(), random_valid_algebra(rng, 4, 3), random_valid_algebra(rng, 5, 2)};
    for (int t = 0; t < 500; ++t) {
        const auto& alg = algs[static_cast<std::size_t>(t) % algs.size()];
        const UElem one(alg, 1);
        const UElem a = random_uelem(alg, rng, 4, 1, 3), b = random_uelem(alg, rng, 4, 1, 3), c = random_uelem(alg, rng, 4, 1, 3);
        o.require((a * b) * c == a * (b * c), "U associativity");
        o.require(star(a * b) == star(b) * star(a), "U star antimultiplicative");
        o.require(star(star(a)) == a, "U star involutive");
        const GaussRational z = random_gauss(rng);
        o.require(star(a * z + b) == star(a) * z.conj() + star(b), "U star antilinear");
        o.require(a * one == a && one * a == a, "U unit");
    }
    for (int t = 0; t < 500; ++t) {
        const std::size_t d = static_cast<std::size_t>(t % 4);
        const WElem one(d, 1);
        const WElem a = random_welem(d, rng, 4, 3), b = random_welem(d, rng, 4, 3), c = random_welem(d, rng, 4, 3);
        o.require((a * b) * c == a * (b * c), "W associativity");
        o.require(w_star(a * b) == w_star(b) * w_star(a), "W star antimultiplicative");
        o.require(w_star(w_star(a)) == a, "W star involutive");
        o.require(a * one == a && one * a == a, "W unit");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double budget_seconds;
    };
    const std::vector<Criterion> criteria{
        {"1 Pfaffian correctness", pfaffian_correctness, 30},
        {"2 odd-set Pfaffian identity", odd_identity, 0},
        {"3 commutator identity families", commutator_families, 0},
        {"4 dual closed form and invariance", dual_closed_form, 0},
        {"5 expansion reconstruction", expansion_reconstruction, 0},
        {"6 ideal coefficient extraction", extraction, 0},
        {"7 morphism synthesis from characters", synthesis, 0},
        {"8 Heisenberg ladder", ladder, 0},
        {"9 Heisenberg end-to-end", heisenberg_workflow, 10},
        {"10 f3 end-to-end", f3_workflow, 0},
        {"11 algebra axioms", algebra_axioms, 0},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && secs > c.budget_seconds && o.passed) {
            o.passed = false;
            o.note = "exceeded the time budget of " + std::to_string(c.budget_seconds) + " s";
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (o.passed ? "PASS " : "FAIL ") << c.name << " (" << timing << ")" << (o.note.empty() ? "" : ": " + o.note) << std::endl;
        all = all && o.passed;
    }
    return all ? 0 : 1;
}
