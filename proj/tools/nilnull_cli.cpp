// Command-line front end. Exit codes: 0 success or true, 1 false,
// 2 error or inconclusive.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilnull/nilnull.hpp"

using namespace nilnull;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

SubsetK parse_set(std::string text) {
    std::vector<std::size_t> out;
    for (char& c : text)
        if (c == '{' || c == '}' || c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw Error(ErrorKind::InvalidInput, "index set entry '" + tok + "' is not an integer");
        out.push_back(v);
    }
    return SubsetK(std::move(out));
}

int print_bool(bool v, bool as_json) {
    if (as_json)
        std::cout << json{{"result", v}}.dump() << "\n";
    else
        std::cout << (v ? "true" : "false") << "\n";
    return v ? kTrue : kFalse;
}

void print_elem(const std::string& text, bool as_json) {
    if (as_json)
        std::cout << json{{"result", text}}.dump() << "\n";
    else
        std::cout << text << "\n";
}

std::vector<FMorphism> load_morphisms(const AlgebraPtr& alg, const std::vector<std::string>& files) {
    std::vector<FMorphism> out;
    for (const auto& f : files) out.push_back(morphism_from_json(alg, read_json_file(f)));
    return out;
}

struct Check {
    std::string name;
    bool passed;
};

/// Randomized identity checks on one algebra.
std::vector<Check> run_identity_checks(const AlgebraPtr& alg, std::uint64_t seed, unsigned max_degree) {
    Rng rng(seed);
    std::vector<Check> out;
    const std::size_t beta = alg->beta();

    bool ok = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << beta); ++mask) {
        SubsetK kp = SubsetK::from_mask(mask);
        if (kp.is_even()) continue;
        for (std::size_t h = 1; h <= beta; ++h) {
            UElem lhs(alg);
            for (auto k : kp) lhs += from_center(alg, pf_upper(*alg, kp, k)) * commutator(UElem::B(alg, k), UElem::B(alg, h));
            ok = ok && lhs == from_center(alg, pf_lower(*alg, kp, h)) * (-GaussRational::i());
        }
    }
    out.push_back({"sum_k Pf^k(K') [B_k, B_h] = -i Pf_h(K') for all odd K'", ok});

    ok = true;
    for (const auto& k : toposort(beta)) ok = ok && check_commutator_identities(alg, k).all_passed();
    out.push_back({"commutator identities for every even K", ok});

    ok = true;
    for (int t = 0; t < 50; ++t) {
        UElem a = random_uelem(alg, rng, max_degree), b = random_uelem(alg, rng, max_degree), c = random_uelem(alg, rng, max_degree);
        ok = ok && (a * b) * c == a * (b * c) && star(a * b) == star(b) * star(a) && star(star(a)) == a;
    }
    out.push_back({"associativity and star laws on 50 random triples", ok});

    ok = true;
    for (const auto& k : toposort(beta)) {
        InvariantFrame frame(alg, k);
        for (int t = 0; t < 10; ++t) {
            UElem a = random_uelem(alg, rng, max_degree);
            ok = ok && verify_certificate(frame, a, expand_over_invariants(frame, a));
        }
    }
    out.push_back({"expansion reconstruction for every even K", ok});
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in enveloping algebras of 2-step nilpotent Lie algebras"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string alg_name = "heisenberg";
    auto add_alg = [&](CLI::App* sub) {
        sub->add_option("-a,--algebra", alg_name, "built-in name (heisenberg, f3) or JSON file")->capture_default_str();
        sub->add_flag("--json", as_json, "machine-readable output");
    };

    std::string file, expr, expr2, kset;
    std::vector<std::string> items;
    std::size_t index = 0, beta = 0;
    long upper = -1, lower = -1;
    std::uint64_t seed = 1;
    unsigned max_degree = 3, degree_bound = 0;

    auto* validate = app.add_subcommand("validate-lie", "validate a structure-constant file");
    validate->add_option("file", file)->required();
    validate->add_flag("--json", as_json);

    auto* normalize_cmd = app.add_subcommand("normalize", "print an expression in PBW normal form");
    add_alg(normalize_cmd);
    normalize_cmd->add_option("expr", expr)->required();

    auto* comm = app.add_subcommand("commutator", "[a, b]");
    add_alg(comm);
    comm->add_option("lhs", expr)->required();
    comm->add_option("rhs", expr2)->required();

    auto* star_cmd = app.add_subcommand("star", "the *-involution of an expression");
    add_alg(star_cmd);
    star_cmd->add_option("expr", expr)->required();

    auto* pf = app.add_subcommand("pfaffian", "Pf(K); with --upper k or --lower h for odd K'");
    add_alg(pf);
    pf->add_option("-K", kset, "index set such as {1,2}")->required();
    pf->add_option("--upper", upper, "Pf^k(K')");
    pf->add_option("--lower", lower, "Pf_h(K')");

    auto* inv = app.add_subcommand("invariant", "the invariant element E_{K,m}");
    add_alg(inv);
    inv->add_option("-K", kset)->required();
    inv->add_option("-m", index)->required();

    auto* dual = app.add_subcommand("dual", "the dual element D_{K,l}");
    add_alg(dual);
    dual->add_option("-K", kset)->required();
    dual->add_option("-l", index)->required();

    auto* expand = app.add_subcommand("expand", "expansion certificate Pf(K)^r a = sum p_alpha B_K^alpha");
    add_alg(expand);
    expand->add_option("-K", kset)->required();
    expand->add_option("expr", expr)->required();

    auto* build = app.add_subcommand("build-morphism", "synthesize a morphism from a character file");
    add_alg(build);
    build->add_option("file", file)->required();

    auto* apply_cmd = app.add_subcommand("apply", "image of an expression under a morphism");
    add_alg(apply_cmd);
    apply_cmd->add_option("file", file)->required();
    apply_cmd->add_option("expr", expr)->required();

    auto* vanish = app.add_subcommand("in-vanishing", "membership in the intersection of kernels");
    add_alg(vanish);
    vanish->add_option("args", items, "morphism files followed by the expression")->required();

    auto* topo = app.add_subcommand("toposort", "even subsets of {1..beta} in a linear extension of inclusion");
    topo->add_option("beta", beta)->required();
    topo->add_flag("--json", as_json);

    auto* hmu = app.add_subcommand("heisenberg-mu", "Lambda, mu and mu^x for Heisenberg morphisms");
    hmu->add_option("files", items)->required();
    hmu->add_flag("--json", as_json);

    auto* hmem = app.add_subcommand("heisenberg-member", "membership in a described Heisenberg ideal");
    hmem->add_option("file", file)->required();
    hmem->add_option("expr", expr)->required();
    hmem->add_option("--degree-bound", degree_bound, "commutative oracle degree bound (0 = automatic)");
    hmem->add_flag("--json", as_json);

    auto* demo = app.add_subcommand("f3-demo", "run the free 2-step algebra workflow");
    demo->add_flag("--json", as_json);

    auto* checks = app.add_subcommand("check-identities", "randomized identity checks on an algebra");
    checks->add_option("file", file, "built-in name or JSON file")->required();
    checks->add_option("--seed", seed)->capture_default_str();
    checks->add_option("--max-degree", max_degree)->capture_default_str();
    checks->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        if (*validate) {
            AlgebraPtr alg = lie_from_json(read_json_file(file));
            if (as_json)
                std::cout << json{{"valid", true}, {"algebra", lie_to_json(*alg)}}.dump() << "\n";
            else
                std::cout << "valid: beta = " << alg->beta() << ", gamma = " << alg->gamma() << "\n";
            return kTrue;
        }
        if (*topo) {
            auto order = toposort(beta);
            if (as_json) {
                json arr = json::array();
                for (const auto& s : order) arr.push_back(s.members());
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& s : order) std::cout << to_string(s) << "\n";
            }
            return kTrue;
        }
        if (*demo) {
            DemoReport rep = f3_demo();
            if (as_json) {
                json arr = json::array();
                for (const auto& e : rep.entries) arr.push_back({{"check", e.check}, {"passed", e.passed}, {"detail", e.detail}});
                std::cout << json{{"passed", rep.all_passed()}, {"checks", arr}}.dump(2) << "\n";
            } else {
                for (const auto& e : rep.entries)
                    std::cout << (e.passed ? "PASS " : "FAIL ") << e.check << (e.detail.empty() ? "" : "  (" + e.detail + ")") << "\n";
            }
            return rep.all_passed() ? kTrue : kFalse;
        }
        if (*hmu) {
            AlgebraPtr h = heisenberg_algebra();
            HeisenbergMu r = heisenberg_mu(h, load_morphisms(h, items));
            json lam = json::array();
            std::string lam_text;
            for (const auto& l : r.lambda) {
                lam.push_back(rational_to_json(l));
                lam_text += (lam_text.empty() ? "" : ", ") + l.get_str();
            }
            if (as_json)
                std::cout << json{{"Lambda", lam}, {"mu", center_to_string(r.mu)}, {"muX", center_to_string(r.mu_x)}}.dump() << "\n";
            else
                std::cout << "Lambda = {" << lam_text << "}\nmu = " << center_to_string(r.mu) << "\nmu^x = " << center_to_string(r.mu_x) << "\n";
            return kTrue;
        }
        if (*hmem) {
            AlgebraPtr h = heisenberg_algebra();
            HeisenbergIdealDesc desc = heisenberg_desc_from_json(read_json_file(file));
            if (degree_bound) desc.degree_bound = degree_bound;
            return print_bool(heisenberg_ideal_membership(h, desc, parse_u(h, expr)), as_json);
        }
        if (*checks) {
            AlgebraPtr alg = load_algebra(file);
            auto results = run_identity_checks(alg, seed, max_degree);
            bool all = true;
            json arr = json::array();
            for (const auto& c : results) {
                all = all && c.passed;
                arr.push_back({{"check", c.name}, {"passed", c.passed}});
                if (!as_json) std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
            }
            if (as_json) std::cout << json{{"passed", all}, {"checks", arr}}.dump(2) << "\n";
            return all ? kTrue : kFalse;
        }

        AlgebraPtr alg = load_algebra(alg_name);
        if (*normalize_cmd) {
            print_elem(to_string(parse_u(alg, expr)), as_json);
        } else if (*comm) {
            print_elem(to_string(commutator(parse_u(alg, expr), parse_u(alg, expr2))), as_json);
        } else if (*star_cmd) {
            print_elem(to_string(star(parse_u(alg, expr))), as_json);
        } else if (*pf) {
            SubsetK k = parse_set(kset);
            if (upper >= 0 && lower >= 0) throw Error(ErrorKind::InvalidInput, "give at most one of --upper and --lower");
            CenterPoly p = upper >= 0   ? pf_upper(*alg, k, static_cast<std::size_t>(upper))
                           : lower >= 0 ? pf_lower(*alg, k, static_cast<std::size_t>(lower))
                                        : pf_K(*alg, k);
            print_elem(center_to_string(p), as_json);
        } else if (*inv) {
            print_elem(to_string(invariant_elem(alg, parse_set(kset), index)), as_json);
        } else if (*dual) {
            print_elem(to_string(dual_elem(alg, parse_set(kset), index)), as_json);
        } else if (*expand) {
            InvariantFrame frame(alg, parse_set(kset));
            ExpansionCert cert = expand_over_invariants(frame, parse_u(alg, expr));
            if (as_json) {
                std::cout << cert_to_json(cert).dump(2) << "\n";
            } else {
                std::cout << "K = " << to_string(cert.K) << ", r = " << cert.r << ", s = " << cert.s << "\n";
                for (const auto& [alpha, c] : cert.coeffs) {
                    std::cout << "alpha = (";
                    for (std::size_t j = 0; j < alpha.size(); ++j) std::cout << (j ? "," : "") << alpha[j];
                    std::cout << "): " << to_string(c.abstract) << "  =  " << to_string(c.evaluated) << "\n";
                }
            }
        } else if (*build) {
            FMorphism phi = character_to_morphism(alg, charspec_from_json(read_json_file(file)));
            if (as_json) {
                std::cout << morphism_to_json(phi).dump(2) << "\n";
            } else {
                std::cout << "d = " << phi.d() << "\n";
                for (std::size_t p = 0; p < phi.images().size(); ++p)
                    std::cout << (p < alg->beta() ? "B" + std::to_string(p + 1) : "C" + std::to_string(p - alg->beta() + 1))
                              << " -> " << to_string(phi.images()[p]) << "\n";
            }
        } else if (*apply_cmd) {
            FMorphism phi = morphism_from_json(alg, read_json_file(file));
            print_elem(to_string(apply(phi, parse_u(alg, expr))), as_json);
        } else if (*vanish) {
            if (items.empty()) throw Error(ErrorKind::InvalidInput, "expected morphism files followed by an expression");
            const std::string e = items.back();
            items.pop_back();
            return print_bool(in_vanishing_ideal(load_morphisms(alg, items), parse_u(alg, e)), as_json);
        }
        return kTrue;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
