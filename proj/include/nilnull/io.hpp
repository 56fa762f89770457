#pragma once

// JSON readers and writers for algebras, morphisms, characters, Heisenberg
// ideal descriptions and expansion certificates. Rationals are written as
// "p/q" strings; plain JSON integers are accepted on input.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nilnull/parse.hpp"
#include "nilnull/pipeline.hpp"

namespace nilnull {

using json = nlohmann::json;

inline mpq_class rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return mpq_class(std::to_string(j.get<long long>()));
    throw Error(ErrorKind::InvalidInput, "expected a rational (string \"p/q\" or integer), got " + j.dump());
}

inline json rational_to_json(const mpq_class& q) { return q.get_str(); }

namespace detail {
inline const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw Error(ErrorKind::InvalidInput, std::string("missing field \"") + name + "\"");
    return j.at(name);
}

inline std::size_t index_from_json(const json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw Error(ErrorKind::InvalidInput, "expected a nonnegative integer, got " + j.dump());
    return static_cast<std::size_t>(j.get<long long>());
}
}  // namespace detail

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------

inline AlgebraPtr lie_from_json(const json& j) {
    RawLieTable raw;
    raw.beta = detail::index_from_json(detail::field(j, "beta"));
    raw.gamma = detail::index_from_json(detail::field(j, "gamma"));
    if (j.contains("brackets"))
        for (const auto& e : j.at("brackets")) {
            BracketEntry b;
            b.j = detail::index_from_json(detail::field(e, "j"));
            b.k = detail::index_from_json(detail::field(e, "k"));
            for (const auto& c : detail::field(e, "c")) b.c.push_back(rational_from_json(c));
            raw.brackets.push_back(std::move(b));
        }
    return validate_lie(raw);
}

inline json lie_to_json(const LieAlg2Step& alg) {
    json br = json::array();
    for (const auto& e : alg.to_raw().brackets) {
        json c = json::array();
        for (const auto& v : e.c) c.push_back(rational_to_json(v));
        br.push_back({{"j", e.j}, {"k", e.k}, {"c", c}});
    }
    return {{"beta", alg.beta()}, {"gamma", alg.gamma()}, {"brackets", br}};
}

/// "heisenberg" and "f3" name the built-in algebras; anything else is a JSON path.
inline AlgebraPtr load_algebra(const std::string& name_or_path) {
    if (name_or_path == "heisenberg" || name_or_path == "h") return heisenberg_algebra();
    if (name_or_path == "f3") return f3_algebra();
    return lie_from_json(read_json_file(name_or_path));
}

// ---------------------------------------------------------------------------

inline FMorphism morphism_from_json(const AlgebraPtr& alg, const json& j) {
    const std::size_t d = detail::index_from_json(detail::field(j, "d"));
    std::vector<WElem> images;
    for (const auto& e : detail::field(j, "images")) {
        if (!e.is_string()) throw Error(ErrorKind::InvalidInput, "morphism images must be expression strings");
        images.push_back(parse_w(d, e.get<std::string>()));
    }
    return check_wellformed(alg, d, std::move(images));
}

inline json morphism_to_json(const FMorphism& phi) {
    json imgs = json::array();
    for (const auto& w : phi.images()) imgs.push_back(to_string(w));
    return {{"d", phi.d()}, {"images", imgs}};
}

inline CharSpec charspec_from_json(const json& j) {
    CharSpec spec;
    std::vector<std::size_t> k;
    for (const auto& e : detail::field(j, "K")) k.push_back(detail::index_from_json(e));
    spec.K = SubsetK(std::move(k));
    if (j.contains("valE")) {
        const json& ve = j.at("valE");
        if (!ve.is_object()) throw Error(ErrorKind::InvalidInput, "valE must be an object {\"m\": rational}");
        for (const auto& [key, v] : ve.items()) {
            std::size_t m = 0;
            try {
                m = static_cast<std::size_t>(std::stoul(key));
            } catch (const std::exception&) {
                throw Error(ErrorKind::InvalidInput, "valE key \"" + key + "\" is not an index");
            }
            spec.valE[m] = rational_from_json(v);
        }
    }
    for (const auto& v : detail::field(j, "valC")) spec.valC.push_back(rational_from_json(v));
    return spec;
}

inline json charspec_to_json(const CharSpec& spec) {
    json ve = json::object(), vc = json::array(), k = json::array();
    for (const auto& [m, v] : spec.valE) ve[std::to_string(m)] = rational_to_json(v);
    for (const auto& v : spec.valC) vc.push_back(rational_to_json(v));
    for (auto x : spec.K) k.push_back(x);
    return {{"K", k}, {"valE", ve}, {"valC", vc}};
}

inline HeisenbergIdealDesc heisenberg_desc_from_json(const json& j) {
    HeisenbergIdealDesc desc;
    if (j.contains("LambdaX"))
        for (const auto& v : j.at("LambdaX")) desc.lambda_x.push_back(rational_from_json(v));
    if (j.contains("N")) {
        std::vector<std::pair<mpq_class, mpq_class>> pts;
        for (const auto& p : j.at("N")) {
            if (!p.is_array() || p.size() != 2) throw Error(ErrorKind::InvalidInput, "points of N must be pairs [xi, eta]");
            pts.emplace_back(rational_from_json(p[0]), rational_from_json(p[1]));
        }
        desc.points = std::move(pts);
    }
    if (j.contains("varietyGens")) {
        if (desc.points) throw Error(ErrorKind::InvalidInput, "give either N or varietyGens, not both");
        for (const auto& g : j.at("varietyGens")) {
            Poly p = parse_poly(g.get<std::string>());
            if (p.conj() != p) throw Error(ErrorKind::InvalidInput, "variety generator " + g.get<std::string>() + " is not real");
            desc.variety_gens.push_back(std::move(p));
        }
    }
    if (!desc.points && !j.contains("varietyGens"))
        throw Error(ErrorKind::InvalidInput, "a Heisenberg ideal description needs N or varietyGens");
    if (j.contains("real")) desc.real_declared = j.at("real").get<bool>();
    if (j.contains("degreeBound")) desc.degree_bound = static_cast<unsigned>(detail::index_from_json(j.at("degreeBound")));
    return desc;
}

inline json cert_to_json(const ExpansionCert& cert) {
    json coeffs = json::array();
    for (const auto& [alpha, c] : cert.coeffs)
        coeffs.push_back({{"alpha", alpha}, {"abstract", to_string(c.abstract)}, {"evaluated", to_string(c.evaluated)}});
    json k = json::array();
    for (auto x : cert.K) k.push_back(x);
    return {{"K", k}, {"r", cert.r}, {"s", cert.s}, {"coeffs", coeffs}};
}

}  // namespace nilnull
