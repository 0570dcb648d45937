#ifndef MILO_SERIALIZE_HPP
#define MILO_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "milo/betti.hpp"
#include "milo/decompose.hpp"
#include "milo/ideal.hpp"
#include "milo/parse.hpp"
#include "milo/scan.hpp"

// Structured-document format.  Variable indices are 1-based everywhere in
// JSON, matching the x1,x2,... naming of the text format; exponent vectors
// are plain arrays of length nvars.

namespace milo {

inline nlohmann::json to_json(const Monomial& m) {
    return nlohmann::json(m.exponents());
}

inline nlohmann::json to_json(const MonomialIdeal& I) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Monomial& g : I.gens()) gens.push_back(to_json(g));
    return {{"nvars", I.nvars()}, {"gens", std::move(gens)}};
}

inline MonomialIdeal ideal_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("gens"))
        throw parse_error("structured ideal needs {nvars, gens}");
    const std::size_t nvars = j.at("nvars").get<std::size_t>();
    std::vector<Monomial> gens;
    for (const auto& g : j.at("gens")) {
        std::vector<std::uint64_t> raw = g.get<std::vector<std::uint64_t>>();
        if (raw.size() != nvars)
            throw parse_error("generator exponent vector has wrong length");
        std::vector<Exponent> e(nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            if (raw[i] > max_exponent())
                throw cap_error("monomial exponent exceeds cap");
            e[i] = static_cast<Exponent>(raw[i]);
        }
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

inline nlohmann::json to_json(const MonomialPrime& p) {
    std::vector<std::size_t> vars;
    for (std::size_t v : p.vars()) vars.push_back(v + 1);
    return {{"nvars", p.nvars()}, {"vars", std::move(vars)}};
}

inline MonomialPrime prime_from_json(const nlohmann::json& j, std::size_t nvars) {
    std::vector<std::size_t> vars;
    for (const auto& v : j.at("vars")) {
        std::size_t idx = v.get<std::size_t>();
        if (idx == 0) throw parse_error("variable indices are 1-based");
        vars.push_back(idx - 1);
    }
    return MonomialPrime(nvars, std::move(vars));
}

inline nlohmann::json to_json(const IntersectionPresentation& P) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [p, d] : P.terms) {
        nlohmann::json t = to_json(p);
        t.erase("nvars");
        t["exponent"] = d;
        terms.push_back(std::move(t));
    }
    return {{"nvars", P.nvars}, {"terms", std::move(terms)}};
}

inline IntersectionPresentation presentation_from_json(const nlohmann::json& j) {
    IntersectionPresentation P;
    P.nvars = j.at("nvars").get<std::size_t>();
    for (const auto& t : j.at("terms"))
        P.terms.emplace_back(prime_from_json(t, P.nvars), t.at("exponent").get<std::uint64_t>());
    return P;
}

inline nlohmann::json to_json(const BettiTable& B) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, rank] : B.entries)
        entries.push_back({{"i", key.first}, {"multidegree", key.second}, {"rank", rank}});
    return {{"nvars", B.nvars},
            {"field_char", B.field_char},
            {"regularity", B.regularity()},
            {"entries", std::move(entries)}};
}

inline nlohmann::json to_json(const LocalizationRow& row) {
    nlohmann::json j = {{"prime", to_json(row.prime)},
                        {"ideal", to_json(row.localized)},
                        {"pretty", to_string(row.localized)},
                        {"regularity", row.reg},
                        {"linear", row.linear}};
    if (row.equi_degree)
        j["degree"] = *row.equi_degree;
    else
        j["degree"] = "mixed";
    return j;
}

inline nlohmann::json to_json(const LocalizationScanReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) rows.push_back(to_json(row));
    return {{"rows", std::move(rows)},
            {"all_linear", r.all_linear},
            {"polymatroidal", r.polymatroidal},
            {"consistent", r.consistent}};
}

inline nlohmann::json to_json(const TheoremApplicability& t) {
    return {{"height_n_minus_1", t.height_n_minus_1},
            {"pure_powers_n_minus_1", t.pure_powers_n_minus_1},
            {"pure_powers_n_minus_2", t.pure_powers_n_minus_2},
            {"pure_powers_n_minus_3", t.pure_powers_n_minus_3},
            {"four_vars", t.four_vars},
            {"unmixed_h2_4vars", t.unmixed_h2_4vars},
            {"no_embedded_4vars", t.no_embedded_4vars}};
}

inline nlohmann::json to_json(const PowerRow& row) {
    nlohmann::json j = {{"k", row.k}, {"regularity", row.reg}, {"linear", row.linear}};
    if (row.equi_degree)
        j["degree"] = *row.equi_degree;
    else
        j["degree"] = "mixed";
    return j;
}

} // namespace milo

#endif
