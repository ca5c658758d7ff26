#pragma once

#include <json.hpp>

#include "hyperdeg/classify.hpp"
#include "hyperdeg/cubes.hpp"
#include "hyperdeg/family.hpp"
#include "hyperdeg/symfunc.hpp"

namespace hyperdeg {

using json = nlohmann::json;

// {"n": int, "k": int, "members": [[..],..]}, members ascending inside and in
// colex order across.
inline json family_to_json(const KFamily& K) {
    json j;
    j["n"] = K.n();
    j["k"] = K.k();
    j["members"] = json::array();
    for (const auto& s : K.members()) j["members"].push_back(s);
    return j;
}

inline KFamily family_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("k") || !j.contains("members"))
        throw DomainError("family JSON needs fields n, k, members");
    int n = j.at("n").get<int>();
    int k = j.at("k").get<int>();
    std::vector<Subset> members;
    for (const auto& item : j.at("members")) members.push_back(item.get<Subset>());
    return KFamily::from_members(n, k, members);
}

inline json functional_to_json(const LinearFunctional& w) {
    json j;
    j["coefficients"] = json::array();
    for (const auto& c : w.coefficients) j["coefficients"].push_back(rational_to_string(c));
    if (w.threshold) j["threshold"] = rational_to_string(*w.threshold);
    return j;
}

inline json hierarchy_report_to_json(const HierarchyReport& rep) {
    json j;
    j["positive_threshold"] = rep.positive_threshold;
    j["threshold"] = rep.threshold;
    j["zonotope_vertex"] = rep.zonotope_vertex;
    j["uniquely_realizable"] = rep.uniquely_realizable;
    j["degree_maximal"] = rep.degree_maximal;
    j["vicinal_total"] = rep.vicinal_total;
    j["rrst"] = rep.rrst;
    j["shifted_isomorphic"] = rep.shifted_isomorphic;
    if (rep.threshold_certificate)
        j["threshold_certificate"] = functional_to_json(*rep.threshold_certificate);
    if (rep.positive_certificate)
        j["positive_certificate"] = functional_to_json(*rep.positive_certificate);
    if (rep.second_realization)
        j["second_realization"] = family_to_json(*rep.second_realization);
    if (rep.majorizing_degree) j["majorizing_degree"] = *rep.majorizing_degree;
    if (!rep.rrst_witnesses.empty()) {
        json w = json::array();
        for (const auto& v : rep.rrst_witnesses) {
            w.push_back({{"A", v.A}, {"B", v.B}, {"i", v.i}, {"j", v.j}});
            if (w.size() >= 16) break;  // witnesses repeat with symmetry; cap the dump
        }
        j["rrst_violations"] = w;
    }
    return j;
}

// [{"partition": [...], "coeff": int}, ...] in descending lex order, which
// refines dominance.
inline json sympoly_to_json(const SymPoly& p) {
    std::vector<Partition> keys;
    for (const auto& [lam, c] : p.coeffs) keys.push_back(lam);
    std::sort(keys.begin(), keys.end(), lex_greater);
    json arr = json::array();
    for (const auto& lam : keys) {
        const mpz_class& c = p.coeffs.at(lam);
        json entry;
        entry["partition"] = lam;
        if (c.fits_slong_p())
            entry["coeff"] = c.get_si();
        else
            entry["coeff"] = c.get_str();
        arr.push_back(entry);
    }
    json j;
    j["basis"] = p.basis == Basis::schur ? "schur" : "monomial";
    j["terms"] = arr;
    return j;
}

inline json cellset_to_json(const CellSet& c) {
    json j;
    j["domain"] = c.domain == CellDomain::vertex ? "vertex" : "subfacet";
    j["cells"] = json::array();
    for (const auto& x : c.cells) j["cells"].push_back(x);
    return j;
}

}  // namespace hyperdeg
