#pragma once

#include <json.hpp>

#include <string>

#include "brep/cyclotomic.hpp"
#include "brep/dual_orbits.hpp"
#include "brep/group.hpp"
#include "brep/little_groups.hpp"
#include "brep/verification.hpp"

namespace brep {

using json = nlohmann::ordered_json;

inline json to_json(const Partition& p) { return json(p.parts); }

inline Partition partition_from_json(const json& j) {
    Partition p(j.get<std::vector<int>>());
    if (!p.valid()) throw std::invalid_argument("invalid partition in JSON");
    return p;
}

inline json to_json(const CycNum& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(rat_to_string(c));
    return json{{"q", x.q()}, {"coeffs", coeffs}};
}

// 1-based permutation images on the wire
inline json to_json(const GroupElement& g) {
    std::vector<int> perm;
    for (int v : g.s.img) perm.push_back(v + 1);
    return json{{"a", g.a}, {"perm", perm}};
}

inline GroupElement group_element_from_json(const json& j, int n, int q) {
    GroupElement g;
    g.a = j.at("a").get<std::vector<int>>();
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    if (static_cast<int>(g.a.size()) != n || static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("group element size mismatch");
    for (int& v : g.a) {
        if (v < 0 || v >= q) throw std::invalid_argument("residue out of range");
    }
    for (int& v : perm) --v;
    g.s = Perm(perm);
    return g;
}

inline json to_json(const IrrepLabel& label) {
    json mus = json::array();
    for (const auto& mu : label.mus) mus.push_back(to_json(mu));
    return json{{"lambda", to_json(label.lambda)}, {"b", label.b}, {"mus", mus}};
}

inline IrrepLabel label_from_json(const json& j) {
    IrrepLabel label;
    label.lambda = partition_from_json(j.at("lambda"));
    label.b = j.at("b").get<std::vector<int>>();
    for (const auto& mu : j.at("mus")) label.mus.push_back(partition_from_json(mu));
    return label;
}

inline json to_json(const CycMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline json to_json(const VerifyReport& rep) {
    json census = json::object();
    for (auto& [dim, count] : rep.dimension_census)
        census[std::to_string(dim)] = count;
    return json{
        {"n", rep.n},
        {"q", rep.q},
        {"group_order", rep.group_order},
        {"irrep_count", rep.irrep_count},
        {"class_count", rep.class_count},
        {"formula_count", rep.formula_count},
        {"dimension_census", census},
        {"census_identity", rep.census_identity},
        {"checks",
         {{"counts_match", rep.counts_match},
          {"sum_dim_squares", rep.sum_dim_squares_ok},
          {"character_norms", rep.norms_ok},
          {"character_orthogonality", rep.orthogonality_ok},
          {"homomorphism_spot_checks", rep.homomorphism_ok},
          {"braid_relations", rep.braid_relations_ok}}},
        {"failures", rep.failures},
        {"passed", rep.passed()}};
}

}  // namespace brep
