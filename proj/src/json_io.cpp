#include "satake/json_io.hpp"

#include <numeric>

namespace satake {

Json fraction_json(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  Json j;
  j["num"] = num;
  j["den"] = den;
  return j;
}

Json permutation_json(const NodePermutation& p) {
  Json arr = Json::array();
  for (int i = 0; i < p.size(); ++i) arr.push_back(p(i) + 1);
  return arr;
}

Json record_json(const RealFormRecord& rec) {
  Json j;
  j["names"] = rec.names;
  j["type"] = rec.diagram.rs->label();
  Json black = Json::array();
  for (int i : rec.diagram.black) black.push_back(i + 1);
  j["black"] = black;
  Json arrows = Json::array();
  for (auto [a, b] : rec.diagram.arrows()) arrows.push_back(Json::array({a + 1, b + 1}));
  j["arrows"] = arrows;
  j["notes"] = rec.notes;
  return j;
}

Json classification_json(const ClassificationTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json r;
    r["name"] = row.name;
    r["type"] = row.type;
    r["epsilon"] = permutation_json(row.epsilon);
    r["is_identity"] = row.is_identity;
    rows.push_back(r);
  }
  Json j;
  j["rows"] = rows;
  return j;
}

namespace {

Json halved_vector(const RootVector& v) {
  Json arr = Json::array();
  for (int c : v.coords) arr.push_back(fraction_json(c, RestrictedRootData::kScale));
  return arr;
}

}  // namespace

Json restricted_json(const RestrictedRootData& data) {
  Json j;
  j["type"] = data.type_label;
  Json plus = Json::array();
  Json mult = Json::array();
  for (const RootVector& v : data.sigma_plus) {
    plus.push_back(halved_vector(v));
    mult.push_back(data.multiplicities.at(v));
  }
  j["sigma_plus"] = plus;
  j["multiplicities"] = mult;
  Json base = Json::array();
  for (const RootVector& v : data.base) base.push_back(halved_vector(v));
  j["base"] = base;
  return j;
}

Json verdict_json(const StructureVerdict& v) {
  Json j;
  j["conjugacy_of_sigma_H"] = std::string(to_string(v.conjugacy_of_sigma_H));
  j["mu0_exists"] = v.mu0_exists;
  j["real_structure_on_GH"] = std::string(to_string(v.real_structure_on_GH));
  j["wonderful_completion"] = std::string(to_string(v.wonderful_completion));
  j["citations"] = v.citations;
  j["caveats"] = v.caveats;
  return j;
}

}  // namespace satake
