// JSON encodings of reports. Generator indices are 1-based, as in files;
// infinite labels are the string "inf".
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxrig/abelianization.hpp"
#include "coxrig/coxeter_matrix.hpp"
#include "coxrig/diagram_isomorphism.hpp"
#include "coxrig/finite_type.hpp"
#include "coxrig/rigidity_class.hpp"
#include "coxrig/rigidity_oracle.hpp"

namespace coxrig::json {

using nlohmann::ordered_json;

inline ordered_json label(Label l) {
  if (l.is_infinite()) return "inf";
  return l.value();
}

inline ordered_json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline ordered_json subset(const GeneratorSubset& s) {
  auto out = ordered_json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

inline ordered_json matrix(const CoxeterMatrix& m) {
  ordered_json out;
  out["rank"] = m.rank();
  if (m.names()) out["names"] = *m.names();
  auto rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rank(); ++i) {
    auto row = ordered_json::array();
    for (std::size_t j = 0; j < m.rank(); ++j) row.push_back(label(m(i, j)));
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

inline ordered_json class_report(const ClassReport& r) {
  ordered_json out;
  out["in_class"] = r.in_class;
  out["conditions"] = {r.conditions[0], r.conditions[1], r.conditions[2], r.conditions[3]};
  auto witnesses = ordered_json::array();
  for (const auto& w : r.witnesses) {
    ordered_json j;
    j["condition"] = w.condition;
    auto gens = ordered_json::array();
    for (auto g : w.generators) gens.push_back(g + 1);
    j["generators"] = std::move(gens);
    auto values = ordered_json::array();
    for (auto v : w.values) values.push_back(label(v));
    j["values"] = std::move(values);
    if (w.condition == 3) j["count"] = w.count;
    witnesses.push_back(std::move(j));
  }
  out["witnesses"] = std::move(witnesses);
  out["evenness"] = to_string(r.evenness);
  out["s_bar"] = subset(r.s_bar);
  out["s_bar_authoritative"] = r.s_bar_authoritative;
  auto pairs = ordered_json::array();
  for (auto [s, t] : r.odd_pairs) pairs.push_back({s + 1, t + 1});
  out["odd_pairs"] = std::move(pairs);
  return out;
}

inline ordered_json spherical_report(const CoxeterMatrix& m) {
  const auto report = check_class_membership(m);
  ordered_json out;
  auto fam = ordered_json::array();
  for (const auto& t : report.maximal_spherical) {
    auto sub = induced_submatrix(m, t);
    ordered_json j;
    j["subset"] = subset(t);
    j["type"] = type_name(*classify_finite_type(sub));
    j["order"] = big(*coxeter_order(sub));
    fam.push_back(std::move(j));
  }
  out["maximal_spherical"] = std::move(fam);
  out["s_bar"] = subset(report.s_bar);
  auto indep = ordered_json::array();
  for (const auto& t : maximal_independent_subsets(m, report.s_bar)) indep.push_back(subset(t));
  out["maximal_independent"] = std::move(indep);
  return out;
}

inline ordered_json abelianization_report(const CoxeterMatrix& m,
                                          const std::vector<GeneratorSubset>& subsets) {
  const auto oc = odd_components(m);
  ordered_json out;
  out["k"] = oc.count;
  auto comps = ordered_json::array();
  for (const auto& c : oc.members()) {
    auto j = ordered_json::array();
    for (auto s : c) j.push_back(s + 1);
    comps.push_back(std::move(j));
  }
  out["components"] = std::move(comps);
  auto images = ordered_json::array();
  for (const auto& s : subsets) {
    ordered_json j;
    j["subset"] = subset(s);
    j["dim"] = pi_image(oc, s).dim();
    images.push_back(std::move(j));
  }
  out["images"] = std::move(images);
  return out;
}

inline ordered_json bijection(const DiagramBijection& psi) {
  auto out = ordered_json::array();
  for (std::size_t i = 0; i < psi.size(); ++i) out.push_back({i + 1, psi(i) + 1});
  return out;
}

inline ordered_json limits(const OracleLimits& l) {
  ordered_json out;
  out["max_order"] = l.max_order;
  out["max_gens"] = l.max_gens;
  out["max_cosets"] = l.max_cosets;
  out["max_subsets"] = l.max_subsets;
  return out;
}

inline ordered_json verdict(const RigidityVerdict& v) {
  ordered_json out;
  out["rigid"] = v.rigid;
  out["exhausted"] = v.exhausted;
  out["group_order"] = v.group_order;
  out["candidates"] = v.candidates.size();
  auto classes = ordered_json::array();
  for (std::size_t k = 0; k < v.classes.size(); ++k) {
    const auto& c = v.classes[k];
    ordered_json j;
    j["type"] = type_name(*classify_finite_type(c.matrix));
    j["matrix"] = matrix(c.matrix);
    auto reps = ordered_json::array();
    for (std::size_t g = 0; g < c.representative_generators.size(); ++g) {
      ordered_json r;
      r["element"] = c.representative_generators[g];
      auto word = ordered_json::array();
      for (auto s : v.representative_words[k][g]) word.push_back(s + 1);
      r["word"] = std::move(word);
      reps.push_back(std::move(r));
    }
    j["representative_generators"] = std::move(reps);
    j["members"] = c.members;
    classes.push_back(std::move(j));
  }
  out["classes"] = std::move(classes);
  out["limits"] = limits(v.limits);
  return out;
}

}  // namespace coxrig::json
