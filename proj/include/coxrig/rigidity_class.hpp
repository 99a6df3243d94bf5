// Membership test for the rigid class cut out by conditions (0)-(3):
//
//   (0) every even m(s,t) lies in {2} u 4N;
//   (1) every pair {s,t} with m(s,t) odd is a maximal spherical subset;
//   (2) no generator is the middle point t of two odd entries m(s,t), m(t,u);
//   (3) for every odd pair {s,t}, at most two maximal spherical subsets meet {s,t}.
//
// Infinite entries are neither odd nor subject to (0), and count as even for
// the even / strong-even classification.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxrig/coxeter_matrix.hpp"
#include "coxrig/finite_type.hpp"

namespace coxrig {

enum class Evenness { StrongEven, EvenNotStrong, NotEven };

inline std::string to_string(Evenness e) {
  switch (e) {
    case Evenness::StrongEven: return "strong-even";
    case Evenness::EvenNotStrong: return "even-not-strong";
    case Evenness::NotEven: return "not-even";
  }
  return "?";
}

/// Lexicographically first violation of one condition.
///
/// (0): generators {s,t}, values {m(s,t)}.
/// (1): generators {s,t}, values {m(s,t)}.
/// (2): generators {s,t,u} with t the middle point, values {m(s,t), m(t,u)}.
/// (3): generators {s,t}, values {m(s,t)}, count = number of meeting members.
struct ConditionWitness {
  int condition = 0;
  std::vector<std::size_t> generators;
  std::vector<Label> values;
  std::size_t count = 0;
};

struct ClassReport {
  bool in_class = false;
  std::array<bool, 4> conditions{};
  std::vector<ConditionWitness> witnesses;
  Evenness evenness = Evenness::NotEven;
  /// Union of maximal spherical subsets with strong-even induced system.
  /// Computed for every input; only meaningful when in_class holds.
  GeneratorSubset s_bar;
  bool s_bar_authoritative = false;
  std::vector<std::pair<std::size_t, std::size_t>> odd_pairs;
  SphericalFamily maximal_spherical;
};

inline Evenness classify_evenness(const CoxeterMatrix& m) {
  bool even = true, strong = true;
  for (std::size_t s = 0; s < m.rank(); ++s) {
    for (std::size_t t = s + 1; t < m.rank(); ++t) {
      Label l = m(s, t);
      if (l.is_infinite()) continue;
      if (l.is_odd()) even = false;
      if (!l.is_strong_even_value()) strong = false;
    }
  }
  if (strong) return Evenness::StrongEven;
  return even ? Evenness::EvenNotStrong : Evenness::NotEven;
}

inline std::vector<std::pair<std::size_t, std::size_t>> odd_pairs(const CoxeterMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> r;
  for (std::size_t s = 0; s < m.rank(); ++s) {
    for (std::size_t t = s + 1; t < m.rank(); ++t) {
      if (m(s, t).is_odd()) r.emplace_back(s, t);
    }
  }
  return r;
}

inline GeneratorSubset strong_even_core(const CoxeterMatrix& m, const SphericalFamily& maximal) {
  GeneratorSubset core;
  for (const auto& t : maximal) {
    if (classify_evenness(induced_submatrix(m, t)) == Evenness::StrongEven) core = core.united(t);
  }
  return core;
}

inline ClassReport check_class_membership(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  ClassReport r;
  r.maximal_spherical = maximal_spherical_subsets(m);
  r.odd_pairs = odd_pairs(m);
  r.evenness = classify_evenness(m);
  r.s_bar = strong_even_core(m, r.maximal_spherical);

  std::optional<ConditionWitness> w0, w1, w2, w3;
  for (std::size_t s = 0; s < n && !w0; ++s) {
    for (std::size_t t = s + 1; t < n && !w0; ++t) {
      Label l = m(s, t);
      if (l.is_even() && !l.is_strong_even_value()) w0 = ConditionWitness{0, {s, t}, {l}, 0};
    }
  }

  for (auto [s, t] : r.odd_pairs) {
    const GeneratorSubset pair{s, t};
    if (!w1 && std::find(r.maximal_spherical.begin(), r.maximal_spherical.end(), pair) ==
                   r.maximal_spherical.end()) {
      w1 = ConditionWitness{1, {s, t}, {m(s, t)}, 0};
    }
    if (!w3) {
      std::size_t meeting = 0;
      for (const auto& a : r.maximal_spherical) meeting += a.intersects(pair);
      if (meeting > 2) w3 = ConditionWitness{3, {s, t}, {m(s, t)}, meeting};
    }
  }

  // Triples ordered by (s, t, u) with s < u and t the middle point.
  for (std::size_t s = 0; s < n && !w2; ++s) {
    for (std::size_t t = 0; t < n && !w2; ++t) {
      if (t == s || !m(s, t).is_odd()) continue;
      for (std::size_t u = s + 1; u < n; ++u) {
        if (u != t && m(t, u).is_odd()) {
          w2 = ConditionWitness{2, {s, t, u}, {m(s, t), m(t, u)}, 0};
          break;
        }
      }
    }
  }

  r.conditions = {!w0, !w1, !w2, !w3};
  for (auto* w : {&w0, &w1, &w2, &w3}) {
    if (*w) r.witnesses.push_back(**w);
  }
  r.in_class = r.witnesses.empty();
  r.s_bar_authoritative = r.in_class;
  return r;
}

/// Raised when the odd-partner structure of an in-class system fails;
/// this cannot happen for a correct class check.
class StructureViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// For each generator outside the strong-even core, its unique odd partner.
/// Also confirms m(s,u) = inf for every other u.
inline std::map<std::size_t, std::size_t> odd_partner_structure(const CoxeterMatrix& m,
                                                                const ClassReport& report) {
  if (!report.in_class) {
    throw std::invalid_argument("odd_partner_structure: system is not in the class");
  }
  std::map<std::size_t, std::size_t> partner;
  for (std::size_t s = 0; s < m.rank(); ++s) {
    if (report.s_bar.contains(s)) continue;
    std::vector<std::size_t> odd;
    for (std::size_t t = 0; t < m.rank(); ++t) {
      if (t != s && m(s, t).is_odd()) odd.push_back(t);
    }
    if (odd.size() != 1) {
      std::ostringstream msg;
      msg << "generator " << s + 1 << " outside the strong-even core has " << odd.size()
          << " odd partners";
      throw StructureViolation(msg.str());
    }
    for (std::size_t u = 0; u < m.rank(); ++u) {
      if (u == s || u == odd[0]) continue;
      if (m(s, u).is_finite()) {
        std::ostringstream msg;
        msg << "generator " << s + 1 << " with odd partner " << odd[0] + 1 << " has finite m("
            << s + 1 << "," << u + 1 << ") = " << m(s, u).to_string();
        throw StructureViolation(msg.str());
      }
    }
    partner.emplace(s, odd[0]);
  }
  return partner;
}

}  // namespace coxrig
