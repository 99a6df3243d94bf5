// Finite (spherical) Coxeter systems: recognition against the classification
// list, group orders, and the maximal spherical / maximal independent families.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxrig/coxeter_matrix.hpp"

namespace coxrig {

using BigInt = boost::multiprecision::cpp_int;

enum class Family { A, B, D, E, F, H, I2 };

/// One irreducible finite Coxeter type. I2(3) and I2(4) never occur; they
/// are A2 and B2. I2(6) keeps its dihedral name.
struct FiniteTypeLabel {
  Family family;
  std::uint32_t parameter;  // rank, or the dihedral label for I2
  BigInt order;

  std::string name() const {
    switch (family) {
      case Family::A: return "A" + std::to_string(parameter);
      case Family::B: return "B" + std::to_string(parameter);
      case Family::D: return "D" + std::to_string(parameter);
      case Family::E: return "E" + std::to_string(parameter);
      case Family::F: return "F" + std::to_string(parameter);
      case Family::H: return "H" + std::to_string(parameter);
      case Family::I2: return "I2(" + std::to_string(parameter) + ")";
    }
    return "?";
  }

  std::size_t rank() const { return family == Family::I2 ? 2 : parameter; }

  friend bool operator==(const FiniteTypeLabel& a, const FiniteTypeLabel& b) {
    return a.family == b.family && a.parameter == b.parameter;
  }
  friend bool operator<(const FiniteTypeLabel& a, const FiniteTypeLabel& b) {
    return std::tie(a.family, a.parameter) < std::tie(b.family, b.parameter);
  }
};

namespace detail {

inline BigInt factorial(std::uint32_t n) {
  BigInt r = 1;
  for (std::uint32_t k = 2; k <= n; ++k) r *= k;
  return r;
}

inline FiniteTypeLabel make_label(Family f, std::uint32_t p) {
  BigInt order;
  switch (f) {
    case Family::A: order = factorial(p + 1); break;
    case Family::B: order = (BigInt(1) << p) * factorial(p); break;
    case Family::D: order = (BigInt(1) << (p - 1)) * factorial(p); break;
    case Family::E:
      order = p == 6 ? BigInt(51840) : p == 7 ? BigInt(2903040) : BigInt(696729600);
      break;
    case Family::F: order = 1152; break;
    case Family::H: order = p == 3 ? BigInt(120) : BigInt(14400); break;
    case Family::I2: order = BigInt(2) * p; break;
  }
  return {f, p, order};
}

// Recognizes one connected component of the m >= 3 graph (no infinite
// entries). `vertices` is sorted.
inline std::optional<FiniteTypeLabel> classify_component(const CoxeterMatrix& m,
                                                         const std::vector<std::size_t>& vertices) {
  const std::size_t n = vertices.size();
  if (n == 1) return make_label(Family::A, 1);
  if (n == 2) {
    auto l = m(vertices[0], vertices[1]).value();
    if (l == 3) return make_label(Family::A, 2);
    if (l == 4) return make_label(Family::B, 2);
    return make_label(Family::I2, l);
  }

  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (m(vertices[a], vertices[b]).value() >= 3) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edges;
      }
    }
  }
  if (edges != n - 1) return std::nullopt;  // connected, so a cycle exists

  auto label = [&](std::size_t a, std::size_t b) { return m(vertices[a], vertices[b]).value(); };
  std::size_t max_degree = 0;
  for (const auto& nb : adj) max_degree = std::max(max_degree, nb.size());

  if (max_degree <= 2) {
    std::size_t start = 0;
    while (adj[start].size() != 1) ++start;
    std::vector<std::uint32_t> labels;
    std::size_t prev = n, cur = start;
    while (true) {
      std::size_t next = n;
      for (auto x : adj[cur]) {
        if (x != prev) next = x;
      }
      if (next == n) break;
      labels.push_back(label(cur, next));
      prev = cur;
      cur = next;
    }
    std::size_t non3 = 0;
    for (auto l : labels) non3 += l != 3;
    const auto p = static_cast<std::uint32_t>(n);
    if (non3 == 0) return make_label(Family::A, p);
    const bool end_first = labels.front() != 3;
    const bool end_last = labels.back() != 3;
    if (non3 == 1 && (end_first || end_last)) {
      auto special = end_first ? labels.front() : labels.back();
      if (special == 4) return make_label(Family::B, p);
      if (special == 5 && (n == 3 || n == 4)) return make_label(Family::H, p);
      return std::nullopt;
    }
    if (n == 4 && labels[0] == 3 && labels[1] == 4 && labels[2] == 3) {
      return make_label(Family::F, 4);
    }
    return std::nullopt;
  }

  if (max_degree != 3) return std::nullopt;
  std::size_t branch = n;
  for (std::size_t a = 0; a < n; ++a) {
    if (adj[a].size() == 3) {
      if (branch != n) return std::nullopt;  // two branch points
      branch = a;
    }
    for (auto b : adj[a]) {
      if (label(a, b) != 3) return std::nullopt;
    }
  }
  std::vector<std::uint32_t> arms;
  for (auto first : adj[branch]) {
    std::uint32_t len = 1;
    std::size_t prev = branch, cur = first;
    while (adj[cur].size() == 2) {
      std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  const auto p = static_cast<std::uint32_t>(n);
  if (arms[0] == 1 && arms[1] == 1) return make_label(Family::D, p);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    return make_label(Family::E, p);
  }
  return std::nullopt;
}

}  // namespace detail

/// Connected components of the graph with an edge wherever m(s,t) >= 3
/// (infinite entries included), each sorted, ordered by smallest member.
inline std::vector<std::vector<std::size_t>> diagram_components(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<std::size_t>> result;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] != n) continue;
    std::vector<std::size_t> members{root};
    comp[root] = result.size();
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (std::size_t t = 0; t < n; ++t) {
        if (t == members[k] || comp[t] != n) continue;
        if (m(members[k], t) > Label(2)) {
          comp[t] = result.size();
          members.push_back(t);
        }
      }
    }
    std::sort(members.begin(), members.end());
    result.push_back(std::move(members));
  }
  return result;
}

/// Component types sorted by (family, parameter), or nullopt when the
/// group is infinite.
inline std::optional<std::vector<FiniteTypeLabel>> classify_finite_type(const CoxeterMatrix& m) {
  for (std::size_t s = 0; s < m.rank(); ++s) {
    for (std::size_t t = s + 1; t < m.rank(); ++t) {
      if (m(s, t).is_infinite()) return std::nullopt;
    }
  }
  std::vector<FiniteTypeLabel> labels;
  for (const auto& comp : diagram_components(m)) {
    auto l = detail::classify_component(m, comp);
    if (!l) return std::nullopt;
    labels.push_back(std::move(*l));
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

/// Group order, or nullopt for an infinite group.
inline std::optional<BigInt> coxeter_order(const CoxeterMatrix& m) {
  auto labels = classify_finite_type(m);
  if (!labels) return std::nullopt;
  BigInt order = 1;
  for (const auto& l : *labels) order *= l.order;
  return order;
}

/// "A1+A2"-style name of a finite type; empty list gives "trivial".
inline std::string type_name(const std::vector<FiniteTypeLabel>& labels) {
  if (labels.empty()) return "trivial";
  std::string r;
  for (const auto& l : labels) {
    if (!r.empty()) r += "+";
    r += l.name();
  }
  return r;
}

inline bool is_spherical(const CoxeterMatrix& m, const GeneratorSubset& subset) {
  validate_subset(m, subset);
  if (subset.empty()) return true;
  return classify_finite_type(induced_submatrix(m, subset)).has_value();
}

/// Pairwise incomparable subsets, sorted lexicographically.
using SphericalFamily = std::vector<GeneratorSubset>;

namespace detail {

// Maximal members of a downward-closed family of subsets of `universe`,
// where `admits(current, x)` decides whether current + {x} stays in the
// family given that current is in it.
template <class Admits>
SphericalFamily maximal_members(const std::vector<std::size_t>& universe, Admits admits) {
  SphericalFamily out;
  std::vector<std::size_t> current;
  auto visit = [&](auto&& self, std::size_t next_pos) -> void {
    bool maximal = true;
    for (std::size_t pos = 0; pos < universe.size(); ++pos) {
      const std::size_t x = universe[pos];
      if (std::find(current.begin(), current.end(), x) != current.end()) continue;
      if (!admits(current, x)) continue;
      maximal = false;
      if (pos >= next_pos) {
        current.push_back(x);
        self(self, pos + 1);
        current.pop_back();
      }
    }
    if (maximal) out.emplace_back(current);
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All inclusion-maximal spherical subsets. Exponential in the rank.
inline SphericalFamily maximal_spherical_subsets(const CoxeterMatrix& m) {
  std::vector<std::size_t> universe(m.rank());
  for (std::size_t i = 0; i < m.rank(); ++i) universe[i] = i;
  return detail::maximal_members(universe, [&](const std::vector<std::size_t>& cur, std::size_t x) {
    auto extended = cur;
    extended.push_back(x);
    return is_spherical(m, GeneratorSubset(std::move(extended)));
  });
}

/// Maximal subsets of `within` whose members pairwise commute (m = 2).
inline SphericalFamily maximal_independent_subsets(const CoxeterMatrix& m,
                                                   const GeneratorSubset& within) {
  validate_subset(m, within);
  return detail::maximal_members(within.indices(),
                                 [&](const std::vector<std::size_t>& cur, std::size_t x) {
                                   for (auto y : cur) {
                                     if (m(x, y) != Label(2)) return false;
                                   }
                                   return true;
                                 });
}

}  // namespace coxrig
