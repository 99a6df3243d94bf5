// Label-preserving bijections between the generator sets of two Coxeter matrices.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "coxrig/coxeter_matrix.hpp"

namespace coxrig {

/// Total injective map from generators of one matrix to those of another.
class DiagramBijection {
 public:
  DiagramBijection() = default;
  explicit DiagramBijection(std::vector<std::size_t> map) : map_(std::move(map)) {
    auto sorted = map_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i) throw std::invalid_argument("DiagramBijection: not a permutation");
    }
  }

  static DiagramBijection identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return DiagramBijection(std::move(m));
  }

  std::size_t size() const { return map_.size(); }
  std::size_t operator()(std::size_t i) const { return map_.at(i); }
  const std::vector<std::size_t>& map() const { return map_; }

  DiagramBijection inverse() const {
    std::vector<std::size_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
    return DiagramBijection(std::move(inv));
  }

  friend bool operator==(const DiagramBijection&, const DiagramBijection&) = default;

 private:
  std::vector<std::size_t> map_;
};

/// True iff m1(s,t) == m2(psi(s),psi(t)) for every pair, infinity included.
inline bool preserves_labels(const CoxeterMatrix& m1, const CoxeterMatrix& m2,
                             const DiagramBijection& psi) {
  if (m1.rank() != m2.rank() || psi.size() != m1.rank()) return false;
  for (std::size_t s = 0; s < m1.rank(); ++s) {
    for (std::size_t t = s + 1; t < m1.rank(); ++t) {
      if (m1(s, t) != m2(psi(s), psi(t))) return false;
    }
  }
  return true;
}

namespace detail {

// (degree in the m >= 3 graph, sorted incident finite labels, number of
// infinite entries); infinite edges count towards the degree.
struct VertexInvariant {
  std::size_t degree = 0;
  std::vector<Label> finite_labels;
  std::size_t infinite_count = 0;

  friend bool operator==(const VertexInvariant&, const VertexInvariant&) = default;
  friend auto operator<=>(const VertexInvariant& a, const VertexInvariant& b) {
    return std::tie(a.degree, a.finite_labels, a.infinite_count) <=>
           std::tie(b.degree, b.finite_labels, b.infinite_count);
  }
};

inline std::vector<VertexInvariant> vertex_invariants(const CoxeterMatrix& m) {
  std::vector<VertexInvariant> inv(m.rank());
  for (std::size_t s = 0; s < m.rank(); ++s) {
    for (std::size_t t = 0; t < m.rank(); ++t) {
      if (s == t) continue;
      Label l = m(s, t);
      if (l.is_infinite()) {
        ++inv[s].infinite_count;
        ++inv[s].degree;
      } else {
        inv[s].finite_labels.push_back(l);
        if (l.value() >= 3) ++inv[s].degree;
      }
    }
    std::sort(inv[s].finite_labels.begin(), inv[s].finite_labels.end());
  }
  return inv;
}

}  // namespace detail

/// First label-preserving bijection m1 -> m2 in the search order, if any.
///
/// Vertices of m1 are visited in increasing (invariant, index) order and
/// each is tried against the unused vertices of m2 with the same invariant,
/// in increasing index order.
inline std::optional<DiagramBijection> diagram_isomorphic(const CoxeterMatrix& m1,
                                                          const CoxeterMatrix& m2) {
  const std::size_t n = m1.rank();
  if (n != m2.rank()) return std::nullopt;

  auto inv1 = detail::vertex_invariants(m1);
  auto inv2 = detail::vertex_invariants(m2);
  {
    auto a = inv1, b = inv2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return inv1[a] < inv1[b]; });

  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const std::size_t s = order[depth];
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || inv2[t] != inv1[s]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t u = order[d];
        ok = m1(s, u) == m2(t, image[u]);
      }
      if (!ok) continue;
      image[s] = t;
      used[t] = true;
      if (self(self, depth + 1)) return true;
      used[t] = false;
    }
    image[s] = n;
    return false;
  };

  if (!extend(extend, 0)) return std::nullopt;
  return DiagramBijection(std::move(image));
}

}  // namespace coxrig
