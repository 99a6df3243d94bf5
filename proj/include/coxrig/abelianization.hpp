// Symbolic abelianization of a Coxeter group.
//
// W^ab is elementary abelian of rank k, where k counts the connected
// components of the odd graph (edge s-t iff m(s,t) is odd): s and t have
// the same image exactly when they are joined by a path of odd entries.
// The image of a parabolic subgroup W_A is therefore spanned by the unit
// vectors of the components met by A.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "coxrig/coxeter_matrix.hpp"
#include "coxrig/gf2_subspace.hpp"

namespace coxrig {

struct OddComponents {
  /// Component id per generator; ids are numbered by smallest member.
  std::vector<std::size_t> component_of;
  std::size_t count = 0;

  std::vector<std::vector<std::size_t>> members() const {
    std::vector<std::vector<std::size_t>> out(count);
    for (std::size_t s = 0; s < component_of.size(); ++s) out[component_of[s]].push_back(s);
    return out;
  }
};

inline OddComponents odd_components(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (!m(s, t).is_odd()) continue;
      auto a = find(s), b = find(t);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OddComponents oc;
  oc.component_of.assign(n, n);
  std::vector<std::size_t> id_of_root(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    auto r = find(s);
    if (id_of_root[r] == n) id_of_root[r] = oc.count++;
    oc.component_of[s] = id_of_root[r];
  }
  return oc;
}

/// pi(W_A) inside GF(2)^k.
inline GF2Subspace pi_image(const OddComponents& oc, const GeneratorSubset& subset) {
  std::vector<GF2Vector> gens;
  for (auto a : subset) gens.push_back(GF2Subspace::unit_vector(oc.count, oc.component_of.at(a)));
  return GF2Subspace::span(oc.count, std::move(gens));
}

inline GF2Subspace pi_image(const CoxeterMatrix& m, const GeneratorSubset& subset) {
  validate_subset(m, subset);
  return pi_image(odd_components(m), subset);
}

/// True iff distinct members of s_bar lie in distinct odd components, in
/// which case pi(W_A) = pi(W_B) forces A = B for all A, B within s_bar.
inline bool core_images_separated(const CoxeterMatrix& m, const GeneratorSubset& s_bar) {
  validate_subset(m, s_bar);
  auto oc = odd_components(m);
  std::vector<bool> hit(oc.count, false);
  for (auto s : s_bar) {
    if (hit[oc.component_of[s]]) return false;
    hit[oc.component_of[s]] = true;
  }
  return true;
}

}  // namespace coxrig
