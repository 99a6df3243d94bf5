// Shared fixtures: the matrix corpus and seeded random matrices.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "coxrig/coxeter_matrix.hpp"
#include "coxrig/presets.hpp"

namespace coxrig::testing {

/// Finite presets used across suites.
inline const std::vector<std::string>& finite_corpus_names() {
  static const std::vector<std::string> names = {
      "A1",      "A2",      "A3",       "A4",       "B2",       "B3",          "B4",
      "D4",      "H3",      "F4",       "I2(5)",    "I2(6)",    "I2(7)",       "I2(8)",
      "I2(9)",   "I2(10)",  "I2(11)",   "I2(12)",   "A1+A1",    "A1+A2",       "A1+A1+A1",
      "A1+B2",   "A1+I2(5)", "A2+A2",   "A1+B3",    "A2+B2",    "A1+A1+A1+A1", "A1+I2(8)",
      "B2+B2",   "I2(5)+I2(6)", "A1+H3", "A3+A3",   "A1+A1+B2", "I2(12)+A1"};
  return names;
}

inline CoxeterMatrix from_labels(std::size_t rank, const std::vector<Label>& upper) {
  CoxeterMatrix m(rank);
  std::size_t k = 0;
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = i + 1; j < rank; ++j) m.set(i, j, upper.at(k++));
  }
  return m;
}

/// Hand-made matrices, finite and infinite.
inline std::vector<CoxeterMatrix> mixed_corpus() {
  std::vector<CoxeterMatrix> out;
  for (const auto& n : finite_corpus_names()) out.push_back(preset(n));
  const auto inf = kInfinity;
  out.push_back(from_labels(3, {Label(5), Label(4), inf}));           // rank-3 class example
  out.push_back(from_labels(3, {Label(5), Label(4), Label(2)}));      // path 5,4: infinite
  out.push_back(from_labels(3, {inf, inf, inf}));                     // free product
  out.push_back(from_labels(3, {Label(3), Label(3), Label(3)}));      // affine A2
  out.push_back(from_labels(4, {Label(4), Label(2), inf, Label(2), Label(3), Label(8)}));
  out.push_back(from_labels(4, {Label(3), inf, inf, inf, inf, Label(4)}));
  out.push_back(from_labels(5, {Label(4), Label(2), Label(2), inf, Label(2), inf, inf, Label(7),
                                inf, inf}));
  return out;
}

/// Random matrix of the given rank over the label alphabet, seeded.
class MatrixGenerator {
 public:
  explicit MatrixGenerator(std::uint32_t seed, std::vector<Label> alphabet = default_alphabet())
      : rng_(seed), alphabet_(std::move(alphabet)) {}

  static std::vector<Label> default_alphabet() {
    return {Label(2), Label(3), Label(4), Label(5), Label(6), Label(8), kInfinity};
  }

  CoxeterMatrix operator()(std::size_t rank) {
    std::uniform_int_distribution<std::size_t> pick(0, alphabet_.size() - 1);
    CoxeterMatrix m(rank);
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = i + 1; j < rank; ++j) m.set(i, j, alphabet_[pick(rng_)]);
    }
    return m;
  }

  /// Same diagram with indices permuted at random; returns the permutation too.
  std::pair<CoxeterMatrix, std::vector<std::size_t>> relabel(const CoxeterMatrix& m) {
    std::vector<std::size_t> perm(m.rank());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng_);
    CoxeterMatrix r(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) {
      for (std::size_t j = i + 1; j < m.rank(); ++j) r.set(perm[i], perm[j], m(i, j));
    }
    return {r, perm};
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<Label> alphabet_;
};

}  // namespace coxrig::testing
