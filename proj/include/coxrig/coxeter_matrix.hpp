// Coxeter matrices, generator subsets and the block operations on them.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxrig {

/// Order of a product st: a positive integer or infinity.
///
/// Infinity is its own state, not a large integer; comparisons place it
/// above every finite value.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(std::uint32_t value) : value_(value) {}

  static constexpr Label infinity() {
    Label l;
    l.value_.reset();
    return l;
  }

  constexpr bool is_finite() const { return value_.has_value(); }
  constexpr bool is_infinite() const { return !value_.has_value(); }

  std::uint32_t value() const {
    if (!value_) throw std::logic_error("Label::value() on infinite label");
    return *value_;
  }

  constexpr bool is_odd() const { return value_ && (*value_ % 2 == 1); }
  constexpr bool is_even() const { return value_ && (*value_ % 2 == 0); }

  /// 2 or a positive multiple of 4.
  constexpr bool is_strong_even_value() const {
    return value_ && (*value_ == 2 || (*value_ % 4 == 0 && *value_ > 0));
  }

  std::string to_string() const {
    return value_ ? std::to_string(*value_) : std::string("inf");
  }

  friend constexpr bool operator==(const Label&, const Label&) = default;
  friend constexpr std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<std::uint32_t> value_{1};
};

inline constexpr Label kInfinity = Label::infinity();

/// Sorted set of distinct 0-based generator indices.
class GeneratorSubset {
 public:
  GeneratorSubset() = default;
  GeneratorSubset(std::initializer_list<std::size_t> indices)
      : GeneratorSubset(std::vector<std::size_t>(indices)) {}
  explicit GeneratorSubset(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
      throw std::invalid_argument("GeneratorSubset: repeated generator index");
    }
  }

  static GeneratorSubset full(std::size_t rank) {
    GeneratorSubset s;
    s.indices_.resize(rank);
    for (std::size_t i = 0; i < rank; ++i) s.indices_[i] = i;
    return s;
  }

  static GeneratorSubset from_mask(std::uint64_t mask) {
    GeneratorSubset s;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
      if (mask & 1U) s.indices_.push_back(i);
    }
    return s;
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (auto i : indices_) {
      if (i >= 64) throw std::out_of_range("GeneratorSubset::mask: index >= 64");
      m |= std::uint64_t{1} << i;
    }
    return m;
  }

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  std::size_t operator[](std::size_t k) const { return indices_[k]; }

  bool contains(std::size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
  }
  bool is_subset_of(const GeneratorSubset& other) const {
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                         indices_.end());
  }
  bool intersects(const GeneratorSubset& other) const {
    auto a = indices_.begin();
    auto b = other.indices_.begin();
    while (a != indices_.end() && b != other.indices_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  GeneratorSubset intersection(const GeneratorSubset& other) const {
    GeneratorSubset r;
    std::set_intersection(indices_.begin(), indices_.end(), other.indices_.begin(),
                          other.indices_.end(), std::back_inserter(r.indices_));
    return r;
  }
  GeneratorSubset united(const GeneratorSubset& other) const {
    GeneratorSubset r;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                   other.indices_.end(), std::back_inserter(r.indices_));
    return r;
  }
  GeneratorSubset minus(const GeneratorSubset& other) const {
    GeneratorSubset r;
    std::set_difference(indices_.begin(), indices_.end(), other.indices_.begin(),
                        other.indices_.end(), std::back_inserter(r.indices_));
    return r;
  }

  friend bool operator==(const GeneratorSubset&, const GeneratorSubset&) = default;
  friend auto operator<=>(const GeneratorSubset&, const GeneratorSubset&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Symmetric table of orders m(s,t) with 1 on the diagonal.
///
/// A freshly constructed matrix has every off-diagonal entry infinite.
/// Optional generator names are carried through I/O but take no part in
/// diagram comparisons.
class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(std::size_t rank) : rank_(rank), entries_(rank * rank, kInfinity) {
    if (rank == 0) throw std::invalid_argument("CoxeterMatrix: rank must be positive");
    for (std::size_t i = 0; i < rank; ++i) entries_[i * rank + i] = Label(1);
  }

  std::size_t rank() const { return rank_; }

  Label operator()(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    return entries_[i * rank_ + j];
  }

  /// Sets m(i,j) = m(j,i) = value; value must be >= 2 or infinite.
  void set(std::size_t i, std::size_t j, Label value) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("CoxeterMatrix::set: diagonal entries are fixed at 1");
    if (value.is_finite() && value.value() < 2) {
      throw std::invalid_argument("CoxeterMatrix::set: off-diagonal order must be >= 2 or inf");
    }
    entries_[i * rank_ + j] = value;
    entries_[j * rank_ + i] = value;
  }

  const std::optional<std::vector<std::string>>& names() const { return names_; }

  void set_names(std::vector<std::string> names) {
    if (names.size() != rank_) throw std::invalid_argument("CoxeterMatrix: name count != rank");
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("CoxeterMatrix: generator names must be distinct");
    }
    names_ = std::move(names);
  }
  void clear_names() { names_.reset(); }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  void check_index(std::size_t i) const {
    if (i >= rank_) throw std::out_of_range("CoxeterMatrix: generator index out of range");
  }

  std::size_t rank_;
  std::vector<Label> entries_;
  std::optional<std::vector<std::string>> names_;
};

inline void validate_subset(const CoxeterMatrix& m, const GeneratorSubset& subset) {
  if (!subset.empty() && subset.indices().back() >= m.rank()) {
    throw std::out_of_range("generator subset index exceeds matrix rank");
  }
}

/// Block-diagonal sum; every cross entry is 2 (the factors commute).
inline CoxeterMatrix direct_sum(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  const std::size_t n = a.rank();
  CoxeterMatrix r(n + b.rank());
  for (std::size_t i = 0; i < r.rank(); ++i) {
    for (std::size_t j = i + 1; j < r.rank(); ++j) {
      if (j < n) {
        r.set(i, j, a(i, j));
      } else if (i >= n) {
        r.set(i, j, b(i - n, j - n));
      } else {
        r.set(i, j, Label(2));
      }
    }
  }
  if (a.names() && b.names()) {
    auto names = *a.names();
    names.insert(names.end(), b.names()->begin(), b.names()->end());
    auto sorted = names;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
      r.set_names(std::move(names));
    }
  }
  return r;
}

/// Restriction of m to the given generators, in increasing index order.
inline CoxeterMatrix induced_submatrix(const CoxeterMatrix& m, const GeneratorSubset& subset) {
  validate_subset(m, subset);
  if (subset.empty()) throw std::invalid_argument("induced_submatrix: empty subset");
  CoxeterMatrix r(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      r.set(a, b, m(subset[a], subset[b]));
    }
  }
  if (m.names()) {
    std::vector<std::string> names;
    for (auto i : subset) names.push_back((*m.names())[i]);
    r.set_names(std::move(names));
  }
  return r;
}

}  // namespace coxrig
