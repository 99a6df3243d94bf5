// Subspaces of GF(2)^k in canonical reduced row echelon form.
#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace coxrig {

using GF2Vector = boost::dynamic_bitset<>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Subspace of GF(2)^ambient_dim. The basis is fully reduced with strictly
/// increasing pivots (pivot = lowest set coordinate), so two subspaces are
/// equal exactly when their bases are identical.
class GF2Subspace {
 public:
  explicit GF2Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

  /// Span of arbitrary vectors, each of size ambient_dim.
  static GF2Subspace span(std::size_t ambient_dim, std::vector<GF2Vector> vectors) {
    for (const auto& v : vectors) {
      if (v.size() != ambient_dim) throw DimensionMismatch("GF2Subspace::span: vector size");
    }
    GF2Subspace s(ambient_dim);
    s.basis_ = reduce(std::move(vectors));
    return s;
  }

  static GF2Subspace full(std::size_t ambient_dim) {
    std::vector<GF2Vector> unit;
    for (std::size_t i = 0; i < ambient_dim; ++i) unit.push_back(unit_vector(ambient_dim, i));
    return span(ambient_dim, std::move(unit));
  }

  static GF2Vector unit_vector(std::size_t dim, std::size_t i) {
    GF2Vector v(dim);
    v.set(i);
    return v;
  }

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<GF2Vector>& basis() const { return basis_; }

  bool contains(GF2Vector v) const {
    if (v.size() != ambient_dim_) throw DimensionMismatch("GF2Subspace::contains");
    for (const auto& row : basis_) {
      if (v.test(row.find_first())) v ^= row;
    }
    return v.none();
  }

  bool is_subspace_of(const GF2Subspace& other) const {
    require_same_ambient(other);
    return std::all_of(basis_.begin(), basis_.end(),
                       [&](const GF2Vector& v) { return other.contains(v); });
  }

  GF2Subspace sum(const GF2Subspace& other) const {
    require_same_ambient(other);
    auto rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_dim_, std::move(rows));
  }

  /// Zassenhaus: reduce [u | u] (u in this) over [w | 0] (w in other); the
  /// rows whose left half vanishes carry a basis of the intersection.
  GF2Subspace intersection(const GF2Subspace& other) const {
    require_same_ambient(other);
    const std::size_t k = ambient_dim_;
    std::vector<GF2Vector> rows;
    for (const auto& u : basis_) {
      GF2Vector r(2 * k);
      for (std::size_t i = 0; i < k; ++i) {
        if (u.test(i)) {
          r.set(i);
          r.set(k + i);
        }
      }
      rows.push_back(std::move(r));
    }
    for (const auto& w : other.basis_) {
      GF2Vector r(2 * k);
      for (std::size_t i = 0; i < k; ++i) {
        if (w.test(i)) r.set(i);
      }
      rows.push_back(std::move(r));
    }
    std::vector<GF2Vector> meet;
    for (const auto& r : reduce(std::move(rows))) {
      if (r.find_first() < k) continue;
      GF2Vector v(k);
      for (std::size_t i = 0; i < k; ++i) {
        if (r.test(k + i)) v.set(i);
      }
      meet.push_back(std::move(v));
    }
    return span(k, std::move(meet));
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t r = 0; r < basis_.size(); ++r) {
      if (r) s += ",";
      for (std::size_t i = 0; i < ambient_dim_; ++i) s += basis_[r].test(i) ? '1' : '0';
    }
    return s + "}";
  }

  friend bool operator==(const GF2Subspace& a, const GF2Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  void require_same_ambient(const GF2Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) {
      throw DimensionMismatch("GF2Subspace: ambient dimensions " + std::to_string(ambient_dim_) +
                              " and " + std::to_string(other.ambient_dim_));
    }
  }

  static std::vector<GF2Vector> reduce(std::vector<GF2Vector> rows) {
    std::vector<GF2Vector> basis;
    for (auto& v : rows) {
      for (const auto& b : basis) {
        if (v.test(b.find_first())) v ^= b;
      }
      if (v.none()) continue;
      const auto pivot = v.find_first();
      for (auto& b : basis) {
        if (b.test(pivot)) b ^= v;
      }
      basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(), [](const GF2Vector& a, const GF2Vector& b) {
      return a.find_first() < b.find_first();
    });
    return basis;
  }

  std::size_t ambient_dim_;
  std::vector<GF2Vector> basis_;
};

inline std::size_t subspace_dim(const GF2Subspace& a) { return a.dim(); }

inline bool subspace_equal(const GF2Subspace& a, const GF2Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace_equal");
  return a == b;
}

inline GF2Subspace subspace_intersection(const GF2Subspace& a, const GF2Subspace& b) {
  return a.intersection(b);
}

}  // namespace coxrig
