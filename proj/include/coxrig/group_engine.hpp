// Finite Coxeter groups realized as permutation groups on their own elements.
//
// todd_coxeter() enumerates the cosets of the trivial subgroup in
// < S | s^2, (st)^m(s,t) >. Every generator is an involution, so the coset
// table keeps one column per generator and every entry is paired with its
// inverse entry in the same column.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxrig/coxeter_matrix.hpp"

namespace coxrig {

inline constexpr std::size_t kDefaultMaxCosets = 100000;

class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("coset enumeration exceeded " + std::to_string(cap) +
                           " cosets (group infinite or cap too small)"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

using Element = std::uint32_t;

/// Sorted, deduplicated element indices.
using ElementSet = std::vector<Element>;

inline ElementSet make_element_set(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Regular permutation realization: element i is a coset of the trivial
/// subgroup, 0 is the identity, and gen_perm(s)[i] is i * s.
///
/// Elements are numbered breadth-first from the identity, trying generators
/// in index order, so each element has a canonical shortest word.
class RegularRealization {
 public:
  RegularRealization(std::vector<std::vector<Element>> gen_perms) : perms_(std::move(gen_perms)) {
    if (perms_.empty()) throw std::invalid_argument("RegularRealization: no generators");
    const std::size_t n = perms_[0].size();
    parent_.assign(n, 0);
    via_.assign(n, 0);
    length_.assign(n, 0);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::deque<Element> queue{0};
    while (!queue.empty()) {
      Element e = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < perms_.size(); ++s) {
        Element f = perms_[s][e];
        if (seen[f]) continue;
        seen[f] = true;
        parent_[f] = e;
        via_[f] = static_cast<std::uint32_t>(s);
        length_[f] = length_[e] + 1;
        queue.push_back(f);
      }
    }
  }

  std::size_t order() const { return perms_[0].size(); }
  std::size_t rank() const { return perms_.size(); }
  static constexpr Element identity() { return 0; }
  const std::vector<Element>& gen_perm(std::size_t s) const { return perms_.at(s); }

  /// Element represented by the generator s itself.
  Element generator(std::size_t s) const { return perms_.at(s)[identity()]; }

  /// Shortest word (0-based generator indices) for e, read left to right.
  std::vector<std::size_t> word(Element e) const {
    std::vector<std::size_t> w(length_.at(e));
    for (std::size_t k = w.size(); k > 0; --k) {
      w[k - 1] = via_[e];
      e = parent_[e];
    }
    return w;
  }

  Element multiply(Element g, Element h) const {
    for (auto s : word(h)) g = perms_[s][g];
    return g;
  }

  Element inverse(Element g) const {
    auto w = word(g);
    Element r = identity();
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = perms_[*it][r];
    return r;
  }

  Element conjugate(Element w, Element g) const { return multiply(multiply(w, g), inverse(w)); }

  /// One line per element: its images under each generator.
  void dump_table(std::ostream& out) const {
    for (std::size_t e = 0; e < order(); ++e) {
      out << e << ':';
      for (const auto& p : perms_) out << ' ' << p[e];
      out << '\n';
    }
  }

 private:
  std::vector<std::vector<Element>> perms_;
  std::vector<Element> parent_;
  std::vector<std::uint32_t> via_;
  std::vector<std::size_t> length_;
};

namespace detail {

// Coset table for HLT enumeration with coincidence handling.
class CosetTable {
 public:
  static constexpr Element kUndef = std::numeric_limits<Element>::max();

  CosetTable(std::size_t gens, std::size_t cap) : gens_(gens), cap_(cap) { new_coset(); }

  std::size_t allocated() const { return parent_.size(); }
  bool alive(Element c) const { return parent_[c] == c; }
  Element& at(Element c, std::size_t x) { return table_[c * gens_ + x]; }

  Element define(Element c, std::size_t x) {
    Element d = new_coset();
    at(c, x) = d;
    at(d, x) = c;
    return d;
  }

  // Applies relator w at coset c, defining new cosets where the scan stalls.
  void scan_and_fill(Element c, const std::vector<std::size_t>& w) {
    Element f = c, b = c;
    std::size_t i = 0, j = w.size();  // unscanned letters are w[i..j)
    while (true) {
      while (i < j && at(f, w[i]) != kUndef) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, w[j - 1]) != kUndef) b = at(b, w[--j]);
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, w[i]) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  void coincidence(Element a, Element b) {
    std::vector<Element> queue;
    merge(a, b, queue);
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const Element g = queue[k];
      for (std::size_t x = 0; x < gens_; ++x) {
        const Element d = at(g, x);
        if (d == kUndef) continue;
        if (at(d, x) == g) at(d, x) = kUndef;
        const Element mu = rep(g), nu = rep(d);
        if (at(mu, x) != kUndef) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, x) != kUndef) {
          merge(mu, at(nu, x), queue);
        } else {
          at(mu, x) = nu;
          at(nu, x) = mu;
        }
      }
    }
  }

  // Renumbers live cosets breadth-first from coset 0.
  std::vector<std::vector<Element>> compact() {
    std::vector<Element> index(allocated(), kUndef);
    std::vector<Element> order{0};
    index[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t x = 0; x < gens_; ++x) {
        Element d = at(order[k], x);
        if (d == kUndef) throw std::logic_error("coset table incomplete after enumeration");
        if (index[d] == kUndef) {
          index[d] = static_cast<Element>(order.size());
          order.push_back(d);
        }
      }
    }
    std::vector<std::vector<Element>> perms(gens_, std::vector<Element>(order.size()));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (std::size_t x = 0; x < gens_; ++x) perms[x][k] = index[at(order[k], x)];
    }
    return perms;
  }

 private:
  Element new_coset() {
    if (allocated() >= cap_) throw CapExceeded(cap_);
    const auto c = static_cast<Element>(allocated());
    parent_.push_back(c);
    table_.resize(table_.size() + gens_, kUndef);
    return c;
  }

  Element rep(Element c) {
    Element r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      Element next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(Element a, Element b, std::vector<Element>& queue) {
    Element x = rep(a), y = rep(b);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    parent_[y] = x;
    queue.push_back(y);
  }

  std::size_t gens_;
  std::size_t cap_;
  std::vector<Element> parent_;
  std::vector<Element> table_;
};

}  // namespace detail

/// Completes the coset table of the trivial subgroup, or throws CapExceeded
/// once more than max_cosets cosets have been defined.
inline RegularRealization todd_coxeter(const CoxeterMatrix& m,
                                       std::size_t max_cosets = kDefaultMaxCosets) {
  if (max_cosets == 0) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  const std::size_t n = m.rank();
  if (n > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("rank too large");

  std::vector<std::vector<std::size_t>> relators;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (m(s, t).is_infinite()) continue;
      std::vector<std::size_t> w;
      for (std::uint32_t k = 0; k < m(s, t).value(); ++k) {
        w.push_back(s);
        w.push_back(t);
      }
      relators.push_back(std::move(w));
    }
  }
  std::stable_sort(relators.begin(), relators.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  detail::CosetTable table(n, max_cosets);
  for (Element c = 0; c < table.allocated(); ++c) {
    for (const auto& r : relators) {
      if (!table.alive(c)) break;
      table.scan_and_fill(c, r);
    }
    for (std::size_t x = 0; x < n && table.alive(c); ++x) {
      if (table.at(c, x) == detail::CosetTable::kUndef) table.define(c, x);
    }
  }
  return RegularRealization(table.compact());
}

inline Element element_order(const RegularRealization& real, Element g) {
  Element x = g;
  Element n = 1;
  while (x != RegularRealization::identity()) {
    x = real.multiply(x, g);
    ++n;
  }
  return n;
}

inline ElementSet involutions(const RegularRealization& real) {
  ElementSet out;
  for (Element g = 1; g < real.order(); ++g) {
    if (real.multiply(g, g) == RegularRealization::identity()) out.push_back(g);
  }
  return out;
}

/// Subgroup generated by gens: breadth-first closure of the identity under
/// right multiplication.
inline ElementSet subgroup_closure(const RegularRealization& real, const ElementSet& gens) {
  std::vector<bool> seen(real.order(), false);
  std::vector<Element> members{RegularRealization::identity()};
  seen[0] = true;
  std::vector<std::vector<std::size_t>> words;
  for (auto g : gens) words.push_back(real.word(g));
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (const auto& w : words) {
      Element x = members[k];
      for (auto s : w) x = real.gen_perm(s)[x];
      if (!seen[x]) {
        seen[x] = true;
        members.push_back(x);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline bool is_generating(const RegularRealization& real, const ElementSet& gens) {
  return subgroup_closure(real, gens).size() == real.order();
}

/// Smallest w with w <h_gens> w^-1 = <k_gens>, if any.
inline std::optional<Element> subgroup_conjugate_witness(const RegularRealization& real,
                                                         const ElementSet& h_gens,
                                                         const ElementSet& k_gens) {
  const auto h = subgroup_closure(real, h_gens);
  const auto k = subgroup_closure(real, k_gens);
  if (h.size() != k.size()) return std::nullopt;
  std::vector<bool> in_k(real.order(), false);
  for (auto x : k) in_k[x] = true;
  for (Element w = 0; w < real.order(); ++w) {
    bool ok = true;
    for (auto g : h_gens) {
      if (!in_k[real.conjugate(w, g)]) {
        ok = false;
        break;
      }
    }
    if (ok) return w;
  }
  return std::nullopt;
}

/// [W,W]: the normal closure of the commutators (st)^2 of the generators.
inline ElementSet commutator_subgroup(const RegularRealization& real) {
  ElementSet gens;
  for (std::size_t s = 0; s < real.rank(); ++s) {
    for (std::size_t t = s + 1; t < real.rank(); ++t) {
      Element st = real.multiply(real.generator(s), real.generator(t));
      gens.push_back(real.multiply(st, st));
    }
  }
  gens = make_element_set(std::move(gens));
  auto closure = subgroup_closure(real, gens);
  while (true) {
    std::vector<bool> in(real.order(), false);
    for (auto x : closure) in[x] = true;
    ElementSet extra;
    for (std::size_t s = 0; s < real.rank(); ++s) {
      const Element g = real.generator(s);
      for (auto h : gens) {
        Element c = real.conjugate(g, h);
        if (!in[c]) extra.push_back(c);
      }
    }
    if (extra.empty()) return closure;
    gens.insert(gens.end(), extra.begin(), extra.end());
    gens = make_element_set(std::move(gens));
    closure = subgroup_closure(real, gens);
  }
}

}  // namespace coxrig
