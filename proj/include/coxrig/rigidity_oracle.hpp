// Brute-force rigidity check for small finite Coxeter groups.
//
// All Coxeter generating sets of one realized group are enumerated and
// bucketed by diagram isomorphism; the group is rigid when one bucket
// remains. Two certified generating sets of the same group also feed the
// bijection construction of construct_psi(), with the ambient isomorphism
// taken to be the identity of the shared realization.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coxrig/coxeter_matrix.hpp"
#include "coxrig/diagram_isomorphism.hpp"
#include "coxrig/finite_type.hpp"
#include "coxrig/group_engine.hpp"
#include "coxrig/matrix_io.hpp"
#include "coxrig/rigidity_class.hpp"

namespace coxrig {

struct OracleLimits {
  std::size_t max_order = 200;
  std::size_t max_gens = 6;
  std::size_t max_cosets = kDefaultMaxCosets;
  /// Search-tree nodes (candidate subsets) examined before giving up.
  std::size_t max_subsets = 5'000'000;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InfiniteGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contradiction with the structure theory of the class; only an
/// implementation bug can raise it. The message carries the full state.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Generating set of involutions; matrix(i,j) is the order of g_i g_j.
struct CandidateSystem {
  ElementSet generators;
  CoxeterMatrix matrix;
  bool certified = false;
};

namespace detail {

inline CoxeterMatrix product_orders(const RegularRealization& real, const ElementSet& gens) {
  CoxeterMatrix m(gens.size());
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      m.set(a, b, Label(element_order(real, real.multiply(gens[a], gens[b]))));
    }
  }
  return m;
}

inline ElementSet subset_elements(const CandidateSystem& sys, const GeneratorSubset& subset) {
  ElementSet out;
  for (auto i : subset) out.push_back(sys.generators.at(i));
  return make_element_set(std::move(out));
}

inline std::string describe(const CandidateSystem& sys) {
  std::ostringstream out;
  out << "generators {";
  for (std::size_t i = 0; i < sys.generators.size(); ++i) out << (i ? "," : "") << sys.generators[i];
  out << "}\n" << serialize(sys.matrix);
  return out.str();
}

}  // namespace detail

/// The defining generators of the realization as a candidate system.
inline CandidateSystem standard_system(const RegularRealization& real) {
  std::vector<Element> gens;
  for (std::size_t s = 0; s < real.rank(); ++s) gens.push_back(real.generator(s));
  if (!std::is_sorted(gens.begin(), gens.end())) {
    throw std::logic_error("standard_system: generators not numbered in index order");
  }
  CandidateSystem sys{gens, detail::product_orders(real, gens), true};
  return sys;
}

/// Matrix of (W, gens) when it is a Coxeter system.
///
/// The Coxeter group on the product-order matrix surjects onto <gens>; when
/// gens generate W and that group is finite of order |W|, the surjection is
/// an isomorphism. An infinite matrix can never match a finite W.
inline std::optional<CoxeterMatrix> certify_coxeter_system(const RegularRealization& real,
                                                           const ElementSet& gens) {
  if (gens.empty()) return std::nullopt;
  for (auto g : gens) {
    if (g == RegularRealization::identity() ||
        real.multiply(g, g) != RegularRealization::identity()) {
      return std::nullopt;
    }
  }
  if (!is_generating(real, gens)) return std::nullopt;
  auto m = detail::product_orders(real, gens);
  auto order = coxeter_order(m);
  if (!order || *order != real.order()) return std::nullopt;
  return m;
}

struct CandidateSearch {
  std::vector<CandidateSystem> candidates;
  /// False when max_gens cut off a branch that could still have grown.
  bool exhausted = true;
  std::size_t subsets_examined = 0;
};

/// Every Coxeter generating set of size <= max_gens, ordered by (size, elements).
///
/// The search grows sets of involutions in increasing element order and only
/// adds an involution outside the subgroup generated so far. No Coxeter
/// generating set is lost: s never lies in the parabolic subgroup of the
/// other generators, and a proper subset of S never generates W (its image
/// in the quotient killing all other generators misses s). Sets that
/// already generate W are therefore not extended.
inline CandidateSearch enumerate_coxeter_generating_sets(const RegularRealization& real,
                                                         const CoxeterMatrix& base,
                                                         const OracleLimits& limits) {
  if (real.order() > limits.max_order) {
    throw LimitExceeded("group order " + std::to_string(real.order()) + " exceeds max_order " +
                        std::to_string(limits.max_order));
  }
  if (auto o = coxeter_order(base); !o || *o != real.order()) {
    throw std::invalid_argument("enumerate_coxeter_generating_sets: base matrix does not match "
                                "the realization");
  }
  const ElementSet inv = involutions(real);
  CandidateSearch result;
  std::vector<Element> chosen;

  auto grow = [&](auto&& self, const ElementSet& closure, std::size_t start) -> void {
    std::vector<bool> in_closure(real.order(), false);
    for (auto x : closure) in_closure[x] = true;
    for (std::size_t idx = start; idx < inv.size(); ++idx) {
      if (in_closure[inv[idx]]) continue;
      if (++result.subsets_examined > limits.max_subsets) {
        throw LimitExceeded("candidate search exceeded max_subsets " +
                            std::to_string(limits.max_subsets));
      }
      chosen.push_back(inv[idx]);
      auto next = subgroup_closure(real, chosen);
      if (next.size() == real.order()) {
        if (auto m = certify_coxeter_system(real, chosen)) {
          result.candidates.push_back({chosen, std::move(*m), true});
        }
      } else if (chosen.size() < limits.max_gens) {
        self(self, next, idx + 1);
      } else {
        result.exhausted = false;
      }
      chosen.pop_back();
    }
  };
  grow(grow, ElementSet{RegularRealization::identity()}, 0);

  std::stable_sort(result.candidates.begin(), result.candidates.end(),
                   [](const CandidateSystem& a, const CandidateSystem& b) {
                     if (a.generators.size() != b.generators.size()) {
                       return a.generators.size() < b.generators.size();
                     }
                     return a.generators < b.generators;
                   });
  return result;
}

/// One diagram-isomorphism class of Coxeter generating sets.
struct DiagramClass {
  CoxeterMatrix matrix;
  ElementSet representative_generators;
  std::size_t members = 0;
};

struct RigidityVerdict {
  CoxeterMatrix base_matrix;
  OracleLimits limits;
  std::size_t group_order = 0;
  /// The base system's class comes first.
  std::vector<DiagramClass> classes;
  std::vector<CandidateSystem> candidates;
  bool exhausted = false;
  /// Exactly one class and the search was exhaustive.
  bool rigid = false;
  /// Element words for the representatives, in the base generators.
  std::vector<std::vector<std::vector<std::size_t>>> representative_words;
};

/// Group the candidates by diagram isomorphism, base class first.
inline std::vector<DiagramClass> bucket_by_diagram(const CandidateSystem& base,
                                                   const std::vector<CandidateSystem>& candidates) {
  std::vector<DiagramClass> classes{{base.matrix, base.generators, 0}};
  for (const auto& c : candidates) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const DiagramClass& k) {
      return diagram_isomorphic(k.matrix, c.matrix).has_value();
    });
    if (it == classes.end()) {
      classes.push_back({c.matrix, c.generators, 1});
    } else {
      ++it->members;
    }
  }
  return classes;
}

inline RigidityVerdict rigidity_verdict(const CoxeterMatrix& matrix, const OracleLimits& limits) {
  auto order = coxeter_order(matrix);
  if (!order) throw InfiniteGroup("rigidity_verdict: the Coxeter group is infinite");
  if (*order > limits.max_order) {
    throw LimitExceeded("group order " + order->str() + " exceeds max_order " +
                        std::to_string(limits.max_order));
  }
  const auto real = todd_coxeter(matrix, limits.max_cosets);
  auto search = enumerate_coxeter_generating_sets(real, matrix, limits);

  RigidityVerdict v{matrix, limits, real.order(), {}, {}, search.exhausted, false, {}};
  auto base = standard_system(real);
  v.classes = bucket_by_diagram(base, search.candidates);
  v.candidates = std::move(search.candidates);
  v.rigid = v.exhausted && v.classes.size() == 1;
  for (const auto& k : v.classes) {
    std::vector<std::vector<std::size_t>> words;
    for (auto g : k.representative_generators) words.push_back(real.word(g));
    v.representative_words.push_back(std::move(words));
  }
  return v;
}

/// A maximal spherical subset of one system, its partner in the other and a
/// conjugator w with w W_T w^-1 = W'_T'.
struct SphericalMatch {
  GeneratorSubset source;
  GeneratorSubset target;
  Element conjugator;
};

/// Pairs every maximal spherical subset of sysA with the unique maximal
/// spherical subset of sysB whose parabolic subgroup is conjugate to it.
inline std::vector<SphericalMatch> match_maximal_sphericals(const RegularRealization& real,
                                                            const CandidateSystem& sysA,
                                                            const CandidateSystem& sysB) {
  const auto fam_a = maximal_spherical_subsets(sysA.matrix);
  const auto fam_b = maximal_spherical_subsets(sysB.matrix);
  std::vector<SphericalMatch> out;
  for (const auto& t : fam_a) {
    const auto h = detail::subset_elements(sysA, t);
    std::vector<SphericalMatch> hits;
    for (const auto& tp : fam_b) {
      if (auto w = subgroup_conjugate_witness(real, h, detail::subset_elements(sysB, tp))) {
        hits.push_back({t, tp, *w});
      }
    }
    if (hits.size() != 1) {
      std::ostringstream msg;
      msg << "maximal spherical subset matching found " << hits.size()
          << " partners\nsystem A: " << detail::describe(sysA)
          << "\nsystem B: " << detail::describe(sysB) << "\nparabolic elements:";
      for (auto x : subgroup_closure(real, h)) msg << ' ' << x;
      for (const auto& tp : fam_b) {
        msg << "\ncandidate partner parabolic:";
        for (auto x : subgroup_closure(real, detail::subset_elements(sysB, tp))) msg << ' ' << x;
      }
      throw InternalInconsistency(msg.str());
    }
    out.push_back(hits.front());
  }
  return out;
}

/// W / [W,W] for a realized group: every element labelled by its coset.
class ConcreteAbelianization {
 public:
  explicit ConcreteAbelianization(const RegularRealization& real)
      : real_(&real), commutator_(commutator_subgroup(real)), coset_of_(real.order(), kNone) {
    for (Element g = 0; g < real.order(); ++g) {
      if (coset_of_[g] != kNone) continue;
      for (auto c : commutator_) coset_of_[real.multiply(g, c)] = quotient_order_;
      ++quotient_order_;
    }
  }

  const ElementSet& commutator() const { return commutator_; }
  std::size_t quotient_order() const { return quotient_order_; }
  std::size_t coset_of(Element g) const { return coset_of_.at(g); }

  /// Image of <gens> in W^ab as a sorted set of coset labels.
  std::vector<std::size_t> image(const ElementSet& gens) const {
    std::vector<std::size_t> out;
    for (auto x : subgroup_closure(*real_, gens)) out.push_back(coset_of_[x]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  const RegularRealization* real_;
  ElementSet commutator_;
  std::vector<std::size_t> coset_of_;
  std::size_t quotient_order_ = 0;
};

/// A tau A' : W_A and W'_A' have the same image in the abelianization of the
/// shared group.
inline bool tau_relation(const ConcreteAbelianization& ab, const CandidateSystem& sysA,
                         const GeneratorSubset& a, const CandidateSystem& sysB,
                         const GeneratorSubset& a_prime) {
  return ab.image(detail::subset_elements(sysA, a)) ==
         ab.image(detail::subset_elements(sysB, a_prime));
}

inline bool tau_relation(const RegularRealization& real, const CandidateSystem& sysA,
                         const GeneratorSubset& a, const CandidateSystem& sysB,
                         const GeneratorSubset& a_prime) {
  return tau_relation(ConcreteAbelianization(real), sysA, a, sysB, a_prime);
}

inline bool are_conjugate_elements(const RegularRealization& real, Element g, Element h) {
  for (Element w = 0; w < real.order(); ++w) {
    if (real.conjugate(w, g) == h) return true;
  }
  return false;
}

/// Bijection S -> S' preserving all labels, built from the structure of
/// the class rather than by diagram search:
///
///  - on the strong-even cores, by matching maximal spherical subsets inside
///    the core and maximal independent subsets of the core through tau, and
///    pairing generators with identical membership patterns (singletons
///    related by tau are paired with each other first);
///  - on a pair {s,t} outside the core with odd m(s,t), by its conjugate
///    maximal spherical partner {s',t'};
///  - on s outside the core whose odd partner t is in the core, by sending
///    s to the member of the partner pair that is not the image of t.
///
/// Structural contradictions raise InternalInconsistency. Returns nullopt
/// when the resulting map fails the entrywise label check.
inline std::optional<DiagramBijection> construct_psi(const RegularRealization& real,
                                                     const CandidateSystem& sysA,
                                                     const CandidateSystem& sysB) {
  const auto report_a = check_class_membership(sysA.matrix);
  if (!report_a.in_class) {
    throw std::invalid_argument("construct_psi: first system is not in the class");
  }
  const auto report_b = check_class_membership(sysB.matrix);
  auto fail = [&](const std::string& what) -> InternalInconsistency {
    return InternalInconsistency("construct_psi: " + what + "\nsystem A: " +
                                 detail::describe(sysA) + "\nsystem B: " + detail::describe(sysB));
  };
  if (!report_b.in_class) throw fail("second system is not in the class");
  const std::size_t n = sysA.matrix.rank();
  if (sysB.matrix.rank() != n) throw fail("ranks differ");

  const ConcreteAbelianization ab(real);
  const auto& core_a = report_a.s_bar;
  const auto& core_b = report_b.s_bar;
  if (core_a.size() != core_b.size()) throw fail("strong-even cores differ in size");

  // Families inside the cores: maximal spherical members contained in the
  // core, then maximal independent subsets of the core.
  auto core_family = [](const ClassReport& r, const CoxeterMatrix& m) {
    SphericalFamily fam;
    for (const auto& t : r.maximal_spherical) {
      if (t.is_subset_of(r.s_bar)) fam.push_back(t);
    }
    for (auto& t : maximal_independent_subsets(m, r.s_bar)) {
      if (std::find(fam.begin(), fam.end(), t) == fam.end()) fam.push_back(std::move(t));
    }
    return fam;
  };
  const auto fam_a = core_family(report_a, sysA.matrix);
  const auto fam_b = core_family(report_b, sysB.matrix);

  std::vector<std::size_t> partner(fam_a.size());
  for (std::size_t i = 0; i < fam_a.size(); ++i) {
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < fam_b.size(); ++j) {
      if (tau_relation(ab, sysA, fam_a[i], sysB, fam_b[j])) hits.push_back(j);
    }
    if (hits.size() != 1) {
      throw fail("core family member has " + std::to_string(hits.size()) + " tau partners");
    }
    partner[i] = hits.front();
  }

  auto signature_a = [&](std::size_t s) {
    std::vector<bool> sig(fam_a.size());
    for (std::size_t i = 0; i < fam_a.size(); ++i) sig[i] = fam_a[i].contains(s);
    return sig;
  };
  auto signature_b = [&](std::size_t s) {
    std::vector<bool> sig(fam_a.size());
    for (std::size_t i = 0; i < fam_a.size(); ++i) sig[i] = fam_b[partner[i]].contains(s);
    return sig;
  };

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> psi(n, kUnset);
  std::vector<bool> used(n, false);

  std::map<std::vector<bool>, std::vector<std::size_t>> atoms_a, atoms_b;
  for (auto s : core_a) atoms_a[signature_a(s)].push_back(s);
  for (auto s : core_b) atoms_b[signature_b(s)].push_back(s);
  if (atoms_a.size() != atoms_b.size()) throw fail("membership patterns differ between cores");
  for (const auto& [sig, members] : atoms_a) {
    auto it = atoms_b.find(sig);
    if (it == atoms_b.end() || it->second.size() != members.size()) {
      throw fail("membership pattern sizes differ between cores");
    }
    const auto& targets = it->second;
    for (auto t : members) {
      for (auto tp : targets) {
        if (!used[tp] && tau_relation(ab, sysA, GeneratorSubset{t}, sysB, GeneratorSubset{tp})) {
          psi[t] = tp;
          used[tp] = true;
          break;
        }
      }
    }
    for (auto t : members) {
      if (psi[t] != kUnset) continue;
      for (auto tp : targets) {
        if (!used[tp]) {
          psi[t] = tp;
          used[tp] = true;
          break;
        }
      }
    }
  }

  const auto partners_a = odd_partner_structure(sysA.matrix, report_a);
  const auto partners_b = odd_partner_structure(sysB.matrix, report_b);
  const auto matches = match_maximal_sphericals(real, sysA, sysB);
  auto match_of = [&](const GeneratorSubset& t) -> const GeneratorSubset& {
    for (const auto& mt : matches) {
      if (mt.source == t) return mt.target;
    }
    throw fail("no conjugacy match for a maximal spherical subset");
  };

  for (const auto& [s, t] : partners_a) {
    if (psi[s] != kUnset) continue;
    const auto& pair_b = match_of(GeneratorSubset{s, t});
    if (pair_b.size() != 2) throw fail("odd pair matched to a subset of size != 2");
    if (!core_a.contains(t)) {
      if (core_b.contains(pair_b[0]) || core_b.contains(pair_b[1])) {
        throw fail("odd pair outside the core matched into the core");
      }
      const auto [lo, hi] = std::minmax(s, t);
      psi[lo] = pair_b[0];
      psi[hi] = pair_b[1];
      used[pair_b[0]] = used[pair_b[1]] = true;
      continue;
    }
    // t lies in the core: T is the unique maximal spherical subset with
    // t in T inside the core, and T' its conjugate partner.
    const GeneratorSubset* home = nullptr;
    for (const auto& cand : report_a.maximal_spherical) {
      if (cand.contains(t) && cand.is_subset_of(core_a)) {
        if (home) throw fail("core generator lies in two maximal spherical core subsets");
        home = &cand;
      }
    }
    if (!home) throw fail("core generator lies in no maximal spherical core subset");
    const auto& home_b = match_of(*home);
    const Element image_t = sysA.generators[t];
    std::optional<std::size_t> chosen;
    for (int pass = 0; pass < 2 && !chosen; ++pass) {
      for (auto c : pair_b) {
        if (pass == 0 && !home_b.contains(c)) continue;
        if (are_conjugate_elements(real, image_t, sysB.generators[c])) {
          chosen = c;
          break;
        }
      }
    }
    if (!chosen) throw fail("image of the core partner is conjugate to neither generator");
    if (psi[t] != *chosen) throw fail("core bijection disagrees with the conjugacy choice");
    const std::size_t other = pair_b[0] == *chosen ? pair_b[1] : pair_b[0];
    if (used[other]) throw fail("odd-pair image already used");
    psi[s] = other;
    used[other] = true;
  }

  if (std::find(psi.begin(), psi.end(), kUnset) != psi.end()) {
    throw fail("some generator received no image");
  }
  std::vector<bool> hit(n, false);
  for (auto x : psi) {
    if (hit[x]) throw fail("constructed map is not injective");
    hit[x] = true;
  }
  DiagramBijection result(std::move(psi));
  if (!preserves_labels(sysA.matrix, sysB.matrix, result)) return std::nullopt;
  return result;
}

}  // namespace coxrig
