#include <gtest/gtest.h>

#include <vector>

#include "coxrig/diagram_isomorphism.hpp"
#include "coxrig/matrix_io.hpp"
#include "coxrig/presets.hpp"
#include "coxrig/rigidity_class.hpp"
#include "coxrig/rigidity_oracle.hpp"
#include "test_support.hpp"

using namespace coxrig;

namespace {

bool isomorphic(const CoxeterMatrix& a, const std::string& name) {
  return diagram_isomorphic(a, preset(name)).has_value();
}

// Finite in-class corpus members of order <= 200.
std::vector<std::string> in_class_small() {
  std::vector<std::string> out;
  for (const auto& name : coxrig::testing::finite_corpus_names()) {
    auto m = preset(name);
    if (*coxeter_order(m) <= 200 && check_class_membership(m).in_class) out.push_back(name);
  }
  return out;
}

}  // namespace

TEST(StandardSystem, SelfCertifies) {
  for (const char* name : {"A1", "A3", "B3", "I2(6)", "A1+A2", "H3"}) {
    auto m = preset(name);
    auto real = todd_coxeter(m);
    auto sys = standard_system(real);
    EXPECT_EQ(sys.matrix, m) << name;
    auto cert = certify_coxeter_system(real, sys.generators);
    ASSERT_TRUE(cert) << name;
    EXPECT_EQ(*cert, m);
  }
}

TEST(Certify, DihedralExamples) {
  auto real = todd_coxeter(preset("I2(6)"));
  const Element s = real.generator(0), t = real.generator(1);
  const Element tst = real.multiply(real.multiply(t, s), t);
  const Element st = real.multiply(s, t);
  const Element z = real.multiply(real.multiply(st, st), st);  // (st)^3, central
  auto m = certify_coxeter_system(real, make_element_set({s, tst, z}));
  ASSERT_TRUE(m);
  EXPECT_TRUE(isomorphic(*m, "A1+A2"));
  EXPECT_EQ(subgroup_closure(real, make_element_set({s, z})).size(), 4u);
  EXPECT_FALSE(certify_coxeter_system(real, make_element_set({s, z})));
  EXPECT_FALSE(certify_coxeter_system(real, {st}));              // not an involution
  EXPECT_FALSE(certify_coxeter_system(real, {}));
  // Generating but with the wrong relations: s, t, z has an infinite-free
  // matrix whose group is larger than 12.
  EXPECT_FALSE(certify_coxeter_system(real, make_element_set({s, t, z})));
}

TEST(Enumerate, Examples) {
  OracleLimits limits;
  limits.max_gens = 4;
  auto i26 = todd_coxeter(preset("I2(6)"));
  auto search = enumerate_coxeter_generating_sets(i26, preset("I2(6)"), limits);
  EXPECT_TRUE(search.exhausted);
  bool pair = false, triple = false;
  for (const auto& c : search.candidates) {
    EXPECT_TRUE(c.certified);
    pair |= c.generators.size() == 2 && isomorphic(c.matrix, "I2(6)");
    triple |= c.generators.size() == 3 && isomorphic(c.matrix, "A1+A2");
  }
  EXPECT_TRUE(pair);
  EXPECT_TRUE(triple);
  for (std::size_t k = 1; k < search.candidates.size(); ++k) {
    const auto& a = search.candidates[k - 1].generators;
    const auto& b = search.candidates[k].generators;
    EXPECT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
  }

  auto a2 = todd_coxeter(preset("A2"));
  auto a2_search = enumerate_coxeter_generating_sets(a2, preset("A2"), limits);
  EXPECT_EQ(a2_search.candidates.size(), 3u);
  for (const auto& c : a2_search.candidates) EXPECT_TRUE(isomorphic(c.matrix, "A2"));

  auto a1 = todd_coxeter(preset("A1"));
  auto a1_search = enumerate_coxeter_generating_sets(a1, preset("A1"), limits);
  ASSERT_EQ(a1_search.candidates.size(), 1u);
  EXPECT_EQ(a1_search.candidates[0].generators, ElementSet{1});
}

TEST(Enumerate, Limits) {
  OracleLimits limits;
  limits.max_order = 10;
  auto i26 = todd_coxeter(preset("I2(6)"));
  EXPECT_THROW(enumerate_coxeter_generating_sets(i26, preset("I2(6)"), limits), LimitExceeded);
  limits = OracleLimits{};
  limits.max_subsets = 5;
  EXPECT_THROW(enumerate_coxeter_generating_sets(i26, preset("I2(6)"), limits), LimitExceeded);
  limits = OracleLimits{};
  limits.max_gens = 2;
  auto search = enumerate_coxeter_generating_sets(i26, preset("I2(6)"), limits);
  EXPECT_FALSE(search.exhausted);
  EXPECT_THROW(enumerate_coxeter_generating_sets(i26, preset("A2"), OracleLimits{}),
               std::invalid_argument);
}

TEST(RigidityVerdict, Examples) {
  auto i26 = rigidity_verdict(preset("I2(6)"), OracleLimits{});
  EXPECT_FALSE(i26.rigid);
  EXPECT_TRUE(i26.exhausted);
  ASSERT_EQ(i26.classes.size(), 2u);
  EXPECT_TRUE(isomorphic(i26.classes[0].matrix, "I2(6)"));
  EXPECT_TRUE(isomorphic(i26.classes[1].matrix, "A1+A2"));
  EXPECT_EQ(i26.group_order, 12u);

  auto i210 = rigidity_verdict(preset("I2(10)"), OracleLimits{});
  EXPECT_FALSE(i210.rigid);
  bool found = false;
  for (const auto& k : i210.classes) found |= isomorphic(k.matrix, "A1+I2(5)");
  EXPECT_TRUE(found);

  for (const char* name : {"A2", "B2", "A1"}) {
    auto v = rigidity_verdict(preset(name), OracleLimits{});
    EXPECT_TRUE(v.rigid) << name;
    EXPECT_TRUE(v.exhausted) << name;
  }
  EXPECT_THROW(rigidity_verdict(parse_coxeter_file("rank 2"), OracleLimits{}), InfiniteGroup);
  EXPECT_THROW(rigidity_verdict(preset("F4"), OracleLimits{}), LimitExceeded);
}

TEST(RigidityVerdict, ClassesArePairwiseNonIsomorphic) {
  for (const char* name : {"I2(6)", "B3", "A1+A2", "I2(10)", "A3"}) {
    auto v = rigidity_verdict(preset(name), OracleLimits{});
    EXPECT_TRUE(diagram_isomorphic(v.classes[0].matrix, preset(name)).has_value());
    for (std::size_t a = 0; a < v.classes.size(); ++a) {
      for (std::size_t b = a + 1; b < v.classes.size(); ++b) {
        EXPECT_FALSE(diagram_isomorphic(v.classes[a].matrix, v.classes[b].matrix)) << name;
      }
    }
    EXPECT_EQ(v.rigid, v.classes.size() == 1 && v.exhausted);
    ASSERT_EQ(v.representative_words.size(), v.classes.size());
  }
}

TEST(RigidityVerdict, InClassGroupsAreRigid) {
  const auto names = in_class_small();
  EXPECT_GE(names.size(), 8u);
  for (const auto& name : names) {
    auto v = rigidity_verdict(preset(name), OracleLimits{});
    EXPECT_TRUE(v.exhausted) << name;
    EXPECT_TRUE(v.rigid) << name;
    for (const auto& c : v.candidates) {
      EXPECT_TRUE(check_class_membership(c.matrix).in_class) << name << "\n" << serialize(c.matrix);
    }
  }
}

TEST(RigidityVerdict, OddSumOfRankOneAndPentagonIsOutOfClass) {
  // A1 + I2(5) is the same group as I2(10), so it cannot be rigid; it fails
  // condition (1) because its odd pair lies inside the whole generating set.
  auto m = preset("A1+I2(5)");
  auto report = check_class_membership(m);
  EXPECT_FALSE(report.in_class);
  EXPECT_FALSE(report.conditions[1]);
  auto v = rigidity_verdict(m, OracleLimits{});
  EXPECT_FALSE(v.rigid);
  bool found = false;
  for (const auto& k : v.classes) found |= isomorphic(k.matrix, "I2(10)");
  EXPECT_TRUE(found);
}

TEST(Soundness, CandidateMatricesRealizeTheSameOrder) {
  for (const char* name : {"I2(6)", "B3", "A1+A2", "I2(12)", "A1+B2", "A3"}) {
    auto v = rigidity_verdict(preset(name), OracleLimits{});
    for (const auto& c : v.candidates) {
      EXPECT_EQ(todd_coxeter(c.matrix).order(), v.group_order) << name;
    }
  }
}

TEST(MatchMaximalSphericals, Examples) {
  auto real = todd_coxeter(preset("I2(6)"));
  auto base = standard_system(real);
  auto self = match_maximal_sphericals(real, base, base);
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0].source, self[0].target);
  EXPECT_EQ(self[0].conjugator, RegularRealization::identity());

  auto v = rigidity_verdict(preset("I2(6)"), OracleLimits{});
  for (const auto& c : v.candidates) {
    auto m = match_maximal_sphericals(real, base, c);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ(m[0].target, GeneratorSubset::full(c.matrix.rank()));
    EXPECT_EQ(m[0].conjugator, RegularRealization::identity());
  }

  auto a111 = todd_coxeter(preset("A1+A1+A1"));
  auto base3 = standard_system(a111);
  for (const auto& c : enumerate_coxeter_generating_sets(a111, preset("A1+A1+A1"), OracleLimits{})
                           .candidates) {
    auto m = match_maximal_sphericals(a111, base3, c);
    ASSERT_EQ(m.size(), 1u);
  }
}

TEST(TauRelation, ReflexiveAndPartialBijection) {
  for (const auto& name : in_class_small()) {
    auto m = preset(name);
    auto real = todd_coxeter(m);
    ConcreteAbelianization ab(real);
    auto base = standard_system(real);
    EXPECT_TRUE(tau_relation(ab, base, {}, base, {}));
    const auto core_a = check_class_membership(m).s_bar;
    for (const auto& c : rigidity_verdict(m, OracleLimits{}).candidates) {
      const auto core_b = check_class_membership(c.matrix).s_bar;
      if (core_a.size() > 4) continue;
      // Functional and injective on subsets of the cores.
      for (std::uint64_t a = 0; a < (1u << core_a.size()); ++a) {
        std::vector<std::size_t> sa;
        for (std::size_t i = 0; i < core_a.size(); ++i) {
          if (a >> i & 1) sa.push_back(core_a[i]);
        }
        std::size_t partners = 0;
        for (std::uint64_t b = 0; b < (1u << core_b.size()); ++b) {
          std::vector<std::size_t> sb;
          for (std::size_t i = 0; i < core_b.size(); ++i) {
            if (b >> i & 1) sb.push_back(core_b[i]);
          }
          partners += tau_relation(ab, base, GeneratorSubset(sa), c, GeneratorSubset(sb));
        }
        EXPECT_LE(partners, 1u) << name;
      }
      if (c.generators == base.generators) {
        EXPECT_TRUE(tau_relation(ab, base, core_a, c, core_a));
      }
    }
  }
}

TEST(ConstructPsi, Examples) {
  auto real = todd_coxeter(preset("I2(5)"));
  auto base = standard_system(real);
  auto self = construct_psi(real, base, base);
  ASSERT_TRUE(self);
  EXPECT_EQ(*self, DiagramBijection::identity(2));

  // Conjugate generating set {w s w^-1, w t w^-1}.
  const Element w = real.multiply(real.generator(0), real.generator(1));
  auto gens = make_element_set({real.conjugate(w, real.generator(0)),
                                real.conjugate(w, real.generator(1))});
  auto cert = certify_coxeter_system(real, gens);
  ASSERT_TRUE(cert);
  EXPECT_EQ((*cert)(0, 1), Label(5));
  CandidateSystem other{gens, *cert, true};
  auto psi = construct_psi(real, base, other);
  ASSERT_TRUE(psi);
  EXPECT_TRUE(preserves_labels(base.matrix, other.matrix, *psi));

  auto i26 = todd_coxeter(preset("I2(6)"));
  EXPECT_THROW(construct_psi(i26, standard_system(i26), standard_system(i26)),
               std::invalid_argument);
}

TEST(ConstructPsi, EveryCertifiedPairOfInClassGroups) {
  for (const auto& name : in_class_small()) {
    auto m = preset(name);
    auto real = todd_coxeter(m);
    auto base = standard_system(real);
    auto v = rigidity_verdict(m, OracleLimits{});
    for (const auto& c : v.candidates) {
      auto psi = construct_psi(real, base, c);
      ASSERT_TRUE(psi) << name << "\n" << serialize(c.matrix);
      for (std::size_t s = 0; s < m.rank(); ++s) {
        for (std::size_t t = 0; t < m.rank(); ++t) {
          EXPECT_EQ(m(s, t), c.matrix((*psi)(s), (*psi)(t))) << name;
        }
      }
    }
  }
}
