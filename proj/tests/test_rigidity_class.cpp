#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "coxrig/diagram_isomorphism.hpp"
#include "coxrig/matrix_io.hpp"
#include "coxrig/presets.hpp"
#include "coxrig/rigidity_class.hpp"
#include "naive_class.hpp"
#include "test_support.hpp"

using namespace coxrig;
using coxrig::testing::from_labels;
using coxrig::testing::MatrixGenerator;
using coxrig::testing::naive_check;
using coxrig::testing::sweep;

namespace {

bool violates(const CoxeterMatrix& m, const ClassReport& r, const ConditionWitness& w) {
  const auto& g = w.generators;
  switch (w.condition) {
    case 0:
      return m(g[0], g[1]).is_even() && !m(g[0], g[1]).is_strong_even_value();
    case 1:
      return m(g[0], g[1]).is_odd() &&
             std::find(r.maximal_spherical.begin(), r.maximal_spherical.end(),
                       GeneratorSubset{g[0], g[1]}) == r.maximal_spherical.end();
    case 2:
      return m(g[0], g[1]).is_odd() && m(g[1], g[2]).is_odd() && g[0] != g[2];
    case 3: {
      std::size_t meet = 0;
      for (const auto& a : r.maximal_spherical) meet += a.intersects(GeneratorSubset{g[0], g[1]});
      return m(g[0], g[1]).is_odd() && meet > 2 && meet == w.count;
    }
  }
  return false;
}

}  // namespace

TEST(ClassMembership, Examples) {
  auto i24 = check_class_membership(preset("I2(4)"));
  EXPECT_TRUE(i24.in_class);
  EXPECT_EQ(i24.evenness, Evenness::StrongEven);
  EXPECT_EQ(i24.s_bar, (GeneratorSubset{0, 1}));

  auto i26 = check_class_membership(preset("I2(6)"));
  EXPECT_FALSE(i26.in_class);
  EXPECT_FALSE(i26.conditions[0]);
  ASSERT_EQ(i26.witnesses.size(), 1u);
  EXPECT_EQ(i26.witnesses[0].condition, 0);
  EXPECT_EQ(i26.witnesses[0].generators, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(i26.witnesses[0].values, std::vector<Label>{Label(6)});
  EXPECT_EQ(i26.evenness, Evenness::EvenNotStrong);
  EXPECT_FALSE(i26.s_bar_authoritative);

  auto a3 = check_class_membership(preset("A3"));
  EXPECT_FALSE(a3.in_class);
  EXPECT_EQ(a3.conditions, (std::array<bool, 4>{true, false, false, true}));
  ASSERT_EQ(a3.witnesses.size(), 2u);
  EXPECT_EQ(a3.witnesses[0].generators, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(a3.witnesses[1].generators, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(a3.evenness, Evenness::NotEven);

  auto ex = check_class_membership(from_labels(3, {Label(5), Label(4), kInfinity}));
  EXPECT_TRUE(ex.in_class);
  EXPECT_TRUE(ex.s_bar_authoritative);
  EXPECT_EQ(ex.s_bar, (GeneratorSubset{0, 2}));
  EXPECT_EQ(ex.odd_pairs, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
}

TEST(ClassMembership, ConditionThreeCountsMeetingMembers) {
  // Odd pair {1,2} with both ends in two further maximal subsets each.
  auto m = from_labels(4, {Label(3), Label(2), kInfinity, kInfinity, Label(2), kInfinity});
  auto r = check_class_membership(m);
  EXPECT_TRUE(r.conditions[1]);
  EXPECT_FALSE(r.conditions[3]);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_EQ(r.witnesses.back().condition, 3);
  EXPECT_EQ(r.witnesses.back().count, 3u);
}

TEST(ClassMembership, AgreesWithNaiveEvaluator) {
  const auto matrices = sweep();
  ASSERT_EQ(matrices.size(), 6u + 216u);
  int in_class = 0;
  for (const auto& m : matrices) {
    auto fast = check_class_membership(m);
    auto slow = naive_check(m);
    EXPECT_EQ(fast.conditions, slow.conditions) << serialize(m);
    EXPECT_EQ(fast.in_class, slow.in_class) << serialize(m);
    EXPECT_EQ(std::set<std::size_t>(fast.s_bar.begin(), fast.s_bar.end()), slow.s_bar)
        << serialize(m);
    in_class += fast.in_class;
  }
  EXPECT_GT(in_class, 20);
}

TEST(ClassMembership, WitnessesViolateTheirCondition) {
  auto matrices = sweep();
  MatrixGenerator gen(17);
  for (int k = 0; k < 300; ++k) matrices.push_back(gen(3 + k % 4));
  for (const auto& m : matrices) {
    auto r = check_class_membership(m);
    std::size_t failed = 0;
    for (bool c : r.conditions) failed += !c;
    EXPECT_EQ(r.witnesses.size(), failed);
    EXPECT_EQ(r.in_class, failed == 0);
    for (const auto& w : r.witnesses) {
      EXPECT_FALSE(r.conditions[w.condition]);
      EXPECT_TRUE(violates(m, r, w)) << serialize(m) << " condition " << w.condition;
    }
  }
}

TEST(ClassMembership, CoreMembersShareNoOddEntry) {
  for (const auto& m : sweep()) {
    auto r = check_class_membership(m);
    if (!r.in_class) continue;
    for (auto s : r.s_bar) {
      for (auto t : r.s_bar) {
        if (s != t) {
          EXPECT_FALSE(m(s, t).is_odd()) << serialize(m);
        }
      }
    }
  }
}

TEST(ClassMembership, InvariantUnderRelabeling) {
  MatrixGenerator gen(31);
  for (int k = 0; k < 200; ++k) {
    auto m = gen(2 + k % 5);
    auto [r, perm] = gen.relabel(m);
    auto a = check_class_membership(m);
    auto b = check_class_membership(r);
    EXPECT_EQ(a.in_class, b.in_class) << serialize(m);
    EXPECT_EQ(a.conditions, b.conditions) << serialize(m);
    EXPECT_EQ(a.evenness, b.evenness);
    std::vector<std::size_t> mapped;
    for (auto s : a.s_bar) mapped.push_back(perm[s]);
    EXPECT_EQ(GeneratorSubset(mapped), b.s_bar) << serialize(m);
  }
}

TEST(ClassMembership, StrongEvenImpliesInClass) {
  MatrixGenerator gen(41, {Label(2), Label(4), Label(8), Label(12), kInfinity});
  for (int k = 0; k < 200; ++k) {
    auto m = gen(1 + k % 6);
    auto r = check_class_membership(m);
    EXPECT_EQ(r.evenness, Evenness::StrongEven);
    EXPECT_TRUE(r.in_class);
    EXPECT_TRUE(odd_partner_structure(m, r).empty());
  }
}

TEST(OddPartnerStructure, Examples) {
  auto ex = from_labels(3, {Label(5), Label(4), kInfinity});
  auto partner = odd_partner_structure(ex, check_class_membership(ex));
  EXPECT_EQ(partner, (std::map<std::size_t, std::size_t>{{1, 0}}));

  auto a2 = preset("A2");
  auto r = check_class_membership(a2);
  ASSERT_TRUE(r.in_class);
  EXPECT_TRUE(r.s_bar.empty());
  EXPECT_EQ(odd_partner_structure(a2, r), (std::map<std::size_t, std::size_t>{{0, 1}, {1, 0}}));

  auto a3 = preset("A3");
  EXPECT_THROW(odd_partner_structure(a3, check_class_membership(a3)), std::invalid_argument);
}

TEST(OddPartnerStructure, HoldsAcrossInClassMatrices) {
  auto matrices = sweep();
  MatrixGenerator gen(53, {Label(2), Label(3), Label(4), Label(5), Label(8), kInfinity, kInfinity});
  for (int k = 0; k < 2000; ++k) matrices.push_back(gen(2 + k % 5));
  int checked = 0;
  for (const auto& m : matrices) {
    auto r = check_class_membership(m);
    if (!r.in_class) continue;
    auto partner = odd_partner_structure(m, r);
    EXPECT_EQ(partner.size(), m.rank() - r.s_bar.size()) << serialize(m);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}
