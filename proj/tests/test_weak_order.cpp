#include <gtest/gtest.h>

#include <algorithm>

#include "coxchar/error.hpp"
#include "coxchar/weak_order.hpp"

using namespace coxchar;

namespace {

GroupElement perm(std::initializer_list<int> w) {
  std::vector<int> v(w);
  return GroupElement::from_window(Model::PermA, static_cast<int>(v.size()) - 1, v);
}

std::vector<int> rank_counts(const WeakOrderPoset& p) {
  std::vector<int> out(static_cast<std::size_t>(p.order().max_rank()) + 1);
  for (Index i = 0; i < p.size(); ++i) ++out[static_cast<std::size_t>(p.rank_of(i))];
  return out;
}

} // namespace

TEST(WeakOrder, Hexagon) {
  const auto p = WeakOrderPoset::build(Model::PermA, 2);
  EXPECT_EQ(p.size(), 6u);
  EXPECT_EQ(rank_counts(p), (std::vector<int>{1, 2, 2, 1}));
  ASSERT_TRUE(p.top());
  EXPECT_EQ(p.element(*p.top()), perm({3, 2, 1}));
  EXPECT_EQ(p.rank_of(*p.top()), 3);
}

TEST(WeakOrder, SmallGroups) {
  const auto a1 = WeakOrderPoset::build(Model::PermA, 1);
  EXPECT_EQ(a1.size(), 2u);
  EXPECT_EQ(a1.order().covers_up(0).size(), 1u);
  const auto b2 = WeakOrderPoset::build(Model::SignedB, 2);
  EXPECT_EQ(b2.size(), 8u);
  EXPECT_EQ(b2.rank_of(*b2.top()), 4);
}

TEST(WeakOrder, CoversAreLeftMultiplication) {
  const auto p = WeakOrderPoset::build(Model::SignedB, 3);
  for (Index u = 0; u < p.size(); ++u) {
    for (Index w : p.order().covers_up(u)) {
      const auto v = multiply(p.element(w), inverse(p.element(u)));
      EXPECT_EQ(length(v), 1);
    }
  }
}

TEST(WeakOrder, Budget) {
  EnumerationBudget budget;
  budget.max_elements = 100;
  try {
    (void)WeakOrderPoset::build(Model::PermA, 4, budget);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::budget);
    EXPECT_NE(std::string(e.what()).find("120"), std::string::npos);
  }
}

TEST(WeakOrder, Intervals) {
  const auto p = WeakOrderPoset::build(Model::PermA, 3);
  const auto whole = p.interval(p.bottom(), *p.top());
  EXPECT_EQ(whole.size(), p.size());
  EXPECT_EQ(char_poly_of_poset(whole), char_poly_of_poset(p));
  const Index u = p.index_of(perm({2, 1, 3, 4}));
  EXPECT_EQ(p.interval(u, u).size(), 1u);
  const Index x = p.index_of(perm({2, 1, 3, 4}));
  const Index y = p.index_of(perm({1, 3, 2, 4}));
  try {
    (void)p.interval(x, y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_comparable);
  }
}

TEST(WeakOrder, LengthCriterionMatchesReachability) {
  for (auto [model, n] : {std::pair{Model::PermA, 3}, {Model::SignedB, 3}, {Model::EvenSignedD, 4}}) {
    const auto p = WeakOrderPoset::build(model, n);
    for (Index u = 0; u < p.size(); ++u) {
      const auto up = p.order().upper_set(u);
      for (Index w = 0; w < p.size(); ++w) {
        const bool by_length =
            length(p.element(w)) == length(multiply(p.element(w), inverse(p.element(u)))) + length(p.element(u));
        ASSERT_EQ(by_length, std::binary_search(up.begin(), up.end(), w));
      }
    }
  }
}

TEST(WeakOrder, LowerIntervalIsomorphism) {
  const auto p = WeakOrderPoset::build(Model::PermA, 3);
  for (Index w = 0; w < p.size(); ++w) EXPECT_TRUE(lower_interval_isomorphism_check(p, p.bottom(), w));
  for (Index u = 0; u < p.size(); ++u) {
    for (Index w : p.order().upper_set(u)) EXPECT_TRUE(lower_interval_isomorphism_check(p, u, w));
  }
}

TEST(WeakOrder, JoinMeet) {
  const auto p = WeakOrderPoset::build(Model::PermA, 2);
  const Index s1 = p.index_of(perm({2, 1, 3}));
  const Index s2 = p.index_of(perm({1, 3, 2}));
  EXPECT_EQ(join(p, s1, s2), *p.top());
  EXPECT_EQ(meet(p, s1, s2), p.bottom());
  for (Index x = 0; x < p.size(); ++x) {
    EXPECT_EQ(meet(p, x, x), x);
    EXPECT_EQ(join(p, x, x), x);
  }
}

TEST(WeakOrder, JoinOfParabolicLongest) {
  for (auto [model, n] : {std::pair{Model::PermA, 3}, {Model::SignedB, 3}}) {
    const auto p = WeakOrderPoset::build(model, n);
    for (std::uint64_t i = 0; i < (1u << n); ++i) {
      for (std::uint64_t j = 0; j < (1u << n); ++j) {
        const GeneratorSet I(i << 1), J(j << 1);
        const Index a = p.index_of(longest_element_of_parabolic(model, n, I));
        const Index b = p.index_of(longest_element_of_parabolic(model, n, J));
        EXPECT_EQ(p.element(join(p, a, b)), longest_element_of_parabolic(model, n, I | J));
      }
    }
  }
}

TEST(WeakOrder, MobiusClosedForm) {
  const auto p = WeakOrderPoset::build(Model::EvenSignedD, 4);
  for (Index u = 0; u < p.size(); u += 7) {
    EXPECT_EQ(mobius_closed_form(p, u, u), 1);
    for (Index w : p.order().covers_up(u)) EXPECT_EQ(mobius_closed_form(p, u, w), -1);
    for (Index w : p.order().upper_set(u)) EXPECT_EQ(mobius_closed_form(p, u, w), mobius_pair_recursive(p, u, w));
  }
}

TEST(WeakOrder, MaxParabolicBelow) {
  const auto p = WeakOrderPoset::build(Model::PermA, 3);
  EXPECT_EQ(max_parabolic_below(p, p.bottom()), p.bottom());
  EXPECT_EQ(max_parabolic_below(p, *p.top()), *p.top());
  for (Index w = 0; w < p.size(); ++w) EXPECT_TRUE(p.leq(max_parabolic_below(p, w), w));
}

TEST(WeakOrder, DescentClasses) {
  const auto p = WeakOrderPoset::build(Model::PermA, 2);
  EXPECT_EQ(descent_class(p, {}, {}), std::vector<Index>{p.bottom()});
  EXPECT_EQ(descent_class(p, {1, 2}, {1, 2}), std::vector<Index>{*p.top()});
  const auto alt3 = descent_class(p, {2}, {2});
  ASSERT_EQ(alt3.size(), 2u);
  std::vector<std::string> windows;
  for (Index i : alt3) windows.push_back(p.element(i).to_string());
  std::sort(windows.begin(), windows.end());
  EXPECT_EQ(windows, (std::vector<std::string>{"1 3 2", "2 3 1"}));
  EXPECT_THROW((void)descent_class(p, {1, 2}, {1}), Error);
}

TEST(WeakOrder, DescentClassIsInterval) {
  // [s2, w0 w0({1})] in A_3 is the class {2} <= D_R <= {2, 3}.
  const auto p = WeakOrderPoset::build(Model::PermA, 3);
  const auto [bottom, top] = descent_class_endpoints(Model::PermA, 3, {2}, {2, 3});
  EXPECT_EQ(bottom, GroupElement::generator(Model::PermA, 3, 2));
  const auto interval = p.order().interval(p.index_of(bottom), p.index_of(top));
  EXPECT_EQ(interval, descent_class(p, {2}, {2, 3}));
}

TEST(WeakOrder, CharPoly) {
  EXPECT_EQ(char_poly_of_poset(WeakOrderPoset::build(Model::PermA, 1)), IntPolynomial({{1, 1}, {0, -1}}));
  EXPECT_EQ(char_poly_of_poset(WeakOrderPoset::build(Model::PermA, 2)), IntPolynomial({{3, 1}, {2, -2}, {0, 1}}));
}

TEST(WeakOrder, Dump) {
  const auto p = WeakOrderPoset::build(Model::PermA, 1);
  EXPECT_EQ(p.dump(), "rank 0: 1 2 -> covers: 2 1\nrank 1: 2 1 -> covers:\n");
}

TEST(WeakOrder, ComponentLengthsMatchDepth) {
  for (auto [model, n] : {std::pair{Model::PermA, 4}, {Model::SignedB, 4}, {Model::EvenSignedD, 4}}) {
    const auto p = WeakOrderPoset::build(model, n);
    const auto g = CoxeterGraph::build(family_for(model), n);
    for (std::uint64_t j = 0; j < (1u << n); ++j) {
      const GeneratorSet J(j << 1);
      const Index w = p.index_of(longest_element_of_parabolic(model, n, J));
      EXPECT_EQ(p.rank_of(w), parabolic_w0_length(g, J)) << to_string(model) << " " << J.to_string();
    }
  }
}
