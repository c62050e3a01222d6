#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "coxchar/error.hpp"
#include "coxchar/group_element.hpp"

using namespace coxchar;

namespace {

GroupElement perm(std::initializer_list<int> w) {
  std::vector<int> v(w);
  return GroupElement::from_window(Model::PermA, static_cast<int>(v.size()) - 1, v);
}

// Depth in the Cayley graph (left multiplication by generators); independent
// of the closed-form length.
std::unordered_map<GroupElement, int> bfs_depths(Model model, int rank) {
  std::unordered_map<GroupElement, int> depth;
  std::deque<GroupElement> queue;
  const auto e = GroupElement::identity(model, rank);
  depth.emplace(e, 0);
  queue.push_back(e);
  const auto gens = e.generators().to_vector();
  while (!queue.empty()) {
    const auto w = queue.front();
    queue.pop_front();
    for (int s : gens) {
      const auto next = multiply(GroupElement::generator(model, rank, s), w);
      if (depth.emplace(next, depth[w] + 1).second) queue.push_back(next);
    }
  }
  return depth;
}

} // namespace

TEST(GroupElement, Composition) {
  EXPECT_EQ(multiply(perm({2, 1, 3}), perm({2, 1, 3})), perm({1, 2, 3}));
  // (uv)(i) = u(v(i)): right multiplication by s_i permutes positions.
  EXPECT_EQ(multiply(perm({1, 3, 2}), perm({2, 1, 3})), perm({3, 1, 2}));
  EXPECT_EQ(multiply(perm({2, 1, 3}), perm({1, 3, 2})), perm({2, 3, 1}));
  const auto w = perm({3, 1, 4, 2});
  EXPECT_EQ(multiply(GroupElement::identity(Model::PermA, 3), w), w);
}

TEST(GroupElement, Length) {
  EXPECT_EQ(length(perm({3, 2, 1})), 3);
  const int w0b[] = {-1, -2, -3};
  EXPECT_EQ(length(GroupElement::from_window(Model::SignedB, 3, w0b)), 9);
  EXPECT_EQ(length(GroupElement::identity(Model::EvenSignedD, 4)), 0);
}

TEST(GroupElement, Descents) {
  EXPECT_EQ(right_descents(perm({2, 3, 1})), GeneratorSet{2});
  EXPECT_EQ(right_descents(GroupElement::identity(Model::SignedB, 3)), GeneratorSet{});
  EXPECT_EQ(right_descents(perm({4, 3, 2, 1})), (GeneratorSet{1, 2, 3}));
}

TEST(GroupElement, Inverse) {
  EXPECT_EQ(inverse(perm({2, 3, 1})), perm({3, 1, 2}));
  EXPECT_EQ(inverse(perm({3, 2, 1})), perm({3, 2, 1}));
  const int w[] = {-1, -2};
  const auto w0 = GroupElement::from_window(Model::SignedB, 2, w);
  EXPECT_EQ(inverse(w0), w0);
  EXPECT_EQ(multiply(w0, w0), GroupElement::identity(Model::SignedB, 2));
}

TEST(GroupElement, ParabolicLongest) {
  EXPECT_EQ(longest_element_of_parabolic(Model::PermA, 3, {1, 2, 3}), perm({4, 3, 2, 1}));
  EXPECT_EQ(longest_element_of_parabolic(Model::PermA, 3, {1, 3}), perm({2, 1, 4, 3}));
  const int w[] = {-1, -2, -3};
  const auto b = longest_element_of_parabolic(Model::SignedB, 3, {1, 2, 3});
  EXPECT_EQ(b, GroupElement::from_window(Model::SignedB, 3, w));
  EXPECT_EQ(length(b), 9);
  EXPECT_EQ(length(longest_element_of_parabolic(Model::EvenSignedD, 5, {1, 2, 3, 4, 5})), 20);
}

TEST(GroupElement, ParseAndFormat) {
  const auto w = GroupElement::parse(Model::SignedB, 3, "-2, 1 \xE2\x88\x92" "3");
  EXPECT_EQ(w.to_string(), "-2 1 -3");
  EXPECT_THROW(GroupElement::parse(Model::PermA, 2, "1 1 2"), Error);
  EXPECT_THROW(GroupElement::parse(Model::EvenSignedD, 3, "-1 2 3"), Error);
  EXPECT_THROW(GroupElement::parse(Model::PermA, 2, "1 x 2"), Error);
}

TEST(GroupElement, GroupOrders) {
  EXPECT_EQ(group_order(Model::PermA, 4), 120u);
  EXPECT_EQ(group_order(Model::SignedB, 3), 48u);
  EXPECT_EQ(group_order(Model::EvenSignedD, 4), 192u);
}

TEST(GroupElement, LengthEqualsCayleyDepth) {
  for (auto [model, max] : {std::pair{Model::PermA, 5}, {Model::SignedB, 4}, {Model::EvenSignedD, 4}}) {
    for (int n = min_rank(model); n <= max; ++n) {
      const auto depth = bfs_depths(model, n);
      EXPECT_EQ(depth.size(), group_order(model, n));
      for (const auto& [w, d] : depth) {
        ASSERT_EQ(length(w), d) << to_string(model) << n << " " << w.to_string();
        ASSERT_EQ(left_descents(w), right_descents(inverse(w))) << w.to_string();
      }
    }
  }
}

TEST(GroupElement, GeneratorOrdersMatchGraphLabels) {
  for (auto [model, n] : {std::pair{Model::PermA, 5}, {Model::SignedB, 5}, {Model::EvenSignedD, 5}}) {
    const auto graph = CoxeterGraph::build(family_for(model), n);
    const auto e = GroupElement::identity(model, n);
    for (int s : graph.nodes().to_vector()) {
      for (int t : graph.nodes().to_vector()) {
        const auto st = multiply(GroupElement::generator(model, n, s), GroupElement::generator(model, n, t));
        int order = 1;
        auto p = st;
        while (!(p == e)) {
          p = multiply(p, st);
          ++order;
        }
        EXPECT_EQ(order, graph.label(s, t)) << to_string(model) << " s" << s << " s" << t;
      }
    }
  }
}

TEST(GroupElement, CommutingDescentsStripTogether) {
  // If s, t are right descents of w and commute, w is a product ending in s t.
  for (auto [model, n] : {std::pair{Model::PermA, 4}, {Model::SignedB, 3}}) {
    const auto graph = CoxeterGraph::build(family_for(model), n);
    for (const auto& [w, d] : bfs_depths(model, n)) {
      const auto desc = right_descents(w);
      for (int s : desc.to_vector()) {
        for (int t : desc.to_vector()) {
          if (s >= t || graph.label(s, t) != 2) continue;
          const auto ws = multiply(w, GroupElement::generator(model, n, s));
          const auto wst = multiply(ws, GroupElement::generator(model, n, t));
          EXPECT_EQ(length(wst), d - 2);
        }
      }
    }
  }
}
