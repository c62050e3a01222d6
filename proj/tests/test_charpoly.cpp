#include <gtest/gtest.h>

#include "coxchar/charpoly.hpp"
#include "coxchar/error.hpp"
#include "coxchar/weak_order.hpp"

using namespace coxchar;

namespace {

const IntPolynomial q_minus_1({{1, 1}, {0, -1}});

IntPolynomial poset_class(const WeakOrderPoset& p, GeneratorSet lower, GeneratorSet upper) {
  const auto [b, t] = descent_class_endpoints(p.model(), p.rank(), lower, upper);
  return char_poly_of_poset(p.interval(p.index_of(b), p.index_of(t)));
}

template <class F>
ErrorCode code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::verification;
}

} // namespace

TEST(CharPoly, SubsetSumExamples) {
  EXPECT_EQ(char_poly_subset_sum(Family::A, 1), q_minus_1);
  EXPECT_EQ(char_poly_subset_sum(Family::A, 2), IntPolynomial({{3, 1}, {2, -2}, {0, 1}}));
  EXPECT_EQ(char_poly_subset_sum(Family::A, 2), q_minus_1 * IntPolynomial({{2, 1}, {1, -1}, {0, -1}}));
  EXPECT_EQ(char_poly_subset_sum(Family::A, 3), IntPolynomial({{6, 1}, {5, -3}, {4, 1}, {3, 2}, {0, -1}}));
}

TEST(CharPoly, ModifiedExamples) {
  EXPECT_EQ(modified_char_poly(Family::A, 1), IntPolynomial({{0, 1}, {1, -1}}));
  EXPECT_EQ(modified_char_poly(Family::A, 2), IntPolynomial({{0, 1}, {1, -2}, {3, 1}}));
  EXPECT_EQ(modified_char_poly(Family::B, 2), IntPolynomial({{0, 1}, {1, -2}, {4, 1}}));
  EXPECT_EQ(modified_char_poly(Family::A, 0), IntPolynomial(1));
  EXPECT_EQ(modified_char_poly(Family::B, 1), modified_char_poly(Family::A, 1));
}

TEST(CharPoly, SubsetSumMatchesPoset) {
  for (auto [family, max] : {std::pair{Family::A, 6}, {Family::B, 4}, {Family::D, 4}}) {
    for (int n = family == Family::D ? 2 : (family == Family::B ? 2 : 1); n <= max; ++n) {
      const auto p = WeakOrderPoset::build(model_for(family), n);
      EXPECT_EQ(char_poly_subset_sum(family, n), char_poly_of_poset(p)) << to_string(family) << n;
    }
  }
}

TEST(CharPoly, ReversalAndValueAtOne) {
  for (auto family : {Family::A, Family::B, Family::D}) {
    for (int n = 2; n <= 14; ++n) {
      const auto chi = char_poly_subset_sum(family, n);
      EXPECT_EQ(chi.evaluate(1), 0);
      EXPECT_EQ(chi.degree(), longest_length(family, n));
      EXPECT_EQ(chi.reversed(longest_length(family, n)), modified_char_poly(family, n));
    }
  }
}

TEST(CharPoly, SerialAndParallelKernelsAgree) {
  SubsetOptions serial;
  serial.kernel = Kernel::serial;
  for (auto family : {Family::A, Family::B, Family::D}) {
    EXPECT_EQ(char_poly_subset_sum(family, 12, serial), char_poly_subset_sum(family, 12));
  }
}

TEST(CharPoly, RankErrors) {
  EXPECT_EQ(code_of([] { (void)char_poly_subset_sum(Family::D, 1); }), ErrorCode::range);
  EXPECT_EQ(code_of([] { (void)char_poly_subset_sum(Family::A, -1); }), ErrorCode::range);
  EXPECT_EQ(code_of([] { (void)char_poly_subset_sum(Family::A, 63); }), ErrorCode::budget);
  SubsetOptions small;
  small.max_rank = 10;
  EXPECT_EQ(code_of([&] { (void)char_poly_subset_sum(Family::B, 11, small); }), ErrorCode::budget);
  EXPECT_EQ(code_of([] { (void)char_poly_subset_sum(Family::AffA, 3); }), ErrorCode::range);
}

TEST(Decomposed, Examples) {
  const auto g = CoxeterGraph::build(Family::A, 2);
  const auto e = GroupElement::identity(Model::PermA, 2);
  const auto w0 = longest_element_of_parabolic(Model::PermA, 2, {1, 2});
  EXPECT_EQ(char_poly_interval_decomposed(g, w0, w0), IntPolynomial(1));
  EXPECT_EQ(char_poly_interval_decomposed(g, e, w0), IntPolynomial({{3, 1}, {2, -2}, {0, 1}}));
}

TEST(Decomposed, ExhaustiveAgainstPoset) {
  for (auto [model, n] : {std::pair{Model::PermA, 4}, {Model::SignedB, 3}}) {
    const auto p = WeakOrderPoset::build(model, n);
    const auto g = CoxeterGraph::build(family_for(model), n);
    for (Index u = 0; u < p.size(); ++u) {
      for (Index w : p.order().upper_set(u)) {
        ASSERT_EQ(char_poly_interval_decomposed(g, p.element(u), p.element(w)),
                  char_poly_of_poset(p.interval(u, w)))
            << p.element(u).to_string() << " .. " << p.element(w).to_string();
      }
    }
  }
}

TEST(Decomposed, Errors) {
  const auto g = CoxeterGraph::build(Family::A, 2);
  const auto s1 = GroupElement::generator(Model::PermA, 2, 1);
  const auto s2 = GroupElement::generator(Model::PermA, 2, 2);
  EXPECT_EQ(code_of([&] { (void)char_poly_interval_decomposed(g, s1, s2); }), ErrorCode::not_comparable);
  const auto b = GroupElement::identity(Model::SignedB, 2);
  EXPECT_EQ(code_of([&] { (void)char_poly_interval_decomposed(g, b, b); }), ErrorCode::model_mismatch);
}

TEST(DescentClass, Examples) {
  EXPECT_EQ(descent_class_char_poly(3, {3}, {3}), IntPolynomial({{2, 1}, {1, -1}}));
  EXPECT_EQ(descent_class_char_poly(4, {}, {}), IntPolynomial(1));
  EXPECT_EQ(descent_class_char_poly(2, {2}, {2}), q_minus_1);
  EXPECT_EQ(code_of([] { (void)descent_class_char_poly(3, {1, 2}, {1}); }), ErrorCode::range);
}

TEST(DescentClass, MatchesPosetOnA4) {
  const auto p = WeakOrderPoset::build(Model::PermA, 4);
  for (std::uint64_t j = 0; j < 16; ++j) {
    for (std::uint64_t i = j;; i = (i - 1) & j) {
      const GeneratorSet I(i << 1), J(j << 1);
      EXPECT_EQ(descent_class_char_poly(4, I, J), poset_class(p, I, J)) << I.to_string() << J.to_string();
      if (i == 0) break;
    }
  }
}

TEST(FixedDescent, Examples) {
  // n = 4, I = {2,4}: runs {1}, {3}; d = 10 - 2 - 2 = 6
  const auto alt5 = fixed_descent_formula(4, {2, 4});
  EXPECT_EQ(alt5, q_minus_1.pow(2).shifted(4));
  EXPECT_EQ(alt5, alternating_char_poly(5));
  EXPECT_EQ(fixed_descent_formula(5, {1, 2, 4}), q_minus_1.pow(2).shifted(7));
  const auto profile = run_profile(5, {1, 2, 4});
  EXPECT_EQ(profile.singles, 2);
  EXPECT_TRUE(profile.interior);
}

TEST(FixedDescent, BoundaryCounterexample) {
  EXPECT_FALSE(run_profile(3, {3}).interior);
  EXPECT_EQ(code_of([] { (void)fixed_descent_formula(3, {3}); }), ErrorCode::interior_condition);
  EXPECT_EQ(descent_class_char_poly(3, {3}, {3}), IntPolynomial({{2, 1}, {1, -1}}));
  EXPECT_EQ(code_of([] { (void)fixed_descent_formula(1, {}); }), ErrorCode::interior_condition);
}

TEST(FixedDescent, PairRunsUseTheA2Factor) {
  // I = {1, 4} in A_4: run {2, 3} is a pair away from both ends.
  const auto p = WeakOrderPoset::build(Model::PermA, 4);
  EXPECT_EQ(fixed_descent_formula(4, {1, 4}), poset_class(p, {1, 4}, {1, 4}));
  EXPECT_EQ(run_profile(4, {1, 4}).pairs, 1);
}

TEST(Alternating, Examples) {
  EXPECT_EQ(alternating_char_poly(3), q_minus_1);
  EXPECT_EQ(alternating_char_poly(4), IntPolynomial({{3, 1}, {2, -2}, {1, 1}}));
  EXPECT_EQ(alternating_char_poly(2), IntPolynomial(1));
  EXPECT_THROW((void)alternating_char_poly(1), Error);
  EXPECT_EQ(alternating_descent_set(6), (GeneratorSet{2, 4}));
  EXPECT_EQ(alternating_descent_set(7), (GeneratorSet{2, 4, 6}));
}

TEST(Alternating, MatchesGeneralRoute) {
  for (int n = 3; n <= 30; ++n) {
    const auto alt = alternating_descent_set(n);
    EXPECT_EQ(alternating_char_poly(n), descent_class_char_poly(n - 1, alt, alt)) << n;
  }
}

TEST(Affine, SpotValues) {
  const IntPolynomial a2({{0, 1}, {1, -3}, {3, 3}});
  const IntPolynomial c2({{0, 1}, {1, -3}, {2, 1}, {4, 2}});
  EXPECT_EQ(affine_modified_char_poly_direct(Family::AffA, 2), a2);
  EXPECT_EQ(affine_modified_char_poly_recurrence(Family::AffA, 2), a2);
  EXPECT_EQ(affine_modified_char_poly_direct(Family::AffC, 2), c2);
  EXPECT_EQ(affine_modified_char_poly_recurrence(Family::AffC, 2), c2);
  EXPECT_EQ(affine_modified_char_poly_direct(Family::AffA, 2).coefficient(0), 1);
}

TEST(Affine, DirectMatchesRecurrence) {
  for (auto family : {Family::AffA, Family::AffB, Family::AffC, Family::AffD}) {
    for (int n = min_rank(family); n <= 12; ++n) {
      const auto direct = affine_modified_char_poly_direct(family, n);
      EXPECT_EQ(direct, affine_modified_char_poly_recurrence(family, n)) << to_string(family) << n;
      EXPECT_EQ(direct.evaluate(1), (n + 1) % 2 == 0 ? -1 : 1);
    }
  }
}

TEST(Affine, Errors) {
  EXPECT_EQ(code_of([] { (void)affine_modified_char_poly_direct(Family::AffD, 3); }), ErrorCode::range);
  EXPECT_EQ(code_of([] { (void)affine_modified_char_poly_recurrence(Family::A, 3); }), ErrorCode::range);
}
