#include <gtest/gtest.h>

#include "coxchar/error.hpp"
#include "coxchar/polynomial.hpp"

using namespace coxchar;

TEST(Polynomial, Format) {
  const IntPolynomial p({{6, 1}, {5, -3}, {4, 1}, {3, 2}, {0, -1}});
  EXPECT_EQ(p.to_string(), "q^6 - 3q^5 + q^4 + 2q^3 - 1");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
  EXPECT_EQ(IntPolynomial({{1, -1}, {0, 1}}).to_string(), "-q + 1");
  EXPECT_EQ(IntPolynomial(7).to_string(), "7");
}

TEST(Polynomial, Json) {
  const IntPolynomial p({{3, 1}, {2, -2}, {1, 1}});
  EXPECT_EQ(p.to_json(), R"({"variable":"q","terms":[[3,"1"],[2,"-2"],[1,"1"]]})");
  EXPECT_EQ(IntPolynomial().to_json(), R"({"variable":"q","terms":[]})");
}

TEST(Polynomial, NoStoredZeros) {
  IntPolynomial p({{2, 1}});
  p -= IntPolynomial({{2, 1}});
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.degree(), -1);
  EXPECT_EQ(p, IntPolynomial());
}

TEST(Polynomial, Arithmetic) {
  const IntPolynomial a({{1, 1}, {0, -1}});         // q - 1
  const IntPolynomial b({{2, 1}, {1, -1}, {0, -1}}); // q^2 - q - 1
  EXPECT_EQ(a * b, IntPolynomial({{3, 1}, {2, -2}, {0, 1}}));
  EXPECT_EQ(a.pow(3), IntPolynomial({{3, 1}, {2, -3}, {1, 3}, {0, -1}}));
  EXPECT_EQ(a.pow(0), IntPolynomial(1));
  EXPECT_EQ(a.shifted(2), IntPolynomial({{3, 1}, {2, -1}}));
  EXPECT_EQ(a.evaluate(1), 0);
  EXPECT_EQ(b.evaluate(3), 5);
  EXPECT_EQ(-a, IntPolynomial({{1, -1}, {0, 1}}));
}

TEST(Polynomial, Reversal) {
  const IntPolynomial chi({{3, 1}, {2, -2}, {0, 1}});
  EXPECT_EQ(chi.reversed(3), IntPolynomial({{0, 1}, {1, -2}, {3, 1}}));
  EXPECT_EQ(chi.reversed(3).reversed(3), chi);
  EXPECT_THROW(chi.reversed(2), Error);
}

TEST(Polynomial, NegativeExponentRejected) {
  EXPECT_THROW(IntPolynomial::monomial(-1), Error);
  EXPECT_THROW(IntPolynomial({{1, 1}}).shifted(-2), Error);
}

TEST(Polynomial, BigCoefficients) {
  IntPolynomial p({{1, 1}, {0, 1}});
  const IntPolynomial big = p.pow(200);
  EXPECT_EQ(big.leading_coefficient(), 1);
  EXPECT_EQ(big.coefficient(100).str(), "90548514656103281165404177077484163874504589675413336841320");
  EXPECT_EQ(big.evaluate(1), BigInt(1) << 200);
}
