#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxchar/coxeter_graph.hpp"
#include "coxchar/error.hpp"
#include "coxchar/polynomial.hpp"

namespace coxchar {

// Sparse polynomial in (y, z), keyed by (y-exponent, z-exponent).
class BivariatePoly {
public:
  using Key = std::pair<std::int64_t, std::int64_t>;
  using Terms = std::map<Key, BigInt>;

  BivariatePoly() = default;
  BivariatePoly(long long constant); // NOLINT(google-explicit-constructor)
  static BivariatePoly monomial(std::int64_t y_exp, std::int64_t z_exp, BigInt coefficient = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(std::int64_t y_exp, std::int64_t z_exp) const;
  void add_term(std::int64_t y_exp, std::int64_t z_exp, const BigInt& coefficient);

  BivariatePoly& operator+=(const BivariatePoly& other);
  BivariatePoly& operator-=(const BivariatePoly& other);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(BivariatePoly a);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  // y = -1, z = q
  IntPolynomial specialize() const;
  // "1 + 2yz + y^2z^3", ascending keys
  std::string to_string() const;

private:
  Terms terms_;
};

// Power series in x with coefficients in C, exact modulo x^order.
template <class C>
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order) {
    if (order == 0) throw Error(ErrorCode::range, "truncation order must be at least 1");
  }

  std::size_t order() const { return coeffs_.size(); }
  const C& operator[](std::size_t n) const { return coeffs_.at(n); }
  C& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<C>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(a.order());
    a.check_same_order(b);
    for (std::size_t n = 0; n < a.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(a.order());
    a.check_same_order(b);
    for (std::size_t n = 0; n < a.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_same_order(b);
    const std::size_t order = a.order();
    TruncatedSeries r(order);
    for (std::size_t i = 0; i < order; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < order; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // x^k * this, truncated
  TruncatedSeries shifted(std::size_t k) const {
    TruncatedSeries r(order());
    for (std::size_t n = 0; n + k < order(); ++n) r.coeffs_[n + k] = coeffs_[n];
    return r;
  }

  // 1 / this; the constant term must be exactly 1.
  TruncatedSeries reciprocal() const {
    if (!(coeffs_[0] == C(1))) throw Error(ErrorCode::range, "reciprocal needs constant term 1");
    TruncatedSeries r(order());
    r.coeffs_[0] = C(1);
    for (std::size_t n = 1; n < order(); ++n) {
      C acc;
      for (std::size_t k = 1; k <= n; ++k) {
        if (coeffs_[k].is_zero() || r.coeffs_[n - k].is_zero()) continue;
        acc += coeffs_[k] * r.coeffs_[n - k];
      }
      r.coeffs_[n] = -acc;
    }
    return r;
  }

  static TruncatedSeries one(std::size_t order) {
    TruncatedSeries r(order);
    r.coeffs_[0] = C(1);
    return r;
  }

private:
  void check_same_order(const TruncatedSeries& other) const {
    if (order() != other.order()) throw Error(ErrorCode::range, "truncation orders differ");
  }

  std::vector<C> coeffs_;
};

using TrivariateSeries = TruncatedSeries<BivariatePoly>;
using QSeries = TruncatedSeries<IntPolynomial>;

// P = sum_{n>=0} x^n y^n z^{C(n+1,2)}, Q = sum x^n y^n z^{n^2},
// R = sum_{n>=2} x^n y^n z^{n^2-n}; all modulo x^order.
TrivariateSeries series_P(std::size_t order);
TrivariateSeries series_Q(std::size_t order);
TrivariateSeries series_R(std::size_t order);

// T_A = P/(1-xP), T_B = Q/(1-xP), T_D = (x^2 P + 2x(P-1) + R)/(1-xP).
TrivariateSeries series_T(Family family, std::size_t order);
// The numerator of series_T for the family (so series_T * (1 - xP) == numerator).
TrivariateSeries series_numerator(Family family, std::size_t order);
// 1 - xP
TrivariateSeries series_denominator(std::size_t order);

// sum_{J subset S} y^{|J|} z^{l(w_0(J))}, enumerated; n <= 20.
inline constexpr int brute_subset_cap = 20;
BivariatePoly count_subsets_brute(Family family, int n);

// Same series after y = -1, z = q, built directly in one variable.
QSeries specialized_series_T(Family family, std::size_t order);
// x^n coefficient of specialized_series_T, i.e. chi_hat of the family at rank n.
IntPolynomial extract_modified_charpoly(Family family, int n);

// [[[y, z, "c"], ...], ...] indexed by x-exponent
std::string series_to_json(const TrivariateSeries& series);

} // namespace coxchar
