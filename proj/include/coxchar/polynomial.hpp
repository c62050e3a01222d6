#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxchar {

using BigInt = boost::multiprecision::cpp_int;

// Exact sparse polynomial in q with nonnegative exponents. Zero coefficients
// are never stored.
class IntPolynomial {
public:
  using Terms = std::map<std::int64_t, BigInt>;

  IntPolynomial() = default;
  // Constant polynomial.
  IntPolynomial(long long constant); // NOLINT(google-explicit-constructor)
  // {{exponent, coefficient}, ...}
  IntPolynomial(std::initializer_list<std::pair<std::int64_t, long long>> terms);

  static IntPolynomial monomial(std::int64_t exponent, BigInt coefficient = 1);
  static IntPolynomial q() { return monomial(1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  std::int64_t degree() const;
  std::int64_t lowest_exponent() const;
  BigInt coefficient(std::int64_t exponent) const;
  BigInt leading_coefficient() const;

  void add_term(std::int64_t exponent, const BigInt& coefficient);

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const BigInt& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(IntPolynomial a) { return a *= BigInt(-1); }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(unsigned exponent) const;
  // Multiplication by q^shift (shift may be negative if no exponent drops below 0).
  IntPolynomial shifted(std::int64_t shift) const;
  // q^top * p(1/q); requires top >= degree().
  IntPolynomial reversed(std::int64_t top) const;
  BigInt evaluate(const BigInt& at) const;

  // "q^6 - 3q^5 + q^4 + 2q^3 - 1", terms by descending exponent; "0" if zero.
  std::string to_string() const;
  // {"variable":"q","terms":[[6,"1"],[5,"-3"],...]} with descending exponents.
  std::string to_json() const;

private:
  Terms terms_;
};

} // namespace coxchar
