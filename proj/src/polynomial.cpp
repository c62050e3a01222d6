#include "coxchar/polynomial.hpp"

#include "json.hpp"

#include "coxchar/error.hpp"

namespace coxchar {

IntPolynomial::IntPolynomial(long long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

IntPolynomial::IntPolynomial(std::initializer_list<std::pair<std::int64_t, long long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

IntPolynomial IntPolynomial::monomial(std::int64_t exponent, BigInt coefficient) {
  IntPolynomial p;
  p.add_term(exponent, coefficient);
  return p;
}

std::int64_t IntPolynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

std::int64_t IntPolynomial::lowest_exponent() const { return terms_.empty() ? -1 : terms_.begin()->first; }

BigInt IntPolynomial::coefficient(std::int64_t exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt IntPolynomial::leading_coefficient() const { return terms_.empty() ? BigInt(0) : terms_.rbegin()->second; }

void IntPolynomial::add_term(std::int64_t exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  if (exponent < 0) throw Error(ErrorCode::range, "negative exponent " + std::to_string(exponent));
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) { return *this = *this * other; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result(1);
  IntPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

IntPolynomial IntPolynomial::shifted(std::int64_t shift) const {
  IntPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e + shift, c);
  return out;
}

IntPolynomial IntPolynomial::reversed(std::int64_t top) const {
  if (top < degree()) {
    throw Error(ErrorCode::range, "reversal degree " + std::to_string(top) + " below polynomial degree " +
                                      std::to_string(degree()));
  }
  IntPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(top - e, c);
  return out;
}

BigInt IntPolynomial::evaluate(const BigInt& at) const {
  // Horner over the dense exponent range.
  BigInt acc = 0;
  std::int64_t current = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    while (current > it->first) {
      acc *= at;
      --current;
    }
    acc += it->second;
  }
  while (current > 0) {
    acc *= at;
    --current;
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || e == 0) out += magnitude.str();
    if (e >= 1) out += "q";
    if (e >= 2) out += "^" + std::to_string(e);
    first = false;
  }
  return out;
}

std::string IntPolynomial::to_json() const {
  nlohmann::ordered_json j;
  j["variable"] = "q";
  j["terms"] = nlohmann::ordered_json::array();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    j["terms"].push_back(nlohmann::ordered_json::array({it->first, it->second.str()}));
  }
  return j.dump();
}

} // namespace coxchar
