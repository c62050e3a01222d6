#include "coxchar/series.hpp"

#include <sstream>

#include "json.hpp"

namespace coxchar {

BivariatePoly::BivariatePoly(long long constant) {
  if (constant != 0) terms_.emplace(Key{0, 0}, BigInt(constant));
}

BivariatePoly BivariatePoly::monomial(std::int64_t y_exp, std::int64_t z_exp, BigInt coefficient) {
  BivariatePoly p;
  p.add_term(y_exp, z_exp, coefficient);
  return p;
}

BigInt BivariatePoly::coefficient(std::int64_t y_exp, std::int64_t z_exp) const {
  auto it = terms_.find(Key{y_exp, z_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariatePoly::add_term(std::int64_t y_exp, std::int64_t z_exp, const BigInt& coefficient) {
  if (y_exp < 0 || z_exp < 0) throw Error(ErrorCode::range, "negative exponent in bivariate polynomial");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(Key{y_exp, z_exp}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return r;
}

BivariatePoly operator-(BivariatePoly a) {
  for (auto& [key, c] : a.terms_) c = -c;
  return a;
}

IntPolynomial BivariatePoly::specialize() const {
  IntPolynomial p;
  for (const auto& [key, c] : terms_) p.add_term(key.second, key.first % 2 == 0 ? BigInt(c) : BigInt(-c));
  return p;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = key.first == 0 && key.second == 0;
    if (magnitude != 1 || constant) out << magnitude;
    auto var = [&](char name, std::int64_t e) {
      if (e == 0) return;
      out << name;
      if (e > 1) out << '^' << e;
    };
    var('y', key.first);
    var('z', key.second);
  }
  return out.str();
}

namespace {

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

template <class F>
TrivariateSeries monomial_series(std::size_t order, std::size_t from, F z_exponent) {
  TrivariateSeries s(order);
  for (std::size_t n = from; n < order; ++n) {
    const auto k = static_cast<std::int64_t>(n);
    s[n] = BivariatePoly::monomial(k, z_exponent(k));
  }
  return s;
}

void require_finite_family(Family family) {
  if (family != Family::A && family != Family::B && family != Family::D) {
    throw Error(ErrorCode::range, "generating functions cover A, B and D only");
  }
}

template <class S>
S numerator_from(Family family, const S& p, const S& q, const S& r) {
  switch (family) {
  case Family::A: return p;
  case Family::B: return q;
  default: break;
  }
  const S p_minus_1 = p - S::one(p.order());
  return p.shifted(2) + p_minus_1.shifted(1) + p_minus_1.shifted(1) + r;
}

template <class S>
S denominator_from(const S& p) {
  return S::one(p.order()) - p.shifted(1);
}

QSeries specialize(const TrivariateSeries& s) {
  QSeries out(s.order());
  for (std::size_t n = 0; n < s.order(); ++n) out[n] = s[n].specialize();
  return out;
}

} // namespace

TrivariateSeries series_P(std::size_t order) {
  return monomial_series(order, 0, [](std::int64_t n) { return binom2(n + 1); });
}

TrivariateSeries series_Q(std::size_t order) {
  return monomial_series(order, 0, [](std::int64_t n) { return n * n; });
}

TrivariateSeries series_R(std::size_t order) {
  return monomial_series(order, 2, [](std::int64_t n) { return n * n - n; });
}

TrivariateSeries series_numerator(Family family, std::size_t order) {
  require_finite_family(family);
  return numerator_from(family, series_P(order), series_Q(order), series_R(order));
}

TrivariateSeries series_denominator(std::size_t order) { return denominator_from(series_P(order)); }

TrivariateSeries series_T(Family family, std::size_t order) {
  return series_numerator(family, order) * series_denominator(order).reciprocal();
}

BivariatePoly count_subsets_brute(Family family, int n) {
  require_finite_family(family);
  if (n < 0) throw Error(ErrorCode::range, "rank must be nonnegative");
  if (n > brute_subset_cap) {
    throw Error(ErrorCode::budget, "brute-force subset count capped at rank " + std::to_string(brute_subset_cap));
  }
  if (n == 0) return BivariatePoly(1);
  if (family == Family::D && n < 2) throw Error(ErrorCode::range, "D_n needs n >= 2");
  const Family effective = (family == Family::B && n == 1) ? Family::A : family;
  const CoxeterGraph graph = CoxeterGraph::build(effective, n);
  const std::uint64_t lo = graph.nodes().min();
  BivariatePoly result;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
    const GeneratorSet subset(j << lo);
    std::int64_t length = 0;
    for (const auto& c : components_of(graph, subset).components) length += longest_length(c.type, c.rank);
    result.add_term(subset.size(), length, 1);
  }
  return result;
}

QSeries specialized_series_T(Family family, std::size_t order) {
  require_finite_family(family);
  const QSeries p = specialize(series_P(order));
  const QSeries numerator = numerator_from(family, p, specialize(series_Q(order)), specialize(series_R(order)));
  return numerator * denominator_from(p).reciprocal();
}

IntPolynomial extract_modified_charpoly(Family family, int n) {
  require_finite_family(family);
  if (n < 0) throw Error(ErrorCode::range, "rank must be nonnegative");
  if (family == Family::D && n < 2) {
    throw Error(ErrorCode::range, "T_D starts at x^2; D_" + std::to_string(n) + " is not covered");
  }
  return specialized_series_T(family, static_cast<std::size_t>(n) + 1)[static_cast<std::size_t>(n)];
}

std::string series_to_json(const TrivariateSeries& series) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : series.coefficients()) {
    nlohmann::ordered_json entry = nlohmann::ordered_json::array();
    for (const auto& [key, coef] : c.terms()) entry.push_back({key.first, key.second, coef.str()});
    out.push_back(std::move(entry));
  }
  return out.dump();
}

} // namespace coxchar
