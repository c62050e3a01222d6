#include "coxchar/charpoly.hpp"

#include "coxchar/error.hpp"

namespace coxchar {

IntPolynomial polynomial_from_counts(const std::vector<std::int64_t>& counts) {
  IntPolynomial p;
  for (std::size_t l = 0; l < counts.size(); ++l) p.add_term(static_cast<std::int64_t>(l), counts[l]);
  return p;
}

IntPolynomial reversed_polynomial_from_counts(const std::vector<std::int64_t>& counts, std::int64_t top) {
  IntPolynomial p;
  for (std::size_t l = 0; l < counts.size(); ++l) {
    if (counts[l] != 0) p.add_term(top - static_cast<std::int64_t>(l), counts[l]);
  }
  return p;
}

namespace {

void require_finite(Family family) {
  if (is_affine(family)) {
    throw Error(ErrorCode::range, std::string(to_string(family)) + " is affine; use the affine routines");
  }
}

// Effective family after the low-rank identifications B_1 = A_1.
Family normalized(Family family, int rank) { return (family == Family::B && rank == 1) ? Family::A : family; }

void check_finite_rank(Family family, int rank, const SubsetOptions& options) {
  require_finite(family);
  const int lowest = family == Family::D ? 2 : 0;
  if (rank < lowest) {
    throw Error(ErrorCode::range, std::string(to_string(family)) + "_" + std::to_string(rank) +
                                      ": rank must be at least " + std::to_string(lowest));
  }
  if (rank > options.max_rank) {
    throw Error(ErrorCode::budget, std::string(to_string(family)) + "_" + std::to_string(rank) +
                                       ": subset sum limited to rank " + std::to_string(options.max_rank) +
                                       "; use series extraction (series -f " + std::string(to_string(family)) +
                                       ")");
  }
}

std::vector<std::int64_t> finite_counts(Family family, int rank, const SubsetOptions& options) {
  if (rank == 0) return {1};
  const CoxeterGraph graph = CoxeterGraph::build(normalized(family, rank), rank);
  return options.kernel == Kernel::serial ? kernels::subset_sum_serial(graph, kernels::SubsetScope::all)
                                          : kernels::subset_sum_parallel(graph, kernels::SubsetScope::all);
}

ComponentType component_type(Family family) {
  switch (family) {
  case Family::A: return ComponentType::A;
  case Family::B: return ComponentType::B;
  case Family::D: return ComponentType::D;
  default: break;
  }
  throw Error(ErrorCode::range, "no component type for affine family");
}

Family family_of(ComponentType type) {
  switch (type) {
  case ComponentType::A: return Family::A;
  case ComponentType::B: return Family::B;
  case ComponentType::D: return Family::D;
  }
  return Family::A;
}

std::int64_t binom2(std::int64_t n) { return n * (n - 1) / 2; }

} // namespace

std::int64_t longest_length(Family family, int rank) {
  require_finite(family);
  if (rank == 0) return 0;
  return longest_length(component_type(normalized(family, rank)), rank);
}

IntPolynomial char_poly_subset_sum(Family family, int rank, SubsetOptions options) {
  check_finite_rank(family, rank, options);
  return reversed_polynomial_from_counts(finite_counts(family, rank, options), longest_length(family, rank));
}

IntPolynomial modified_char_poly(Family family, int rank, SubsetOptions options) {
  check_finite_rank(family, rank, options);
  return polynomial_from_counts(finite_counts(family, rank, options));
}

IntPolynomial char_poly_interval_decomposed(const CoxeterGraph& graph, const GroupElement& u,
                                            const GroupElement& w) {
  if (is_affine(graph.family()) || model_for(graph.family()) != u.model() || graph.rank() != u.rank()) {
    throw Error(ErrorCode::model_mismatch, "graph " + std::string(to_string(graph.family())) + "_" +
                                               std::to_string(graph.rank()) + " does not match " +
                                               std::string(to_string(u.model())) + "(" +
                                               std::to_string(u.rank()) + ")");
  }
  const GroupElement v = multiply(w, inverse(u));
  const int lv = length(v);
  // Left weak order: u <= w iff l(w) = l(w u^-1) + l(u).
  if (length(w) != lv + length(u)) {
    throw Error(ErrorCode::not_comparable, u.to_string() + " is not below " + w.to_string());
  }
  const auto report = components_of(graph, right_descents(v));
  IntPolynomial chi(1);
  std::int64_t top = 0;
  for (const auto& c : report.components) {
    chi *= char_poly_subset_sum(family_of(c.type), c.rank);
    top += c.w0_length;
  }
  return chi.shifted(lv - top);
}

IntPolynomial descent_class_char_poly(int n, GeneratorSet lower, GeneratorSet upper) {
  const CoxeterGraph graph = CoxeterGraph::build(Family::A, n);
  const GeneratorSet all = graph.nodes();
  if (!upper.is_subset_of(all)) {
    throw Error(ErrorCode::range, "descent set " + upper.to_string() + " outside [" + std::to_string(n) + "]");
  }
  if (!lower.is_subset_of(upper)) {
    throw Error(ErrorCode::range, "descent class needs I subset of J, got I=" + lower.to_string() +
                                      " J=" + upper.to_string());
  }
  const std::int64_t d =
      binom2(n + 1) - parabolic_w0_length(graph, all - upper) - parabolic_w0_length(graph, lower);
  const GeneratorSet k = (upper | neighbors_in_graph(graph, lower)) - lower;
  const auto report = components_of(graph, k);
  IntPolynomial chi(1);
  std::int64_t top = 0;
  for (const auto& c : report.components) {
    chi *= char_poly_subset_sum(family_of(c.type), c.rank);
    top += c.w0_length;
  }
  return chi.shifted(d - top);
}

RunProfile run_profile(int n, GeneratorSet descents) {
  RunProfile profile;
  int i = 1;
  while (i <= n) {
    if (descents.contains(i)) {
      ++i;
      continue;
    }
    const int start = i;
    while (i <= n && !descents.contains(i)) ++i;
    const int size = i - start;
    if (size == 1) {
      ++profile.singles;
    } else if (size == 2) {
      ++profile.pairs;
    } else {
      ++profile.longer;
    }
    if (size >= 2 && (start == 1 || i - 1 == n)) profile.interior = false;
  }
  if (descents.empty()) profile.interior = false;
  return profile;
}

IntPolynomial fixed_descent_formula(int n, GeneratorSet descents) {
  const CoxeterGraph graph = CoxeterGraph::build(Family::A, n);
  if (!descents.is_subset_of(graph.nodes())) {
    throw Error(ErrorCode::range, "descent set " + descents.to_string() + " outside [" + std::to_string(n) + "]");
  }
  const RunProfile runs = run_profile(n, descents);
  if (!runs.interior) {
    throw Error(ErrorCode::interior_condition,
                "I=" + descents.to_string() + " in A_" + std::to_string(n) +
                    ": a run of [n]\\I with two or more elements touches 1 or n (or I is empty); "
                    "use the general descent-class route");
  }
  const GeneratorSet all = graph.nodes();
  const std::int64_t d =
      binom2(n + 1) - parabolic_w0_length(graph, all - descents) - parabolic_w0_length(graph, descents);
  const std::int64_t a = runs.singles;
  const std::int64_t b = runs.pairs;
  const std::int64_t c = runs.longer;
  const IntPolynomial q_minus_1({{1, 1}, {0, -1}});
  const IntPolynomial a2_factor({{2, 1}, {1, -1}, {0, -1}});
  return (q_minus_1.pow(static_cast<unsigned>(a + 2 * c + b)) * a2_factor.pow(static_cast<unsigned>(b)))
      .shifted(d - a - 2 * c - 3 * b);
}

GeneratorSet alternating_descent_set(int n) {
  GeneratorSet s;
  for (int i = 2; i <= n - 1; i += 2) s.insert(i);
  return s;
}

IntPolynomial alternating_char_poly(int n) {
  if (n < 2) throw Error(ErrorCode::range, "alternating permutations need n >= 2, got " + std::to_string(n));
  if (n == 2) return IntPolynomial(1); // Alt_2 = {12}
  const std::int64_t half = n / 2;
  const IntPolynomial q_minus_1({{1, 1}, {0, -1}});
  return q_minus_1.pow(static_cast<unsigned>(half)).shifted(binom2(n - 1) - half);
}

namespace {

void check_affine(Family family, int rank, const SubsetOptions* options) {
  if (!is_affine(family)) throw Error(ErrorCode::range, std::string(to_string(family)) + " is not affine");
  if (rank < min_rank(family)) {
    throw Error(ErrorCode::range, std::string(to_string(family)) + "_" + std::to_string(rank) +
                                      ": rank must be at least " + std::to_string(min_rank(family)));
  }
  if (options != nullptr && rank + 1 > options->max_rank) {
    throw Error(ErrorCode::budget, std::string(to_string(family)) + "_" + std::to_string(rank) +
                                       ": subset sum limited to " + std::to_string(options->max_rank) +
                                       " generators");
  }
}

// chi_hat of the finite family with the conventions chi_hat_{A_i} = chi_hat_{B_i} = 1
// for i <= 0 and chi_hat_{D_i} = 1 for i <= 1.
IntPolynomial finite_term(Family family, int rank) {
  if (rank <= 0 || (family == Family::D && rank <= 1)) return IntPolynomial(1);
  return modified_char_poly(family, rank);
}

IntPolynomial signed_q_power(std::int64_t sign_exponent, std::int64_t q_exponent, std::int64_t multiplicity = 1) {
  return IntPolynomial::monomial(q_exponent, (sign_exponent % 2 == 0 ? 1 : -1) * multiplicity);
}

} // namespace

IntPolynomial affine_modified_char_poly_direct(Family family, int rank, SubsetOptions options) {
  check_affine(family, rank, &options);
  const CoxeterGraph graph = CoxeterGraph::build(family, rank);
  const auto counts = options.kernel == Kernel::serial
                          ? kernels::subset_sum_serial(graph, kernels::SubsetScope::proper)
                          : kernels::subset_sum_parallel(graph, kernels::SubsetScope::proper);
  return polynomial_from_counts(counts);
}

IntPolynomial affine_modified_char_poly_recurrence(Family family, int rank) {
  check_affine(family, rank, nullptr);
  const std::int64_t n = rank;
  IntPolynomial chi;
  switch (family) {
  case Family::AffA:
    chi = finite_term(Family::A, rank);
    for (std::int64_t k = 1; k <= n; ++k) {
      chi += signed_q_power(k, binom2(k + 1), k) * finite_term(Family::A, static_cast<int>(n - k - 1));
    }
    break;
  case Family::AffB:
    chi = finite_term(Family::B, rank);
    for (std::int64_t k = 0; k <= n; ++k) {
      chi += signed_q_power(k, k * (k - 1)) * finite_term(Family::B, static_cast<int>(n - k));
    }
    break;
  case Family::AffC:
    for (std::int64_t k = 0; k <= n; ++k) {
      chi += signed_q_power(k, k * k) * finite_term(Family::B, static_cast<int>(n - k));
    }
    break;
  case Family::AffD:
    chi = finite_term(Family::D, rank) + signed_q_power(n, n * (n - 1));
    for (std::int64_t k = 0; k <= n; ++k) {
      chi += signed_q_power(k, k * (k - 1)) * finite_term(Family::D, static_cast<int>(n - k));
    }
    break;
  default:
    break;
  }
  return chi;
}

} // namespace coxchar
