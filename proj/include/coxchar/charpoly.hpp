#pragma once

#include <cstdint>

#include "coxchar/coxeter_graph.hpp"
#include "coxchar/group_element.hpp"
#include "coxchar/kernels.hpp"
#include "coxchar/polynomial.hpp"

namespace coxchar {

enum class Kernel { serial, parallel };

struct SubsetOptions {
  int max_rank = 62; // 2^rank subsets are visited
  Kernel kernel = Kernel::parallel;
};

// Characteristic polynomial of the weak order on A_n, B_n or D_n from
//   chi_W(q) = sum_{J subset S} (-1)^{|J|} q^{l(w_0) - l(w_0(J))}.
// Rank 0 (A, B) gives 1 and B_1 is A_1.
IntPolynomial char_poly_subset_sum(Family family, int rank, SubsetOptions options = {});

// chi_hat_W(q) = sum_{J subset S} (-1)^{|J|} q^{l(w_0(J))}, same rank conventions.
IntPolynomial modified_char_poly(Family family, int rank, SubsetOptions options = {});

// l(w_0) of the finite group, with the low-rank conventions above.
std::int64_t longest_length(Family family, int rank);

// Characteristic polynomial of [u, w] as
//   q^{l(w u^-1) - l(w_0(K))} prod_i chi_{K_i}(q),  K = D_R(w u^-1).
// `graph` must be the finite graph matching the elements' model.
IntPolynomial char_poly_interval_decomposed(const CoxeterGraph& graph, const GroupElement& u, const GroupElement& w);

// Type A_n descent class D_I^J through D_R(w_0 w_0(J^c) w_0(I)) = (J u I+) \ I.
IntPolynomial descent_class_char_poly(int n, GeneratorSet lower, GeneratorSet upper);

// Runs of [n] \ I and the counts used by the product formula.
struct RunProfile {
  int singles = 0; // |M| = 1
  int pairs = 0;   // |M| = 2
  int longer = 0;  // |M| >= 3
  bool interior = true;
};
RunProfile run_profile(int n, GeneratorSet descents);

// q^{d-a-2c-3b} (q-1)^{a+2c+b} (q^2-q-1)^b for the pure class D_I of A_n.
// Only valid when every run of size >= 2 avoids 1 and n and I is nonempty;
// otherwise throws Error{interior_condition}.
IntPolynomial fixed_descent_formula(int n, GeneratorSet descents);

// Alternating permutations of [n]: q^{C(n-1,2) - floor(n/2)} (q-1)^{floor(n/2)}, n >= 3; 1 for n = 2.
IntPolynomial alternating_char_poly(int n);
// {2, 4, ...} intersected with [n-1]
GeneratorSet alternating_descent_set(int n);

// Sum over proper subsets J of the affine generator set.
IntPolynomial affine_modified_char_poly_direct(Family family, int rank, SubsetOptions options = {});
// Finite-family expansion of the affine modified characteristic polynomial.
IntPolynomial affine_modified_char_poly_recurrence(Family family, int rank);

// Signed length histogram -> polynomial, either sum c_l q^l or sum c_l q^{top-l}.
IntPolynomial polynomial_from_counts(const std::vector<std::int64_t>& counts);
IntPolynomial reversed_polynomial_from_counts(const std::vector<std::int64_t>& counts, std::int64_t top);

} // namespace coxchar
