#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxchar/group_element.hpp"

namespace coxchar::verify {

// Outcome of one oracle comparison. `cases` counts the individual
// comparisons; `detail` holds the first mismatch (or a summary).
struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;
  double seconds = 0.0;
};

// closed-form mu == recursive mu on every comparable pair
CheckResult mobius(Model model, int rank);
// char_poly_interval_decomposed == poset polynomial on `samples` random comparable pairs
CheckResult interval_decomposition(Model model, int rank, int samples, std::uint64_t seed = 20240611);
// every I <= J: filtered descent class == [w_0(I), w_0 w_0(J^c)], and the
// right descents of w_0 w_0(J^c) w_0(I) equal (J u I+) \ I on the graph
CheckResult descent_classes(Model model, int rank);
// type A: descent_class_char_poly == poset polynomial for every I <= J
CheckResult descent_class_polynomials(int rank);
// fixed_descent_formula == descent_class_char_poly == poset polynomial for every
// interior I of A_n, n <= max_rank, plus the n = 3, I = {3} boundary case
CheckResult fixed_descent(int max_rank);
// alternating_char_poly(n) == poset polynomial of Alt_n inside S_n
CheckResult alternating(int min_n, int max_n);
// subset counts vs series, series extraction vs subset sum, chi_hat vs reversed chi,
// quotient and reciprocal re-multiplication
CheckResult generating_functions(int max_brute, int max_extract);
// affine direct == recurrence for A~ B~ C~ D~ up to max_rank, plus spot values
CheckResult affine(int max_rank);
// joins of all pairs, join(w_0(I), w_0(J)) = w_0(I u J), max parabolic below w
CheckResult lattice(Model model, int rank);
// lower interval isomorphism on every comparable pair
CheckResult lower_intervals(Model model, int rank);
// chi(A_1 x A_2), chi(A_2 x A_2) from explicit product posets
CheckResult products();
// BFS depth == closed-form length, group order, D_L(w) == D_R(w^-1)
CheckResult lengths(Model model, int rank);
// poset == subset sum == decomposed [e, w_0] == series extraction
CheckResult four_way(Model model, int rank);

struct SuiteOptions {
  int max_a = 5;
  int max_bd = 4;
};

// Names accepted by run_suite, in table order ("all" runs each).
const std::vector<std::string>& suite_names();
// Throws Error{range} for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options);

// Fixed-width table of results, one row per check.
std::string format_table(const std::vector<CheckResult>& results);

} // namespace coxchar::verify
