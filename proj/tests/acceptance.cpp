// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "coxchar/verify.hpp"

using namespace coxchar;
using coxchar::verify::CheckResult;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<std::vector<CheckResult>()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "alternating formula vs S_n poset, 3 <= n <= 7", 30.0,
       [] { return std::vector{verify::alternating(3, 7)}; }},
      {2, "Mobius closed form vs recursion, all pairs of A_4, B_3, D_4", 60.0,
       [] {
         return std::vector{verify::mobius(Model::PermA, 4), verify::mobius(Model::SignedB, 3),
                            verify::mobius(Model::EvenSignedD, 4)};
       }},
      {3, "interval decomposition, 500 sampled pairs in A_5, B_4, D_4", 120.0,
       [] {
         return std::vector{verify::interval_decomposition(Model::PermA, 5, 500),
                            verify::interval_decomposition(Model::SignedB, 4, 500),
                            verify::interval_decomposition(Model::EvenSignedD, 4, 500)};
       }},
      {4, "descent class = interval and I+ descents, all I <= J in A_4, B_3", 120.0,
       [] {
         return std::vector{verify::descent_classes(Model::PermA, 4), verify::descent_classes(Model::SignedB, 3)};
       }},
      {5, "fixed-descent formula, interior I, n <= 5, plus n=3 I={3}", 120.0,
       [] { return std::vector{verify::fixed_descent(5)}; }},
      {6, "generating functions: brute n <= 10, extraction n <= 12, reversal", 30.0,
       [] { return std::vector{verify::generating_functions(10, 12)}; }},
      {7, "affine direct vs recurrence up to rank 8, spot values", 10.0,
       [] { return std::vector{verify::affine(8)}; }},
      {8, "joins, parabolic joins, max parabolic below, lower-interval isomorphism", 120.0,
       [] {
         return std::vector{verify::lattice(Model::PermA, 4), verify::lattice(Model::SignedB, 3),
                            verify::lower_intervals(Model::PermA, 3), verify::lower_intervals(Model::SignedB, 3)};
       }},
      {9, "product posets A_1xA_2, A_2xA_2", 1.0, [] { return std::vector{verify::products()}; }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const auto results = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = seconds <= c.limit_seconds;
    std::uint64_t cases = 0;
    std::string detail;
    for (const auto& r : results) {
      cases += r.cases;
      if (!r.passed && detail.empty()) detail = r.name + ": " + r.detail;
      ok = ok && r.passed;
    }
    if (seconds > c.limit_seconds && detail.empty()) detail = "over the time limit";
    std::printf("%s criterion %d: %s (%llu cases, %.2fs / %.0fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title.c_str(), static_cast<unsigned long long>(cases), seconds, c.limit_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
