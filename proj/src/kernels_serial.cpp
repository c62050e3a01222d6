#include <bit>

#include "coxchar/error.hpp"
#include "coxchar/kernels.hpp"

namespace coxchar::kernels {

namespace {

// Largest l(w_0(J)) over subsets of m nodes is at most m^2 (type B_m).
std::size_t histogram_size(int m) { return static_cast<std::size_t>(m) * static_cast<std::size_t>(m) + 1; }

} // namespace

std::vector<std::int64_t> subset_sum_serial(const CoxeterGraph& graph, SubsetScope scope) {
  const int m = graph.node_count();
  const int lo = graph.nodes().min();
  if (m > 62) throw Error(ErrorCode::budget, "subset iteration limited to 62 generators");
  if (scope == SubsetScope::all && is_affine(graph.family())) {
    throw Error(ErrorCode::unclassifiable, "the full generator set of an affine group has no longest element");
  }
  std::vector<std::int64_t> counts(histogram_size(m), 0);
  for (int k = 0; k <= m; ++k) {
    if (k == m && scope == SubsetScope::proper) break;
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    if (k == 0) {
      counts[0] += sign;
      continue;
    }
    // Gosper's hack: all k-subsets of m bits in increasing binary value.
    std::uint64_t j = (std::uint64_t{1} << k) - 1;
    const std::uint64_t last = j << (m - k);
    for (;;) {
      const auto l = parabolic_w0_length(graph, GeneratorSet(j << lo));
      counts[static_cast<std::size_t>(l)] += sign;
      if (j == last) break;
      const std::uint64_t c = j & (~j + 1);
      const std::uint64_t r = j + c;
      j = (((r ^ j) >> 2) / c) | r;
    }
  }
  return counts;
}

} // namespace coxchar::kernels
