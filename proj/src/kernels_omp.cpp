#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coxchar/error.hpp"
#include "coxchar/kernels.hpp"

namespace coxchar::kernels {

int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::int64_t> subset_sum_parallel(const CoxeterGraph& graph, SubsetScope scope, int threads) {
  const int m = graph.node_count();
  const int lo = graph.nodes().min();
  if (m > 62) throw Error(ErrorCode::budget, "subset iteration limited to 62 generators");
  if (scope == SubsetScope::all && is_affine(graph.family())) {
    throw Error(ErrorCode::unclassifiable, "the full generator set of an affine group has no longest element");
  }
  const std::size_t bins = static_cast<std::size_t>(m) * static_cast<std::size_t>(m) + 1;
  const std::int64_t end = std::int64_t{1} << m;
  const std::int64_t stop = scope == SubsetScope::proper ? end - 1 : end;
  std::vector<std::int64_t> counts(bins, 0);
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
  {
    std::vector<std::int64_t> local(bins, 0);
#ifdef _OPENMP
#pragma omp for schedule(static, 4096) nowait
#endif
    for (std::int64_t j = 0; j < stop; ++j) {
      const auto bits = static_cast<std::uint64_t>(j);
      const auto l = parabolic_w0_length(graph, GeneratorSet(bits << lo));
      local[static_cast<std::size_t>(l)] += (std::popcount(bits) % 2 == 0) ? 1 : -1;
    }
#ifdef _OPENMP
#pragma omp critical(coxchar_subset_merge)
#endif
    for (std::size_t b = 0; b < bins; ++b) counts[b] += local[b];
  }
  (void)threads;
  return counts;
}

} // namespace coxchar::kernels
