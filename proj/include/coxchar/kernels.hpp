#pragma once

#include <cstdint>
#include <vector>

#include "coxchar/coxeter_graph.hpp"

namespace coxchar::kernels {

enum class SubsetScope { all, proper };

// Signed length histogram of the parabolic longest elements:
//   counts[l] = sum over J (of the graph's node set) with l(w_0(J)) = l of (-1)^{|J|}.
// With SubsetScope::proper the full node set is skipped.
//
// The serial kernel visits subsets by popcount, then by binary value (Gosper
// order); the parallel kernel splits the binary range across OpenMP threads
// and merges per-thread histograms. Both are exact and must agree.
std::vector<std::int64_t> subset_sum_serial(const CoxeterGraph& graph, SubsetScope scope);
std::vector<std::int64_t> subset_sum_parallel(const CoxeterGraph& graph, SubsetScope scope, int threads = 0);

// Number of OpenMP threads the parallel kernel would use (1 without OpenMP).
int available_threads();

} // namespace coxchar::kernels
