#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxchar/polynomial.hpp"

namespace coxchar {

using Index = std::uint32_t;

// Finite ranked poset given by its upward cover relation. Element indices
// form a linear extension: rank is nondecreasing in the index.
class RankedPoset {
public:
  RankedPoset() = default;
  RankedPoset(std::vector<int> ranks, std::vector<std::vector<Index>> covers_up);

  std::size_t size() const { return ranks_.size(); }
  int rank(Index i) const { return ranks_[i]; }
  int max_rank() const;
  const std::vector<Index>& covers_up(Index i) const { return up_[i]; }
  const std::vector<Index>& covers_down(Index i) const { return down_[i]; }

  // Unique minimal / maximal element, if any.
  std::optional<Index> bottom() const;
  std::optional<Index> top() const;

  // {t : u <= t, rank(t) <= max_rank}, ascending.
  std::vector<Index> upper_set(Index u, int max_rank) const;
  std::vector<Index> upper_set(Index u) const { return upper_set(u, max_rank()); }
  // {t : t <= w, rank(t) >= min_rank}, ascending.
  std::vector<Index> lower_set(Index w, int min_rank = 0) const;
  // Reachability over covers.
  bool leq(Index u, Index w) const;
  std::vector<Index> interval(Index u, Index w) const;

  // Subposet on `members` (ascending), re-ranked so the minimum rank is 0.
  // Covers between members are kept; this is the induced order when
  // `members` is convex, which holds for intervals.
  RankedPoset induced(const std::vector<Index>& members) const;

private:
  std::vector<int> ranks_;
  std::vector<std::vector<Index>> up_;
  std::vector<std::vector<Index>> down_;
};

// Cartesian product; element (i, j) of the result is returned by pair_index.
struct ProductPoset {
  RankedPoset poset;
  std::vector<std::pair<Index, Index>> factors; // result index -> (i, j)
};
ProductPoset product(const RankedPoset& p, const RankedPoset& q);

// mu(u, t) for every t (0 where t is not above u).
using MobiusTable = std::vector<std::int64_t>;
MobiusTable mobius_from(const RankedPoset& poset, Index u);
// mu(0, t); requires a bottom element.
MobiusTable mobius_recursive(const RankedPoset& poset);

// sum_t mu(0, t) q^(r(P) - r(t)).
IntPolynomial char_poly_of_poset(const RankedPoset& poset);

} // namespace coxchar
