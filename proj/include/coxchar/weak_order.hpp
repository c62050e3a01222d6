#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxchar/group_element.hpp"
#include "coxchar/polynomial.hpp"
#include "coxchar/ranked_poset.hpp"

namespace coxchar {

struct EnumerationBudget {
  std::uint64_t max_elements = 1'000'000;
  // Receives a memory estimate when a group above 10^6 elements is built.
  std::ostream* log = nullptr;
};

// Rough bytes needed to hold a full group poset of the given order.
std::uint64_t estimated_poset_bytes(Model model, int rank);

// Left weak order on a finite classical group, or on an interval of it.
// Elements are interned in BFS order, so indices are rank ordered.
class WeakOrderPoset {
public:
  // BFS over the Cayley graph for left multiplication; rank = BFS depth.
  static WeakOrderPoset build(Model model, int rank, EnumerationBudget budget = {});

  Model model() const { return model_; }
  int rank() const { return rank_; }
  std::size_t size() const { return elements_.size(); }
  bool is_full_group() const { return full_group_; }

  const RankedPoset& order() const { return order_; }
  const GroupElement& element(Index i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::optional<Index> find(const GroupElement& w) const;
  // Throws Error{range} when w is not a member.
  Index index_of(const GroupElement& w) const;

  Index bottom() const { return 0; }
  std::optional<Index> top() const { return order_.top(); }
  int rank_of(Index i) const { return order_.rank(i); }
  bool leq(Index u, Index w) const { return order_.leq(u, w); }

  // [u, w] as its own poset, re-ranked from u. Throws Error{not_comparable}.
  WeakOrderPoset interval(Index u, Index w) const;

  // "rank <r>: <window> -> covers: <window>, <window>" per element.
  std::string dump() const;

private:
  WeakOrderPoset() = default;

  Model model_{};
  int rank_ = 0;
  bool full_group_ = false;
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, Index> index_;
  RankedPoset order_;
};

// Whether t -> t u^{-1} maps [u, w] isomorphically (with ranks) onto [e, w u^{-1}].
// `poset` must be a full group.
bool lower_interval_isomorphism_check(const WeakOrderPoset& poset, Index u, Index w);

// Greatest lower / least upper bound. Throws Error{non_lattice} if absent.
Index meet(const WeakOrderPoset& poset, Index x, Index y);
Index join(const WeakOrderPoset& poset, Index x, Index y);

// mu(u, w) = (-1)^{|J|} if w u^{-1} = w_0(J), else 0.
int mobius_closed_form(const WeakOrderPoset& poset, Index u, Index w);
// mu(u, w) by recursion on [u, w].
std::int64_t mobius_pair_recursive(const WeakOrderPoset& poset, Index u, Index w);

// w_0(D_R(w)).
Index max_parabolic_below(const WeakOrderPoset& poset, Index w);

// {w : I <= D_R(w) <= J}, ascending. `poset` must be a full group.
std::vector<Index> descent_class(const WeakOrderPoset& poset, GeneratorSet lower, GeneratorSet upper);
// Endpoints w_0(I) and w_0 w_0(J^c) of the descent class interval.
std::pair<GroupElement, GroupElement> descent_class_endpoints(Model model, int rank, GeneratorSet lower,
                                                              GeneratorSet upper);

IntPolynomial char_poly_of_poset(const WeakOrderPoset& poset);

} // namespace coxchar
