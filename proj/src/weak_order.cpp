#include "coxchar/weak_order.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "coxchar/error.hpp"

namespace coxchar {

std::uint64_t estimated_poset_bytes(Model model, int rank) {
  const std::uint64_t per_element = sizeof(GroupElement) * 2 + 64 + 8 * static_cast<std::uint64_t>(rank) * 2;
  return group_order(model, rank) * per_element;
}

WeakOrderPoset WeakOrderPoset::build(Model model, int rank, EnumerationBudget budget) {
  const GroupElement e = GroupElement::identity(model, rank);
  const std::uint64_t order = group_order(model, rank);
  if (order > budget.max_elements) {
    throw Error(ErrorCode::budget, std::string(to_string(model)) + "(" + std::to_string(rank) + ") has " +
                                       std::to_string(order) + " elements, budget is " +
                                       std::to_string(budget.max_elements));
  }
  if (order > 1'000'000 && budget.log != nullptr) {
    *budget.log << "note: building " << order << " elements, estimated "
                << estimated_poset_bytes(model, rank) / (1024 * 1024) << " MiB\n";
  }

  std::vector<GroupElement> gens;
  for (int i = 1; i <= rank; ++i) gens.push_back(GroupElement::generator(model, rank, i));

  WeakOrderPoset p;
  p.model_ = model;
  p.rank_ = rank;
  p.full_group_ = true;
  p.elements_.reserve(order);
  p.index_.reserve(order);
  std::vector<int> depth;
  std::vector<std::vector<Index>> up;
  depth.reserve(order);
  up.reserve(order);

  p.elements_.push_back(e);
  p.index_.emplace(e, 0);
  depth.push_back(0);
  up.emplace_back();
  // Queue order is BFS order, so indices are depth ordered.
  for (Index head = 0; head < p.elements_.size(); ++head) {
    for (const auto& s : gens) {
      GroupElement next = multiply(s, p.elements_[head]);
      auto [it, inserted] = p.index_.try_emplace(next, static_cast<Index>(p.elements_.size()));
      if (inserted) {
        p.elements_.push_back(std::move(next));
        depth.push_back(depth[head] + 1);
        up.emplace_back();
      }
      // Cayley-graph edges change depth by exactly one.
      if (depth[it->second] == depth[head] + 1) up[head].push_back(it->second);
    }
  }
  p.order_ = RankedPoset(std::move(depth), std::move(up));
  return p;
}

std::optional<Index> WeakOrderPoset::find(const GroupElement& w) const {
  const auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index WeakOrderPoset::index_of(const GroupElement& w) const {
  const auto found = find(w);
  if (!found) throw Error(ErrorCode::range, "element " + w.to_string() + " is not in the poset");
  return *found;
}

WeakOrderPoset WeakOrderPoset::interval(Index u, Index w) const {
  if (!leq(u, w)) {
    throw Error(ErrorCode::not_comparable,
                "[" + elements_[u].to_string() + ", " + elements_[w].to_string() + "] is not an interval");
  }
  const auto members = order_.interval(u, w);
  WeakOrderPoset out;
  out.model_ = model_;
  out.rank_ = rank_;
  out.full_group_ = members.size() == elements_.size();
  out.order_ = order_.induced(members);
  out.elements_.reserve(members.size());
  for (Index k = 0; k < members.size(); ++k) {
    out.elements_.push_back(elements_[members[k]]);
    out.index_.emplace(elements_[members[k]], k);
  }
  return out;
}

std::string WeakOrderPoset::dump() const {
  std::ostringstream out;
  for (Index i = 0; i < size(); ++i) {
    out << "rank " << rank_of(i) << ": " << elements_[i].to_string() << " -> covers:";
    bool first = true;
    for (Index j : order_.covers_up(i)) {
      out << (first ? " " : ", ") << elements_[j].to_string();
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

void require_full_group(const WeakOrderPoset& poset, const char* what) {
  if (!poset.is_full_group()) throw Error(ErrorCode::range, std::string(what) + " needs the full group poset");
}

void require_comparable(const WeakOrderPoset& poset, Index u, Index w) {
  if (!poset.leq(u, w)) {
    throw Error(ErrorCode::not_comparable,
                poset.element(u).to_string() + " is not below " + poset.element(w).to_string());
  }
}

} // namespace

bool lower_interval_isomorphism_check(const WeakOrderPoset& poset, Index u, Index w) {
  require_full_group(poset, "lower interval check");
  require_comparable(poset, u, w);
  const GroupElement u_inv = inverse(poset.element(u));
  const Index v = poset.index_of(multiply(poset.element(w), u_inv));
  const auto source = poset.order().interval(u, w);
  const auto target = poset.order().interval(poset.bottom(), v);
  if (source.size() != target.size()) return false;

  std::unordered_map<Index, Index> image;
  for (Index t : source) {
    const auto mapped = poset.find(multiply(poset.element(t), u_inv));
    if (!mapped || !std::binary_search(target.begin(), target.end(), *mapped)) return false;
    if (poset.rank_of(*mapped) != poset.rank_of(t) - poset.rank_of(u)) return false;
    image.emplace(t, *mapped);
  }
  // Covers inside the source must map onto covers inside the target.
  std::size_t source_covers = 0;
  std::size_t target_covers = 0;
  for (Index t : source) {
    for (Index t2 : poset.order().covers_up(t)) {
      if (!std::binary_search(source.begin(), source.end(), t2)) continue;
      ++source_covers;
      const auto& up = poset.order().covers_up(image[t]);
      if (std::find(up.begin(), up.end(), image[t2]) == up.end()) return false;
    }
  }
  for (Index t : target) {
    for (Index t2 : poset.order().covers_up(t)) {
      if (std::binary_search(target.begin(), target.end(), t2)) ++target_covers;
    }
  }
  return source_covers == target_covers;
}

Index join(const WeakOrderPoset& poset, Index x, Index y) {
  const auto ux = poset.order().upper_set(x);
  const auto uy = poset.order().upper_set(y);
  std::vector<Index> common;
  std::set_intersection(ux.begin(), ux.end(), uy.begin(), uy.end(), std::back_inserter(common));
  if (!common.empty()) {
    // Smallest index has minimal rank; it is the join iff it lies below all upper bounds.
    const Index candidate = common.front();
    const auto uc = poset.order().upper_set(candidate);
    if (std::includes(uc.begin(), uc.end(), common.begin(), common.end())) return candidate;
  }
  throw Error(ErrorCode::non_lattice,
              "no join for " + poset.element(x).to_string() + " and " + poset.element(y).to_string());
}

Index meet(const WeakOrderPoset& poset, Index x, Index y) {
  const auto dx = poset.order().lower_set(x);
  const auto dy = poset.order().lower_set(y);
  std::vector<Index> common;
  std::set_intersection(dx.begin(), dx.end(), dy.begin(), dy.end(), std::back_inserter(common));
  if (!common.empty()) {
    const Index candidate = common.back();
    const auto dc = poset.order().lower_set(candidate);
    if (std::includes(dc.begin(), dc.end(), common.begin(), common.end())) return candidate;
  }
  throw Error(ErrorCode::non_lattice,
              "no meet for " + poset.element(x).to_string() + " and " + poset.element(y).to_string());
}

int mobius_closed_form(const WeakOrderPoset& poset, Index u, Index w) {
  require_comparable(poset, u, w);
  const GroupElement v = multiply(poset.element(w), inverse(poset.element(u)));
  const GeneratorSet descents = right_descents(v);
  const GroupElement top = longest_element_of_parabolic(poset.model(), poset.rank(), descents);
  if (!(top == v)) return 0;
  return descents.size() % 2 == 0 ? 1 : -1;
}

std::int64_t mobius_pair_recursive(const WeakOrderPoset& poset, Index u, Index w) {
  require_comparable(poset, u, w);
  return mobius_from(poset.order(), u)[w];
}

Index max_parabolic_below(const WeakOrderPoset& poset, Index w) {
  const GroupElement& x = poset.element(w);
  return poset.index_of(longest_element_of_parabolic(poset.model(), poset.rank(), right_descents(x)));
}

std::vector<Index> descent_class(const WeakOrderPoset& poset, GeneratorSet lower, GeneratorSet upper) {
  require_full_group(poset, "descent_class");
  if (!lower.is_subset_of(upper)) {
    throw Error(ErrorCode::range, "descent class needs I subset of J, got I=" + lower.to_string() +
                                      " J=" + upper.to_string());
  }
  std::vector<Index> out;
  for (Index i = 0; i < poset.size(); ++i) {
    const GeneratorSet d = right_descents(poset.element(i));
    if (lower.is_subset_of(d) && d.is_subset_of(upper)) out.push_back(i);
  }
  return out;
}

std::pair<GroupElement, GroupElement> descent_class_endpoints(Model model, int rank, GeneratorSet lower,
                                                              GeneratorSet upper) {
  const GeneratorSet all = GeneratorSet::range(1, rank);
  const GroupElement w0 = longest_element_of_parabolic(model, rank, all);
  return {longest_element_of_parabolic(model, rank, lower),
          multiply(w0, longest_element_of_parabolic(model, rank, all - upper))};
}

IntPolynomial char_poly_of_poset(const WeakOrderPoset& poset) { return char_poly_of_poset(poset.order()); }

} // namespace coxchar
