#include "coxchar/ranked_poset.hpp"

#include <algorithm>
#include <numeric>

#include "coxchar/error.hpp"

namespace coxchar {

RankedPoset::RankedPoset(std::vector<int> ranks, std::vector<std::vector<Index>> covers_up)
    : ranks_(std::move(ranks)), up_(std::move(covers_up)), down_(ranks_.size()) {
  if (up_.size() != ranks_.size()) throw Error(ErrorCode::range, "cover lists do not match element count");
  for (Index i = 0; i < up_.size(); ++i) {
    if (i > 0 && ranks_[i] < ranks_[i - 1]) throw Error(ErrorCode::range, "element indices must be rank ordered");
    for (Index j : up_[i]) {
      if (j >= ranks_.size() || ranks_[j] != ranks_[i] + 1) {
        throw Error(ErrorCode::range, "cover must raise rank by exactly one");
      }
      down_[j].push_back(i);
    }
  }
}

int RankedPoset::max_rank() const { return ranks_.empty() ? 0 : ranks_.back(); }

std::optional<Index> RankedPoset::bottom() const {
  std::optional<Index> found;
  for (Index i = 0; i < size(); ++i) {
    if (down_[i].empty()) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

std::optional<Index> RankedPoset::top() const {
  std::optional<Index> found;
  for (Index i = 0; i < size(); ++i) {
    if (up_[i].empty()) {
      if (found) return std::nullopt;
      found = i;
    }
  }
  return found;
}

std::vector<Index> RankedPoset::upper_set(Index u, int max_rank) const {
  std::vector<Index> out;
  if (ranks_[u] > max_rank) return out;
  std::vector<bool> seen(size(), false);
  std::vector<Index> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    const Index x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (Index y : up_[x]) {
      if (!seen[y] && ranks_[y] <= max_rank) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> RankedPoset::lower_set(Index w, int min_rank) const {
  std::vector<Index> out;
  if (ranks_[w] < min_rank) return out;
  std::vector<bool> seen(size(), false);
  std::vector<Index> stack{w};
  seen[w] = true;
  while (!stack.empty()) {
    const Index x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (Index y : down_[x]) {
      if (!seen[y] && ranks_[y] >= min_rank) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool RankedPoset::leq(Index u, Index w) const {
  if (ranks_[u] > ranks_[w]) return false;
  const auto up = upper_set(u, ranks_[w]);
  return std::binary_search(up.begin(), up.end(), w);
}

std::vector<Index> RankedPoset::interval(Index u, Index w) const {
  const auto up = upper_set(u, ranks_[w]);
  const auto down = lower_set(w, ranks_[u]);
  std::vector<Index> out;
  std::set_intersection(up.begin(), up.end(), down.begin(), down.end(), std::back_inserter(out));
  return out;
}

RankedPoset RankedPoset::induced(const std::vector<Index>& members) const {
  std::vector<Index> local(size(), static_cast<Index>(-1));
  for (Index k = 0; k < members.size(); ++k) local[members[k]] = k;
  const int base = members.empty() ? 0 : ranks_[members.front()];
  std::vector<int> ranks;
  std::vector<std::vector<Index>> up(members.size());
  ranks.reserve(members.size());
  for (Index k = 0; k < members.size(); ++k) {
    ranks.push_back(ranks_[members[k]] - base);
    for (Index y : up_[members[k]]) {
      if (local[y] != static_cast<Index>(-1)) up[k].push_back(local[y]);
    }
  }
  return RankedPoset(std::move(ranks), std::move(up));
}

ProductPoset product(const RankedPoset& p, const RankedPoset& q) {
  std::vector<std::pair<Index, Index>> pairs;
  pairs.reserve(p.size() * q.size());
  for (Index i = 0; i < p.size(); ++i) {
    for (Index j = 0; j < q.size(); ++j) pairs.emplace_back(i, j);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
    return p.rank(a.first) + q.rank(a.second) < p.rank(b.first) + q.rank(b.second);
  });
  std::vector<Index> where(p.size() * q.size());
  for (Index k = 0; k < pairs.size(); ++k) where[pairs[k].first * q.size() + pairs[k].second] = k;
  std::vector<int> ranks;
  std::vector<std::vector<Index>> up(pairs.size());
  for (Index k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    ranks.push_back(p.rank(i) + q.rank(j));
    for (Index i2 : p.covers_up(i)) up[k].push_back(where[i2 * q.size() + j]);
    for (Index j2 : q.covers_up(j)) up[k].push_back(where[i * q.size() + j2]);
  }
  return {RankedPoset(std::move(ranks), std::move(up)), std::move(pairs)};
}

MobiusTable mobius_from(const RankedPoset& poset, Index u) {
  MobiusTable mu(poset.size(), 0);
  const auto up = poset.upper_set(u);
  // stamp[t] == w marks t as visited while summing over [u, w).
  std::vector<Index> stamp(poset.size(), static_cast<Index>(-1));
  std::vector<bool> above(poset.size(), false);
  for (Index t : up) above[t] = true;
  std::vector<Index> stack;
  const int base = poset.rank(u);
  for (Index w : up) {
    if (w == u) {
      mu[w] = 1;
      continue;
    }
    std::int64_t sum = 0;
    stack.assign(poset.covers_down(w).begin(), poset.covers_down(w).end());
    for (Index t : stack) stamp[t] = w;
    while (!stack.empty()) {
      const Index t = stack.back();
      stack.pop_back();
      if (!above[t]) continue;
      sum += mu[t];
      if (poset.rank(t) == base) continue;
      for (Index s : poset.covers_down(t)) {
        if (stamp[s] != w) {
          stamp[s] = w;
          stack.push_back(s);
        }
      }
    }
    mu[w] = -sum;
  }
  return mu;
}

MobiusTable mobius_recursive(const RankedPoset& poset) {
  const auto b = poset.bottom();
  if (!b) throw Error(ErrorCode::range, "poset has no bottom element");
  return mobius_from(poset, *b);
}

IntPolynomial char_poly_of_poset(const RankedPoset& poset) {
  const auto mu = mobius_recursive(poset);
  const int top_rank = poset.max_rank();
  IntPolynomial chi;
  for (Index t = 0; t < poset.size(); ++t) {
    if (mu[t] != 0) chi.add_term(top_rank - poset.rank(t), mu[t]);
  }
  return chi;
}

} // namespace coxchar
