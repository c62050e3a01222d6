#include "coxchar/group_element.hpp"

#include <cstdlib>
#include <sstream>

#include "coxchar/error.hpp"

namespace coxchar {

std::string_view to_string(Model model) {
  switch (model) {
  case Model::PermA: return "PermA";
  case Model::SignedB: return "SignedB";
  case Model::EvenSignedD: return "EvenSignedD";
  }
  return "?";
}

Model model_for(Family family) {
  switch (family) {
  case Family::A: return Model::PermA;
  case Family::B: return Model::SignedB;
  case Family::D: return Model::EvenSignedD;
  default: break;
  }
  throw Error(ErrorCode::range, std::string(to_string(family)) + " has no finite permutation model");
}

Family family_for(Model model) {
  switch (model) {
  case Model::PermA: return Family::A;
  case Model::SignedB: return Family::B;
  case Model::EvenSignedD: return Family::D;
  }
  return Family::A;
}

int min_rank(Model model) { return min_rank(family_for(model)); }

GroupElement::GroupElement(Model model, int rank) : model_(model), rank_(rank) {
  if (rank < min_rank(model)) {
    throw Error(ErrorCode::range, std::string(coxchar::to_string(model)) + "(" + std::to_string(rank) +
                                      "): rank must be at least " + std::to_string(min_rank(model)));
  }
  size_ = model == Model::PermA ? rank + 1 : rank;
  if (size_ > kMaxWindow) {
    throw Error(ErrorCode::range, std::string(coxchar::to_string(model)) + "(" + std::to_string(rank) +
                                      "): window longer than " + std::to_string(kMaxWindow));
  }
}

GroupElement GroupElement::identity(Model model, int rank) {
  GroupElement e(model, rank);
  for (int i = 0; i < e.size_; ++i) e.window_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i + 1);
  return e;
}

GroupElement GroupElement::generator(Model model, int rank, int index) {
  GroupElement s = identity(model, rank);
  if (index < 1 || index > rank) {
    throw Error(ErrorCode::range, "generator index " + std::to_string(index) + " outside 1.." + std::to_string(rank));
  }
  auto& w = s.window_;
  const auto at = [](int position) { return static_cast<std::size_t>(position - 1); };
  switch (model) {
  case Model::PermA:
    std::swap(w[at(index)], w[at(index + 1)]);
    break;
  case Model::SignedB:
    if (index < rank) {
      std::swap(w[at(index)], w[at(index + 1)]);
    } else {
      w[at(rank)] = static_cast<std::int8_t>(-rank);
    }
    break;
  case Model::EvenSignedD:
    if (index == 1) {
      w[0] = -2;
      w[1] = -1;
    } else {
      std::swap(w[at(index - 1)], w[at(index)]);
    }
    break;
  }
  return s;
}

GroupElement GroupElement::from_window(Model model, int rank, std::span<const int> window) {
  GroupElement w(model, rank);
  if (static_cast<int>(window.size()) != w.size_) {
    throw Error(ErrorCode::parse, "window has " + std::to_string(window.size()) + " entries, expected " +
                                      std::to_string(w.size_));
  }
  std::vector<bool> seen(static_cast<std::size_t>(w.size_) + 1, false);
  int negatives = 0;
  for (int i = 0; i < w.size_; ++i) {
    const int v = window[static_cast<std::size_t>(i)];
    const int a = std::abs(v);
    if (a < 1 || a > w.size_ || seen[static_cast<std::size_t>(a)]) {
      throw Error(ErrorCode::parse, "window is not a (signed) permutation of [" + std::to_string(w.size_) + "]");
    }
    seen[static_cast<std::size_t>(a)] = true;
    if (v < 0) ++negatives;
    w.window_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
  }
  if (model == Model::PermA && negatives != 0) {
    throw Error(ErrorCode::parse, "PermA windows have no negative entries");
  }
  if (model == Model::EvenSignedD && negatives % 2 != 0) {
    throw Error(ErrorCode::parse, "EvenSignedD windows need an even number of negative entries");
  }
  return w;
}

GroupElement GroupElement::parse(Model model, int rank, std::string_view text) {
  std::string normalized;
  normalized.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      normalized.push_back('-');
      i += 2;
    } else {
      normalized.push_back(text[i] == ',' ? ' ' : text[i]);
    }
  }
  std::istringstream in(normalized);
  std::vector<int> window;
  std::string token;
  while (in >> token) {
    char* end = nullptr;
    const long v = std::strtol(token.c_str(), &end, 10);
    if (end == token.c_str() || *end != '\0') throw Error(ErrorCode::parse, "bad window entry '" + token + "'");
    window.push_back(static_cast<int>(v));
  }
  return from_window(model, rank, window);
}

std::vector<int> GroupElement::window() const {
  std::vector<int> out(static_cast<std::size_t>(size_));
  for (int i = 0; i < size_; ++i) out[static_cast<std::size_t>(i)] = window_[static_cast<std::size_t>(i)];
  return out;
}

GeneratorSet GroupElement::generators() const { return GeneratorSet::range(1, rank_); }

std::string GroupElement::to_string() const {
  std::string out;
  for (int i = 0; i < size_; ++i) {
    if (i != 0) out.push_back(' ');
    out += std::to_string(window_[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::size_t GroupElement::hash() const {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(model_);
  for (int i = 0; i < size_; ++i) {
    h ^= static_cast<std::uint8_t>(window_[static_cast<std::size_t>(i)]);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

GroupElement multiply(const GroupElement& u, const GroupElement& v) {
  if (u.model() != v.model() || u.rank() != v.rank()) {
    throw Error(ErrorCode::model_mismatch, "cannot multiply " + std::string(to_string(u.model())) + "(" +
                                               std::to_string(u.rank()) + ") by " +
                                               std::string(to_string(v.model())) + "(" + std::to_string(v.rank()) +
                                               ")");
  }
  GroupElement out(u.model_, u.rank_);
  for (int i = 0; i < u.size_; ++i) {
    const int j = v[i];
    out.window_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(j > 0 ? u[j - 1] : -u[-j - 1]);
  }
  return out;
}

GroupElement inverse(const GroupElement& w) {
  GroupElement out(w.model_, w.rank_);
  for (int i = 0; i < w.size_; ++i) {
    const int j = w[i];
    // w(i+1) = j  =>  w^{-1}(|j|) = sign(j) (i+1)
    out.window_[static_cast<std::size_t>(std::abs(j) - 1)] = static_cast<std::int8_t>(j > 0 ? i + 1 : -(i + 1));
  }
  return out;
}

namespace {

int inversions(const GroupElement& w) {
  int count = 0;
  for (int i = 0; i < w.window_size(); ++i) {
    for (int j = i + 1; j < w.window_size(); ++j) {
      if (w[i] > w[j]) ++count;
    }
  }
  return count;
}

// #{i < j : w(i) + w(j) < 0}
int negative_sum_pairs(const GroupElement& w) {
  int count = 0;
  for (int i = 0; i < w.window_size(); ++i) {
    for (int j = i + 1; j < w.window_size(); ++j) {
      if (w[i] + w[j] < 0) ++count;
    }
  }
  return count;
}

// Number of positive roots of B_n sent to negative roots, for the simple
// system e_i - e_{i+1} (i < n), e_n that matches s_n negating the last entry.
int signed_b_length(const GroupElement& w) {
  const int n = w.window_size();
  // Total order 1 < 2 < ... < n < -n < ... < -1.
  const auto key = [n](int v) { return v > 0 ? v : 2 * n + 1 + v; };
  int count = 0;
  for (int i = 0; i < n; ++i) {
    if (w[i] < 0) ++count;                    // roots e_i
    for (int j = i + 1; j < n; ++j) {
      if (key(w[i]) > key(w[j])) ++count;      // roots e_i - e_j
      const bool both_negative = w[i] < 0 && w[j] < 0;
      const bool mixed = (w[i] < 0) != (w[j] < 0);
      if (both_negative || (mixed && w[i] + w[j] > 0)) ++count; // roots e_i + e_j
    }
  }
  return count;
}

} // namespace

int length(const GroupElement& w) {
  switch (w.model()) {
  case Model::PermA: return inversions(w);
  case Model::SignedB: return signed_b_length(w);
  case Model::EvenSignedD: return inversions(w) + negative_sum_pairs(w);
  }
  return 0;
}

GeneratorSet right_descents(const GroupElement& w) {
  GeneratorSet out;
  const int l = length(w);
  for (int i = 1; i <= w.rank(); ++i) {
    if (length(multiply(w, GroupElement::generator(w.model(), w.rank(), i))) < l) out.insert(i);
  }
  return out;
}

GeneratorSet left_descents(const GroupElement& w) {
  GeneratorSet out;
  const int l = length(w);
  for (int i = 1; i <= w.rank(); ++i) {
    if (length(multiply(GroupElement::generator(w.model(), w.rank(), i), w)) < l) out.insert(i);
  }
  return out;
}

GroupElement longest_element_of_parabolic(Model model, int rank, GeneratorSet subset) {
  if (!subset.is_subset_of(GeneratorSet::range(1, rank))) {
    throw Error(ErrorCode::range, "generator set " + subset.to_string() + " outside 1.." + std::to_string(rank));
  }
  GroupElement w = GroupElement::identity(model, rank);
  int l = 0;
  bool ascended = true;
  while (ascended) {
    ascended = false;
    for (int i : subset.to_vector()) {
      GroupElement next = multiply(GroupElement::generator(model, rank, i), w);
      const int nl = length(next);
      if (nl > l) {
        w = next;
        l = nl;
        ascended = true;
        break;
      }
    }
  }
  return w;
}

std::uint64_t group_order(Model model, int rank) {
  std::uint64_t factorial = 1;
  const int m = model == Model::PermA ? rank + 1 : rank;
  for (int i = 2; i <= m; ++i) factorial *= static_cast<std::uint64_t>(i);
  switch (model) {
  case Model::PermA: return factorial;
  case Model::SignedB: return factorial << rank;
  case Model::EvenSignedD: return factorial << (rank - 1);
  }
  return factorial;
}

} // namespace coxchar
