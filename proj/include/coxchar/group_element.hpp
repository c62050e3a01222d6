#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxchar/coxeter_graph.hpp"
#include "coxchar/generator_set.hpp"

namespace coxchar {

// Permutation models of the finite classical groups:
//   PermA(n)        S_{n+1}, window of length n+1, all entries positive
//   SignedB(n)      signed permutations of [n]
//   EvenSignedD(n)  signed permutations of [n] with an even number of negatives
enum class Model { PermA, SignedB, EvenSignedD };

std::string_view to_string(Model model);
Model model_for(Family family); // A -> PermA, B -> SignedB, D -> EvenSignedD
Family family_for(Model model);

// Element of a classical group in window notation (w(1), ..., w(m)).
//
// Generators act on the right on positions and on the left on values:
//   PermA:       s_i swaps i, i+1                       (1 <= i <= n)
//   SignedB:     s_i swaps i, i+1 (i < n); s_n negates n
//   EvenSignedD: s_1 maps (1, 2) -> (-2, -1); s_i swaps i-1, i (i >= 2)
// These realize the graphs built by CoxeterGraph::build for A_n, B_n, D_n.
class GroupElement {
public:
  static constexpr int kMaxWindow = 24;

  static GroupElement identity(Model model, int rank);
  static GroupElement generator(Model model, int rank, int index);
  // Validates the window against the model's invariants.
  static GroupElement from_window(Model model, int rank, std::span<const int> window);
  // Whitespace-separated integers, "-" or U+2212 accepted as minus sign.
  static GroupElement parse(Model model, int rank, std::string_view text);

  Model model() const { return model_; }
  int rank() const { return rank_; }
  int window_size() const { return size_; }
  int operator[](int position) const { return window_[static_cast<std::size_t>(position)]; } // 0-based
  std::vector<int> window() const;
  GeneratorSet generators() const; // all generator indices of the model

  // "2 3 1", "-2 1 -3"
  std::string to_string() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.model_ == b.model_ && a.rank_ == b.rank_ && a.window_ == b.window_;
  }

  std::size_t hash() const;

private:
  GroupElement(Model model, int rank);

  friend GroupElement multiply(const GroupElement& u, const GroupElement& v);
  friend GroupElement inverse(const GroupElement& w);

  Model model_;
  int rank_;
  int size_;
  std::array<std::int8_t, kMaxWindow> window_{};
};

// (u v)(i) = u(v(i)) with u(-j) = -u(j).
GroupElement multiply(const GroupElement& u, const GroupElement& v);
GroupElement inverse(const GroupElement& w);

// Closed-form Coxeter length of the model (see the .cpp for each formula).
int length(const GroupElement& w);

GeneratorSet right_descents(const GroupElement& w);
GeneratorSet left_descents(const GroupElement& w);

// w_0(J) by greedy left ascent, smallest generator index first.
GroupElement longest_element_of_parabolic(Model model, int rank, GeneratorSet subset);

// Number of elements of the model group.
std::uint64_t group_order(Model model, int rank);

int min_rank(Model model);

} // namespace coxchar

template <>
struct std::hash<coxchar::GroupElement> {
  std::size_t operator()(const coxchar::GroupElement& w) const noexcept { return w.hash(); }
};
