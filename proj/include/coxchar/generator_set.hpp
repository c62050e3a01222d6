#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coxchar {

// Set of Coxeter generator indices, stored as a 64-bit mask. Index 0 is used
// by the affine families B~, C~, D~; all other families start at 1.
class GeneratorSet {
public:
  static constexpr int kMaxIndex = 63;

  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint64_t bits) : bits_(bits) {}
  GeneratorSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  static GeneratorSet from_vector(const std::vector<int>& indices) {
    GeneratorSet s;
    for (int i : indices) s.insert(i);
    return s;
  }

  // Contiguous index range [first, last].
  static constexpr GeneratorSet range(int first, int last) {
    std::uint64_t bits = 0;
    for (int i = first; i <= last; ++i) bits |= std::uint64_t{1} << i;
    return GeneratorSet(bits);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { bits_ &= ~(std::uint64_t{1} << i); }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr bool is_subset_of(GeneratorSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // "{1,2,4}"
  std::string to_string() const;

  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ | b.bits_); }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & b.bits_); }
  friend constexpr GeneratorSet operator-(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(GeneratorSet a, GeneratorSet b) = default;
  friend constexpr bool operator<(GeneratorSet a, GeneratorSet b) { return a.bits_ < b.bits_; }

private:
  std::uint64_t bits_ = 0;
};

} // namespace coxchar
