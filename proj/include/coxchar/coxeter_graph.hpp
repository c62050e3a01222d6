#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxchar/generator_set.hpp"

namespace coxchar {

enum class Family { A, B, D, AffA, AffB, AffC, AffD };

std::string_view to_string(Family family);
// Accepts "A", "B", "D", "AffA", "AffB", "AffC", "AffD" (also "A~" style).
Family parse_family(std::string_view name);
bool is_affine(Family family);
// Smallest rank accepted by CoxeterGraph::build for the family.
int min_rank(Family family);

struct Edge {
  int a;
  int b;
  int label; // 3 or 4
};

// Coxeter graph of one of the seven supported families. Indexing:
//   A_n   path s1 - s2 - ... - sn
//   B_n   path s1 - ... - sn, label 4 on {s_{n-1}, s_n}
//   D_n   s1, s2 both joined to s3, then path s3 - ... - sn
//   A~_n  cycle s1 - ... - s_{n+1} - s1
//   B~_n  B_n plus s0 joined to s2
//   C~_n  path s0 - ... - sn, label 4 on both end edges
//   D~_n  D_n plus s0 joined to s_{n-1}
class CoxeterGraph {
public:
  static CoxeterGraph build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  GeneratorSet nodes() const { return nodes_; }
  int node_count() const { return nodes_.size(); }

  // m(s, t); 2 when s and t are distinct and not adjacent, 1 when s == t.
  int label(int s, int t) const;
  GeneratorSet neighbors(int s) const { return GeneratorSet(adjacent_[s]); }
  GeneratorSet four_neighbors(int s) const { return GeneratorSet(four_[s]); }
  std::vector<Edge> edges() const;

private:
  CoxeterGraph(Family family, int rank) : family_(family), rank_(rank) {}
  void add_edge(int a, int b, int label);

  Family family_;
  int rank_;
  GeneratorSet nodes_;
  std::array<std::uint64_t, 64> adjacent_{};
  std::array<std::uint64_t, 64> four_{};
};

enum class ComponentType { A, B, D };

std::string_view to_string(ComponentType type);

struct Component {
  GeneratorSet generators;
  ComponentType type;
  int rank;
  std::int64_t w0_length;

  // "A_2" etc.
  std::string type_name() const;
  friend bool operator==(const Component&, const Component&) = default;
};

struct ComponentReport {
  std::vector<Component> components; // ordered by smallest generator index
};

// Closed-form length of the longest element of an irreducible A/B/D group.
std::int64_t longest_length(ComponentType type, int rank);

// Partition of J into connected components of the induced subgraph, each
// classified by shape. Throws Error{unclassifiable} for cycles, 4-labels in
// the interior of a path, branch nodes of degree > 3, and similar shapes that
// only occur as the full generator set of an affine family.
ComponentReport components_of(const CoxeterGraph& graph, GeneratorSet subset);

// Sum of longest-element lengths of the components of W_J; 0 for J empty.
std::int64_t parabolic_w0_length(const CoxeterGraph& graph, GeneratorSet subset);

// Generators adjacent to at least one element of `subset` (may meet `subset`).
GeneratorSet neighbors_in_graph(const CoxeterGraph& graph, GeneratorSet subset);

} // namespace coxchar
