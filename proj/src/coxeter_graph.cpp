#include "coxchar/coxeter_graph.hpp"

#include <bit>
#include <sstream>

#include "coxchar/error.hpp"

namespace coxchar {

std::string GeneratorSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i : to_vector()) {
    if (!first) out << ',';
    out << i;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string_view to_string(Family family) {
  switch (family) {
  case Family::A: return "A";
  case Family::B: return "B";
  case Family::D: return "D";
  case Family::AffA: return "AffA";
  case Family::AffB: return "AffB";
  case Family::AffC: return "AffC";
  case Family::AffD: return "AffD";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "D") return Family::D;
  if (name == "AffA" || name == "A~") return Family::AffA;
  if (name == "AffB" || name == "B~") return Family::AffB;
  if (name == "AffC" || name == "C~") return Family::AffC;
  if (name == "AffD" || name == "D~") return Family::AffD;
  throw Error(ErrorCode::parse, "unknown family '" + std::string(name) + "'");
}

bool is_affine(Family family) {
  return family == Family::AffA || family == Family::AffB || family == Family::AffC || family == Family::AffD;
}

int min_rank(Family family) {
  switch (family) {
  case Family::A: return 1;
  case Family::B: return 2;
  case Family::D: return 2;
  case Family::AffA: return 2;
  case Family::AffB: return 3;
  case Family::AffC: return 2;
  case Family::AffD: return 4;
  }
  return 1;
}

void CoxeterGraph::add_edge(int a, int b, int label) {
  adjacent_[a] |= std::uint64_t{1} << b;
  adjacent_[b] |= std::uint64_t{1} << a;
  if (label == 4) {
    four_[a] |= std::uint64_t{1} << b;
    four_[b] |= std::uint64_t{1} << a;
  }
}

CoxeterGraph CoxeterGraph::build(Family family, int rank) {
  if (rank < min_rank(family)) {
    throw Error(ErrorCode::range, std::string(to_string(family)) + "_" + std::to_string(rank) +
                                      ": rank must be at least " + std::to_string(min_rank(family)));
  }
  // A~_n uses indices 1..n+1, the others at most 0..n.
  if (rank > 62) {
    throw Error(ErrorCode::range, std::string(to_string(family)) + "_" + std::to_string(rank) +
                                      ": rank must be at most 62");
  }
  CoxeterGraph g(family, rank);
  const int n = rank;
  switch (family) {
  case Family::A:
    g.nodes_ = GeneratorSet::range(1, n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1, 3);
    break;
  case Family::B:
    g.nodes_ = GeneratorSet::range(1, n);
    for (int i = 1; i < n - 1; ++i) g.add_edge(i, i + 1, 3);
    g.add_edge(n - 1, n, 4);
    break;
  case Family::D:
    g.nodes_ = GeneratorSet::range(1, n);
    if (n >= 3) {
      g.add_edge(1, 3, 3);
      g.add_edge(2, 3, 3);
    }
    for (int i = 3; i < n; ++i) g.add_edge(i, i + 1, 3);
    break;
  case Family::AffA:
    g.nodes_ = GeneratorSet::range(1, n + 1);
    for (int i = 1; i <= n; ++i) g.add_edge(i, i + 1, 3);
    g.add_edge(n + 1, 1, 3);
    break;
  case Family::AffB:
    g.nodes_ = GeneratorSet::range(0, n);
    for (int i = 1; i < n - 1; ++i) g.add_edge(i, i + 1, 3);
    g.add_edge(n - 1, n, 4);
    g.add_edge(0, 2, 3);
    break;
  case Family::AffC:
    g.nodes_ = GeneratorSet::range(0, n);
    for (int i = 0; i < n; ++i) g.add_edge(i, i + 1, (i == 0 || i == n - 1) ? 4 : 3);
    break;
  case Family::AffD:
    g.nodes_ = GeneratorSet::range(0, n);
    g.add_edge(1, 3, 3);
    g.add_edge(2, 3, 3);
    for (int i = 3; i < n; ++i) g.add_edge(i, i + 1, 3);
    g.add_edge(0, n - 1, 3);
    break;
  }
  return g;
}

int CoxeterGraph::label(int s, int t) const {
  if (s == t) return 1;
  if ((four_[s] >> t) & 1U) return 4;
  if ((adjacent_[s] >> t) & 1U) return 3;
  return 2;
}

std::vector<Edge> CoxeterGraph::edges() const {
  std::vector<Edge> out;
  for (int a : nodes_.to_vector()) {
    for (int b : neighbors(a).to_vector()) {
      if (a < b) out.push_back({a, b, label(a, b)});
    }
  }
  return out;
}

std::string_view to_string(ComponentType type) {
  switch (type) {
  case ComponentType::A: return "A";
  case ComponentType::B: return "B";
  case ComponentType::D: return "D";
  }
  return "?";
}

std::string Component::type_name() const {
  return std::string(to_string(type)) + "_" + std::to_string(rank);
}

std::int64_t longest_length(ComponentType type, int rank) {
  const std::int64_t m = rank;
  switch (type) {
  case ComponentType::A: return m * (m + 1) / 2;
  case ComponentType::B: return m * m;
  case ComponentType::D: return m * (m - 1);
  }
  return 0;
}

namespace {

std::uint64_t component_containing(const CoxeterGraph& graph, std::uint64_t subset, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= graph.neighbors(std::countr_zero(f)).bits();
    }
    next &= subset & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

// Shape classification of one connected component.
bool classify(const CoxeterGraph& graph, std::uint64_t comp, ComponentType& type) {
  const int m = std::popcount(comp);
  int degree_sum = 0;
  int four_ends = 0;
  int branch = -1;
  int branches = 0;
  for (std::uint64_t b = comp; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    const int deg = std::popcount(graph.neighbors(v).bits() & comp);
    degree_sum += deg;
    four_ends += std::popcount(graph.four_neighbors(v).bits() & comp);
    if (deg > 3) return false;
    if (deg == 3) {
      branch = v;
      ++branches;
    }
  }
  if (degree_sum / 2 != m - 1) return false; // contains a cycle
  const int fours = four_ends / 2;
  if (fours == 0 && branches == 0) {
    type = ComponentType::A;
    return true;
  }
  if (fours == 1 && branches == 0) {
    // The 4-edge must sit at an end of the path.
    for (std::uint64_t b = comp; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if ((graph.four_neighbors(v).bits() & comp) != 0 && std::popcount(graph.neighbors(v).bits() & comp) == 1) {
        type = ComponentType::B;
        return true;
      }
    }
    return false;
  }
  if (fours == 0 && branches == 1) {
    int leaves = 0;
    for (std::uint64_t b = graph.neighbors(branch).bits() & comp; b != 0; b &= b - 1) {
      const int v = std::countr_zero(b);
      if (std::popcount(graph.neighbors(v).bits() & comp) == 1) ++leaves;
    }
    if (leaves >= 2) {
      type = ComponentType::D;
      return true;
    }
  }
  return false;
}

[[noreturn]] void unclassifiable(const CoxeterGraph& graph, std::uint64_t comp) {
  throw Error(ErrorCode::unclassifiable, "component " + GeneratorSet(comp).to_string() + " of " +
                                             std::string(to_string(graph.family())) + "_" +
                                             std::to_string(graph.rank()) + " is not of type A, B or D");
}

} // namespace

ComponentReport components_of(const CoxeterGraph& graph, GeneratorSet subset) {
  if (!subset.is_subset_of(graph.nodes())) {
    throw Error(ErrorCode::range, "generator set " + subset.to_string() + " is not contained in the graph");
  }
  ComponentReport report;
  std::uint64_t remaining = subset.bits();
  while (remaining != 0) {
    const std::uint64_t comp = component_containing(graph, subset.bits(), std::countr_zero(remaining));
    remaining &= ~comp;
    ComponentType type{};
    if (!classify(graph, comp, type)) unclassifiable(graph, comp);
    const int m = std::popcount(comp);
    report.components.push_back({GeneratorSet(comp), type, m, longest_length(type, m)});
  }
  return report;
}

std::int64_t parabolic_w0_length(const CoxeterGraph& graph, GeneratorSet subset) {
  if (!subset.is_subset_of(graph.nodes())) {
    throw Error(ErrorCode::range, "generator set " + subset.to_string() + " is not contained in the graph");
  }
  std::int64_t total = 0;
  std::uint64_t remaining = subset.bits();
  while (remaining != 0) {
    const std::uint64_t comp = component_containing(graph, subset.bits(), std::countr_zero(remaining));
    remaining &= ~comp;
    ComponentType type{};
    if (!classify(graph, comp, type)) unclassifiable(graph, comp);
    total += longest_length(type, std::popcount(comp));
  }
  return total;
}

GeneratorSet neighbors_in_graph(const CoxeterGraph& graph, GeneratorSet subset) {
  std::uint64_t out = 0;
  for (int i : subset.to_vector()) out |= graph.neighbors(i).bits();
  return GeneratorSet(out);
}

} // namespace coxchar
