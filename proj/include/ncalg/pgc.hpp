#pragma once

// Algebras whose relations are all commutators of generators, their
// commuting/non-commuting graphs, vertex orderings that make every degree-3
// ambiguity resolvable, and their quadratic duals.

#include <array>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/ncpoly.hpp"
#include "ncalg/rewrite.hpp"

namespace ncalg {

/// Undirected graph without loops or multiple edges.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> labels);

  std::size_t add_vertex(std::string label);
  /// Throws std::invalid_argument on a loop; re-adding an edge is a no-op.
  void add_edge(std::size_t a, std::size_t b);
  void add_edge(std::string_view a, std::string_view b);

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find(std::string_view label) const;

  bool adjacent(std::size_t a, std::size_t b) const;
  std::size_t degree(std::size_t v) const;
  /// Edges as (smaller, larger) index pairs, sorted.
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  SimpleGraph complement() const;
  /// Some triangle {a, b, c}, if the graph has one.
  std::optional<std::array<std::size_t, 3>> find_triangle() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Text format: one "vertices: a b c" line, then "edge: a b" lines.
SimpleGraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const SimpleGraph& g);

struct PGCPresentation {
  Alphabet generators;
  // Unordered pairs of distinct letters, stored (smaller, larger).
  std::set<std::pair<Letter, Letter>> commuting;

  bool commute(Letter a, Letter b) const;
  void add_commuting(Letter a, Letter b);
  /// a*b - b*a for each commuting pair, in pair order.
  std::vector<NCPoly> relations() const;
};

/// The presentation when every relation is a scalar multiple of a commutator
/// of two distinct generators; empty otherwise.
std::optional<PGCPresentation> is_pgc(const Alphabet& alphabet,
                                      std::span<const NCPoly> relations);

SimpleGraph commuting_graph(const PGCPresentation& p);
SimpleGraph noncommuting_graph(const PGCPresentation& p);

/// Builds the presentation on the graph's vertices whose commuting pairs are
/// the edges (commuting mode) or the non-edges (non-commuting mode).
enum class GraphMode { commuting, noncommuting };
PGCPresentation presentation_from_graph(const SimpleGraph& g, GraphMode mode);

/// position[v] in 1..n; a bijection from vertices onto [n].
struct VertexOrdering {
  std::vector<std::size_t> position;
  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;
};

/// Backtracking search for an ordering in which no vertex b lies strictly
/// between a and c whenever b commutes with both a and c while a and c do not
/// commute. In non-commuting mode the graph's edges mark non-commuting pairs.
std::optional<VertexOrdering> find_vertex_ordering(const SimpleGraph& g, GraphMode mode);

/// Deglex order extending the ordering (larger position = greater letter).
MonomialOrder ordering_to_order(const VertexOrdering& o);
/// One reduction y*x -> x*y per commuting pair with position(x) < position(y).
RewriteSystem ordering_to_rewrite(const PGCPresentation& p, const VertexOrdering& o);

struct DualPresentation {
  Alphabet generators;
  std::vector<NCPoly> relations;
};

using DualNaming = std::function<std::string(const Generator&)>;
/// label -> label + "'"
std::string prime_label(const Generator& g);

/// b_i b_j + b_j b_i for commuting pairs, b_i b_j and b_j b_i for
/// non-commuting pairs, b_i^2 for every generator.
DualPresentation pgc_dual(const PGCPresentation& p, const DualNaming& naming = prime_label);

/// Coefficient i counts the i-element sets of pairwise commuting generators,
/// i.e. the nonzero square-free monomials of the dual. Throws
/// std::invalid_argument for more than 30 generators.
std::vector<Integer> dual_hilbert_by_cliques(const PGCPresentation& p, std::size_t max_i);

}  // namespace ncalg
