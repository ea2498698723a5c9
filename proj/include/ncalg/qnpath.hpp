#pragma once

// Graph algebras Q_n(G) over one-dimensional complexes, the path algebras P_n
// and their commutator parts ch(P_n), the weight filtration chop, and the S_3
// symmetry of the triple relations.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncalg/ncpoly.hpp"
#include "ncalg/pgc.hpp"

namespace ncalg {

enum class RelationFamily {
  node_pair,       // [u(i),u(j)] - u(i,j)(u(i) - u(j))
  triple,          // v_{i,j,k}
  far_node_edge,   // [u(i),u(j,k)], i adjacent to neither end
  near_node_edge,  // [u(i),u(j,k)] + u(i,j)u(j,k), path i-j-k
  disjoint_edges,  // [u(i,j),u(k,l)]
};

const char* to_string(RelationFamily f);

struct GraphRelation {
  NCPoly poly;
  RelationFamily family;
};

struct GraphAlgebraPresentation {
  SimpleGraph graph;
  Alphabet generators;
  std::vector<Letter> node_letters;                             // per vertex
  std::map<std::pair<std::size_t, std::size_t>, Letter> edge_letters;  // (lo, hi)
  std::vector<GraphRelation> relations;

  /// u(v) as a polynomial.
  NCPoly node(std::size_t v) const;
  /// u(a,b) = u(b,a); the zero polynomial when {a,b} is not an edge.
  NCPoly edge(std::size_t a, std::size_t b) const;
  std::vector<NCPoly> relation_polys() const;
};

/// Path 1 - 2 - ... - n with vertex labels "1".."n".
SimpleGraph path_graph(int n);

/// v_{i,j,k} = [u(i,k),u(j,k)] + [u(i,k),u(j)] + [u(i),u(j,k)]
///             - u(i,j)(u(i,k) - u(j,k)), absent edges read as 0.
NCPoly triple_element(const GraphAlgebraPresentation& p, std::size_t i, std::size_t j,
                      std::size_t k);

/// Generators: "v<label>" per vertex, then "e<a><b>" per edge (an underscore
/// separates multi-character endpoint labels). Relations (i) for every vertex
/// pair, v_{a,b,c} and v_{c,b,a} for every triple a<b<c, and (iii) for every
/// pair of disjoint edges; zero relations are dropped.
GraphAlgebraPresentation build_qn_graph(const SimpleGraph& g);

class TriangleError : public std::invalid_argument {
 public:
  explicit TriangleError(const std::string& what) : std::invalid_argument(what) {}
};

/// Replaces the triple relations by their triangle-free forms. Throws
/// TriangleError naming a triangle when the graph has one.
GraphAlgebraPresentation simplify_triangle_free(const GraphAlgebraPresentation& p);

/// The path algebra P_n written directly as six relation families. Generator
/// ranks follow v_n > e_{n-1,n} > v_{n-1} > ... > e_{1,2} > v_1.
GraphAlgebraPresentation build_pn(int n);
/// ch(P_n): the commuting pairs of P_n's top-weight relation parts.
PGCPresentation build_ch_pn(int n);

/// v_n > e_{n-1,n} > ... > e_{1,2} > v_1 on P_n's generators.
MonomialOrder path_order(const GraphAlgebraPresentation& pn);
/// The same alternating ordering as a vertex ordering of ch(P_n)'s graphs.
VertexOrdering path_vertex_ordering(const PGCPresentation& ch_pn);

/// Sum of generator weights (node 2, edge 1).
int word_weight(const Word& w, const Alphabet& alphabet);

/// Keeps the maximal-weight component of every relation. Throws
/// std::invalid_argument if a chopped relation is not a commutator.
PGCPresentation chop(const GraphAlgebraPresentation& p);

/// Dual generator names for path algebras: v_i -> w_i, e_ij -> d_ij.
std::string path_dual_label(const Generator& g);

struct OrbitReport {
  bool mu_action_ok = false;   // mu = (i j)
  bool tau_action_ok = false;  // tau = (i k)
  std::size_t dimension = 0;   // rank of the six orbit elements
  Alphabet alphabet;
  NCPoly v_ijk;
  NCPoly v_kji;
  NCPoly mu_v_ijk;
  NCPoly mu_v_kji;
};

/// Generic triangle on i, j, k with S_3 acting by permuting indices.
OrbitReport s3_orbit_check(int i, int j, int k);

}  // namespace ncalg
