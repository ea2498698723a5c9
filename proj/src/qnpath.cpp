#include "ncalg/qnpath.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ncalg {

const char* to_string(RelationFamily f) {
  switch (f) {
    case RelationFamily::node_pair: return "node_pair";
    case RelationFamily::triple: return "triple";
    case RelationFamily::far_node_edge: return "far_node_edge";
    case RelationFamily::near_node_edge: return "near_node_edge";
    case RelationFamily::disjoint_edges: return "disjoint_edges";
  }
  return "unknown";
}

NCPoly GraphAlgebraPresentation::node(std::size_t v) const {
  return NCPoly::generator(node_letters.at(v));
}

NCPoly GraphAlgebraPresentation::edge(std::size_t a, std::size_t b) const {
  auto it = edge_letters.find({std::min(a, b), std::max(a, b)});
  if (it == edge_letters.end()) return {};
  return NCPoly::generator(it->second);
}

std::vector<NCPoly> GraphAlgebraPresentation::relation_polys() const {
  std::vector<NCPoly> out;
  out.reserve(relations.size());
  for (const auto& r : relations) out.push_back(r.poly);
  return out;
}

SimpleGraph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path graph needs n >= 1");
  SimpleGraph g;
  for (int i = 1; i <= n; ++i) g.add_vertex(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1));
  return g;
}

namespace {

std::string edge_label(const std::string& a, const std::string& b) {
  if (a.size() == 1 && b.size() == 1) return "e" + a + b;
  return "e" + a + "_" + b;
}

// Generators in the fixed layout shared by build_qn_graph and build_pn:
// one node per vertex, then one edge per graph edge in (lo, hi) order.
GraphAlgebraPresentation skeleton(const SimpleGraph& g) {
  GraphAlgebraPresentation p;
  p.graph = g;
  const auto& labels = g.labels();
  for (const auto& l : labels) p.node_letters.push_back(p.generators.add("v" + l, GeneratorKind::node));
  for (const auto& [a, b] : g.edges())
    p.edge_letters[{a, b}] = p.generators.add(edge_label(labels[a], labels[b]), GeneratorKind::edge);
  return p;
}

void push(GraphAlgebraPresentation& p, NCPoly poly, RelationFamily family) {
  if (!poly.is_zero()) p.relations.push_back({std::move(poly), family});
}

}  // namespace

NCPoly triple_element(const GraphAlgebraPresentation& p, std::size_t i, std::size_t j,
                      std::size_t k) {
  NCPoly ik = p.edge(i, k);
  NCPoly jk = p.edge(j, k);
  return commutator(ik, jk) + commutator(ik, p.node(j)) + commutator(p.node(i), jk) -
         p.edge(i, j) * (ik - jk);
}

GraphAlgebraPresentation build_qn_graph(const SimpleGraph& g) {
  auto p = skeleton(g);
  std::size_t n = g.vertex_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      push(p, commutator(p.node(a), p.node(b)) - p.edge(a, b) * (p.node(a) - p.node(b)),
           RelationFamily::node_pair);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        push(p, triple_element(p, a, b, c), RelationFamily::triple);
        push(p, triple_element(p, c, b, a), RelationFamily::triple);
      }
  for (auto e1 = g.edges().begin(); e1 != g.edges().end(); ++e1)
    for (auto e2 = std::next(e1); e2 != g.edges().end(); ++e2) {
      auto [a, b] = *e1;
      auto [c, d] = *e2;
      if (a == c || a == d || b == c || b == d) continue;
      push(p, commutator(p.edge(a, b), p.edge(c, d)), RelationFamily::disjoint_edges);
    }
  return p;
}

GraphAlgebraPresentation simplify_triangle_free(const GraphAlgebraPresentation& p) {
  const auto& g = p.graph;
  if (auto t = g.find_triangle()) {
    const auto& l = g.labels();
    throw TriangleError("graph has triangle {" + l[(*t)[0]] + ", " + l[(*t)[1]] + ", " +
                        l[(*t)[2]] + "}");
  }
  GraphAlgebraPresentation out = p;
  out.relations.clear();
  for (const auto& r : p.relations)
    if (r.family == RelationFamily::node_pair) out.relations.push_back(r);

  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    for (const auto& [x, y] : g.edges()) {
      if (i == x || i == y) continue;
      bool to_x = g.adjacent(i, x);
      bool to_y = g.adjacent(i, y);
      if (!to_x && !to_y) {
        push(out, commutator(p.node(i), p.edge(x, y)), RelationFamily::far_node_edge);
      } else {
        // Path i - j - k with j the shared endpoint.
        std::size_t j = to_x ? x : y;
        std::size_t k = to_x ? y : x;
        push(out, commutator(p.node(i), p.edge(j, k)) + p.edge(i, j) * p.edge(j, k),
             RelationFamily::near_node_edge);
      }
    }

  for (const auto& r : p.relations)
    if (r.family == RelationFamily::disjoint_edges) out.relations.push_back(r);
  return out;
}

GraphAlgebraPresentation build_pn(int n) {
  if (n < 1) throw std::invalid_argument("P_n needs n >= 1");
  auto p = skeleton(path_graph(n));
  auto vertex = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < vertex; ++i) p.generators.set_rank(p.node_letters[i], static_cast<std::uint32_t>(2 * i));
  for (std::size_t i = 0; i + 1 < vertex; ++i)
    p.generators.set_rank(p.edge_letters.at({i, i + 1}), static_cast<std::uint32_t>(2 * i + 1));

  // 0-based: v(i) is v_{i+1}, e(i) is e_{i+1,i+2}.
  auto v = [&](std::size_t i) { return p.node(i); };
  auto e = [&](std::size_t i) { return p.edge(i, i + 1); };
  std::size_t edges = vertex - 1;

  for (std::size_t i = 0; i < vertex; ++i)
    for (std::size_t j = i + 2; j < vertex; ++j)
      push(p, commutator(v(i), v(j)), RelationFamily::node_pair);
  for (std::size_t i = 0; i + 1 < vertex; ++i)
    push(p, commutator(v(i), v(i + 1)) + e(i) * (v(i + 1) - v(i)), RelationFamily::node_pair);
  for (std::size_t i = 0; i < edges; ++i)
    for (std::size_t j = i + 2; j < edges; ++j)
      push(p, commutator(e(i), e(j)), RelationFamily::disjoint_edges);
  for (std::size_t i = 0; i < vertex; ++i)
    for (std::size_t j = 0; j < edges; ++j)
      if (j > i + 1 || j + 2 < i) push(p, commutator(v(i), e(j)), RelationFamily::far_node_edge);
  for (std::size_t i = 0; i + 2 < vertex; ++i)
    push(p, commutator(v(i), e(i + 1)) + e(i) * e(i + 1), RelationFamily::near_node_edge);
  for (std::size_t i = 0; i + 2 < vertex; ++i)
    push(p, commutator(v(i + 2), e(i)) + e(i + 1) * e(i), RelationFamily::near_node_edge);
  return p;
}

PGCPresentation build_ch_pn(int n) {
  auto pn = build_pn(n);
  PGCPresentation out{pn.generators, {}};
  auto vertex = static_cast<std::size_t>(n);
  auto v = [&](std::size_t i) { return pn.node_letters[i]; };
  auto e = [&](std::size_t i) { return pn.edge_letters.at({i, i + 1}); };
  std::size_t edges = vertex - 1;

  for (std::size_t i = 0; i < vertex; ++i)
    for (std::size_t j = i + 1; j < vertex; ++j) out.add_commuting(v(i), v(j));
  for (std::size_t i = 0; i < edges; ++i)
    for (std::size_t j = i + 2; j < edges; ++j) out.add_commuting(e(i), e(j));
  for (std::size_t i = 0; i < vertex; ++i)
    for (std::size_t j = 0; j < edges; ++j)
      if (j > i + 1 || j + 2 < i) out.add_commuting(v(i), e(j));
  for (std::size_t i = 0; i + 2 < vertex; ++i) {
    out.add_commuting(v(i), e(i + 1));
    out.add_commuting(v(i + 2), e(i));
  }
  return out;
}

MonomialOrder path_order(const GraphAlgebraPresentation& pn) {
  std::size_t n = pn.node_letters.size();
  std::vector<Letter> descending;
  for (std::size_t i = n; i-- > 0;) {
    descending.push_back(pn.node_letters[i]);
    if (i > 0) descending.push_back(pn.edge_letters.at({i - 1, i}));
  }
  return MonomialOrder::from_descending(pn.generators.size(), descending);
}

VertexOrdering path_vertex_ordering(const PGCPresentation& ch_pn) {
  // Generators are v_1..v_n followed by e_{1,2}..e_{n-1,n}.
  std::size_t g = ch_pn.generators.size();
  std::size_t n = (g + 1) / 2;
  VertexOrdering o;
  o.position.resize(g);
  for (std::size_t i = 0; i < n; ++i) o.position[i] = 2 * i + 1;
  for (std::size_t i = 0; i + 1 < n; ++i) o.position[n + i] = 2 * i + 2;
  return o;
}

int word_weight(const Word& w, const Alphabet& alphabet) {
  int total = 0;
  for (Letter l : w) total += alphabet[l].weight;
  return total;
}

PGCPresentation chop(const GraphAlgebraPresentation& p) {
  PGCPresentation out{p.generators, {}};
  for (const auto& r : p.relations) {
    int top = 0;
    for (const auto& [w, c] : r.poly.terms()) top = std::max(top, word_weight(w, p.generators));
    NCPoly head = r.poly.filter([&](const Word& w) { return word_weight(w, p.generators) == top; });
    std::array<NCPoly, 1> single{head};
    auto pgc = is_pgc(p.generators, single);
    if (!pgc || pgc->commuting.size() != 1)
      throw std::invalid_argument("chopped relation is not a commutator: " +
                                  format(head, p.generators));
    out.commuting.insert(*pgc->commuting.begin());
  }
  return out;
}

std::string path_dual_label(const Generator& g) {
  if (!g.label.empty() && g.label[0] == 'v') return "w" + g.label.substr(1);
  if (!g.label.empty() && g.label[0] == 'e') return "d" + g.label.substr(1);
  return prime_label(g);
}

OrbitReport s3_orbit_check(int i, int j, int k) {
  if (i == j || j == k || i == k) throw std::invalid_argument("s3 orbit needs distinct indices");
  SimpleGraph triangle;
  for (int x : {i, j, k}) triangle.add_vertex(std::to_string(x));
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  auto p = skeleton(triangle);

  // Letter images of the permutation sigma of the vertices {0, 1, 2}.
  auto act = [&](const std::array<std::size_t, 3>& sigma, const NCPoly& x) {
    std::vector<Letter> image(p.generators.size());
    for (std::size_t v = 0; v < 3; ++v) image[p.node_letters[v]] = p.node_letters[sigma[v]];
    for (const auto& [ends, letter] : p.edge_letters) {
      std::size_t a = sigma[ends.first], b = sigma[ends.second];
      image[letter] = p.edge_letters.at({std::min(a, b), std::max(a, b)});
    }
    return x.map_letters(image);
  };
  const std::array<std::size_t, 3> mu{1, 0, 2};
  const std::array<std::size_t, 3> tau{2, 1, 0};

  OrbitReport report;
  report.alphabet = p.generators;
  report.v_ijk = triple_element(p, 0, 1, 2);
  report.v_kji = triple_element(p, 2, 1, 0);
  report.mu_v_ijk = act(mu, report.v_ijk);
  report.mu_v_kji = act(mu, report.v_kji);
  report.mu_action_ok = report.mu_v_ijk == -report.v_ijk &&
                        report.mu_v_kji == report.v_kji - report.v_ijk;

  std::vector<NCPoly> base{report.v_ijk, report.v_kji};
  std::vector<NCPoly> moved{report.v_ijk, report.v_kji, act(tau, report.v_ijk),
                            act(tau, report.v_kji)};
  report.tau_action_ok = span_rank(base) == span_rank(moved);

  std::vector<NCPoly> orbit;
  std::array<std::size_t, 3> sigma{0, 1, 2};
  do {
    orbit.push_back(act(sigma, report.v_ijk));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  report.dimension = span_rank(orbit);
  return report;
}

}  // namespace ncalg
