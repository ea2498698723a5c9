#include <random>

#include "doctest.h"
#include "ncalg/qnpath.hpp"
#include "ncalg/rewrite.hpp"
#include "oracles.hpp"

using namespace ncalg;

namespace {

bool contains_up_to_scalar(const std::vector<NCPoly>& rels, const NCPoly& q) {
  return std::any_of(rels.begin(), rels.end(), [&](const NCPoly& r) { return proportional(r, q); });
}

bool same_up_to_scalar(std::vector<NCPoly> a, std::vector<NCPoly> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (!contains_up_to_scalar(b, p)) return false;
  return true;
}

// Relation count of the path presentation, straight from the index ranges
// of its six families.
std::size_t pn_family_count(int n) {
  std::size_t count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) ++count;  // [v_i, v_j]
  count += n >= 1 ? n - 1 : 0;                 // [v_i, v_{i+1}] + ...
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) ++count;  // [e, e]
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - 1; ++j)
      if (j > i + 1 || j < i - 2) ++count;  // [v_i, e_{j,j+1}]
  count += n >= 2 ? 2 * (n - 2) : 0;        // the two near families
  return count;
}

}  // namespace

TEST_CASE("build_pn") {
  auto p1 = build_pn(1);
  CHECK(p1.generators.size() == 1);
  CHECK(p1.relations.empty());

  auto p2 = build_pn(2);
  REQUIRE(p2.relations.size() == 1);
  CHECK(proportional(p2.relations[0].poly,
                     parse_poly("v1*v2 - v2*v1 + e12*v2 - e12*v1", p2.generators)));

  for (int n = 1; n <= 9; ++n) {
    auto pn = build_pn(n);
    CHECK(pn.generators.size() == static_cast<std::size_t>(2 * n - 1));
    CHECK(pn.relations.size() == pn_family_count(n));
    for (const auto& r : pn.relations) {
      CHECK(r.poly.is_homogeneous());
      CHECK(r.poly.degree() == 2);
    }
  }
  CHECK(pn_family_count(4) == 13);
  CHECK_THROWS(build_pn(0));
}

TEST_CASE("path order") {
  auto p4 = build_pn(4);
  CHECK(path_order(p4).format(p4.generators) == "v4>e34>v3>e23>v2>e12>v1");
}

TEST_CASE("graph algebra on an edgeless graph is commutative") {
  SimpleGraph g({"1", "2", "3"});
  auto q = build_qn_graph(g);
  CHECK(q.generators.size() == 3);
  REQUIRE(q.relations.size() == 3);
  for (const auto& r : q.relations) CHECK(r.family == RelationFamily::node_pair);
  CHECK(contains_up_to_scalar(q.relation_polys(), parse_poly("v1*v3 - v3*v1", q.generators)));
}

TEST_CASE("Q_2 on one edge") {
  auto q = build_qn_graph(path_graph(2));
  REQUIRE(q.relations.size() == 1);
  auto expected = commutator(q.node(0), q.node(1)) - q.edge(0, 1) * (q.node(0) - q.node(1));
  CHECK(proportional(q.relations[0].poly, expected));
}

TEST_CASE("triangle-free simplification on P_3") {
  auto s = simplify_triangle_free(build_qn_graph(path_graph(3)));
  auto rels = s.relation_polys();
  const auto& a = s.generators;
  CHECK(contains_up_to_scalar(rels, parse_poly("v1*e23 - e23*v1 + e12*e23", a)));
  CHECK(contains_up_to_scalar(rels, parse_poly("v3*e12 - e12*v3 + e23*e12", a)));
}

TEST_CASE("triangle-free simplification preserves the ideal on small graphs") {
  // Star with centre 0 and leaves 1, 2, 3, plus a few random forests.
  SimpleGraph star({"0", "1", "2", "3"});
  star.add_edge("0", "1");
  star.add_edge("0", "2");
  star.add_edge("0", "3");
  std::vector<SimpleGraph> graphs{star, path_graph(4)};
  std::mt19937_64 rng(3);
  for (int t = 0; t < 6; ++t) {
    SimpleGraph g({"1", "2", "3", "4"});
    for (std::size_t v = 1; v < 4; ++v)
      if (rng() % 3) g.add_edge(v, rng() % v);
    graphs.push_back(g);
  }
  for (const auto& g : graphs) {
    auto q = build_qn_graph(g);
    auto s = simplify_triangle_free(q);
    auto a = q.relation_polys();
    auto b = s.relation_polys();
    CHECK(same_span(a, b));
  }
}

TEST_CASE("star relations take the near form") {
  SimpleGraph star({"0", "1", "2"});
  star.add_edge("0", "1");
  star.add_edge("0", "2");
  auto s = simplify_triangle_free(build_qn_graph(star));
  const auto& a = s.generators;
  // Path 1 - 0 - 2: [u(1), u(0,2)] + u(1,0) u(0,2).
  CHECK(contains_up_to_scalar(s.relation_polys(), parse_poly("v1*e02 - e02*v1 + e01*e02", a)));
  CHECK(contains_up_to_scalar(s.relation_polys(), parse_poly("v2*e01 - e01*v2 + e02*e01", a)));
}

TEST_CASE("triangles are rejected") {
  SimpleGraph tri({"1", "2", "3"});
  tri.add_edge("1", "2");
  tri.add_edge("2", "3");
  tri.add_edge("1", "3");
  CHECK_THROWS_AS(simplify_triangle_free(build_qn_graph(tri)), TriangleError);
}

TEST_CASE("simplification reproduces P_n") {
  for (int n = 1; n <= 8; ++n) {
    auto s = simplify_triangle_free(build_qn_graph(path_graph(n)));
    CHECK(same_up_to_scalar(s.relation_polys(), build_pn(n).relation_polys()));
  }
}

TEST_CASE("chop") {
  auto p2 = build_pn(2);
  auto c2 = chop(p2);
  CHECK(c2.commuting.size() == 1);
  CHECK(proportional(c2.relations()[0], parse_poly("v1*v2 - v2*v1", p2.generators)));

  auto p3 = build_pn(3);
  auto c3 = chop(p3);
  auto v1 = *p3.generators.find("v1");
  auto e23 = *p3.generators.find("e23");
  CHECK(c3.commute(v1, e23));

  for (int n = 1; n <= 12; ++n) CHECK(chop(build_pn(n)).commuting == build_ch_pn(n).commuting);

  // Lower-weight parts of a relation that is not a commutator on top.
  GraphAlgebraPresentation odd = build_pn(2);
  odd.relations = {{parse_poly("v1*v1 + e12*e12", odd.generators), RelationFamily::node_pair}};
  CHECK_THROWS(chop(odd));
}

TEST_CASE("word weight is additive") {
  auto p5 = build_pn(5);
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    auto u = oracle::random_word(rng, p5.generators.size(), rng() % 5);
    auto v = oracle::random_word(rng, p5.generators.size(), rng() % 5);
    CHECK(word_weight(u * v, p5.generators) ==
          word_weight(u, p5.generators) + word_weight(v, p5.generators));
  }
  CHECK(word_weight(parse_word("v1*e12", p5.generators), p5.generators) == 3);
}

TEST_CASE("S_3 orbit") {
  auto r = s3_orbit_check(1, 2, 3);
  CHECK(r.mu_action_ok);
  CHECK(r.tau_action_ok);
  CHECK(r.dimension == 2);
  CHECK(r.mu_v_ijk == -r.v_ijk);
  CHECK(r.mu_v_kji == r.v_kji - r.v_ijk);
  for (auto [i, j, k] : {std::array{2, 5, 9}, std::array{3, 1, 2}}) CHECK(s3_orbit_check(i, j, k).dimension <= 2);
}

TEST_CASE("tau swaps the two spanning triple elements") {
  SimpleGraph tri({"1", "2", "3"});
  tri.add_edge("1", "2");
  tri.add_edge("2", "3");
  tri.add_edge("1", "3");
  auto q = build_qn_graph(tri);
  auto v123 = triple_element(q, 0, 1, 2);
  auto v321 = triple_element(q, 2, 1, 0);
  // tau = (1 3) on vertex labels.
  std::vector<Letter> image(q.generators.size());
  auto vlabel = [](int v) { return "v" + std::to_string(v); };
  for (int v = 1; v <= 3; ++v) image[q.generators.at(vlabel(v))] = q.generators.at(vlabel(4 - v));
  image[q.generators.at("e12")] = q.generators.at("e23");
  image[q.generators.at("e23")] = q.generators.at("e12");
  image[q.generators.at("e13")] = q.generators.at("e13");
  CHECK(v123.map_letters(image) == v321);
}
