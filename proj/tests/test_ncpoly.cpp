#include <random>
#include <sstream>

#include "doctest.h"
#include "ncalg/ncpoly.hpp"
#include "oracles.hpp"

using namespace ncalg;

namespace {

struct Abc {
  Alphabet alphabet{"a", "b", "c"};
  NCPoly a = NCPoly::generator(0), b = NCPoly::generator(1), c = NCPoly::generator(2);
  NCPoly p(std::string_view s) const { return parse_poly(s, alphabet); }
  Word w(std::string_view s) const { return parse_word(s, alphabet); }
};

}  // namespace

TEST_CASE("deglex compare") {
  Abc x;
  auto cba = MonomialOrder::parse(x.alphabet, "c>b>a");
  CHECK(cba.compare(x.w("c*b"), x.w("b*c")) > 0);
  CHECK(cba.compare(Word{}, x.w("a")) < 0);
  CHECK(cba.compare(x.w("a*a*a"), x.w("c*c")) > 0);
  CHECK(cba.compare(x.w("a*b"), x.w("a*b")) == 0);

  Alphabet p2;
  p2.add("v1");
  p2.add("v2");
  p2.add("e12", GeneratorKind::edge);
  auto path = MonomialOrder::parse(p2, "v2>e12>v1");
  CHECK(path.compare(parse_word("v2*v1", p2), parse_word("e12*v2", p2)) > 0);
  CHECK(path.format(p2) == "v2>e12>v1");
}

TEST_CASE("order parse errors") {
  Abc x;
  CHECK_THROWS(MonomialOrder::parse(x.alphabet, "c>b"));
  CHECK_THROWS(MonomialOrder::parse(x.alphabet, "c>b>z"));
  CHECK_THROWS(MonomialOrder::parse(x.alphabet, "c>b>b"));
}

TEST_CASE("order is total and multiplicative on random words") {
  std::mt19937_64 rng(11);
  MonomialOrder order = MonomialOrder::from_descending(4, std::vector<Letter>{2, 0, 3, 1});
  for (int trial = 0; trial < 2000; ++trial) {
    auto u = oracle::random_word(rng, 4, rng() % 5);
    auto v = oracle::random_word(rng, 4, rng() % 5);
    auto t = oracle::random_word(rng, 4, rng() % 5);
    auto uv = order.compare(u, v);
    CHECK((uv < 0) == (order.compare(v, u) > 0));
    CHECK((uv == 0) == (u == v));
    if (uv < 0 && order.less(v, t)) CHECK(order.less(u, t));
    if (uv < 0) {
      CHECK(order.less(t * u, t * v));
      CHECK(order.less(u * t, v * t));
    }
  }
}

TEST_CASE("addition") {
  Abc x;
  CHECK(x.p("a*b - b*a") + x.p("b*a") == x.p("a*b"));
  CHECK(x.p("a*b") + NCPoly{} == x.p("a*b"));
  CHECK((x.p("2*a*b") + x.p("-2*a*b")).is_zero());
  CHECK(NCPoly(0).is_zero());
}

TEST_CASE("multiplication") {
  Abc x;
  CHECK(x.a * x.b == x.p("a*b"));
  CHECK(x.b * x.a == x.p("b*a"));
  CHECK(x.a * x.b != x.b * x.a);
  CHECK(x.p("a*b + 3") * NCPoly(1) == x.p("a*b + 3"));
  CHECK((x.a + x.b) * x.a == x.p("a*a + b*a"));
}

TEST_CASE("commutator") {
  Abc x;
  CHECK(commutator(x.a, x.a).is_zero());
  CHECK(commutator(x.a, x.b) == x.p("a*b - b*a"));

  Alphabet p2;
  auto v1 = NCPoly::generator(p2.add("v1"));
  auto v2 = NCPoly::generator(p2.add("v2"));
  auto e12 = NCPoly::generator(p2.add("e12", GeneratorKind::edge));
  auto rel = commutator(v1, v2) + e12 * (v2 - v1);
  CHECK(rel == parse_poly("v1*v2 - v2*v1 + e12*v2 - e12*v1", p2));
}

TEST_CASE("leading term") {
  Alphabet p2;
  p2.add("v1");
  p2.add("v2");
  p2.add("e12", GeneratorKind::edge);
  auto order = MonomialOrder::parse(p2, "v2>e12>v1");
  auto [w, c] = leading_term(parse_poly("v1*v2 - v2*v1 + e12*v2 - e12*v1", p2), order);
  CHECK(w == parse_word("v2*v1", p2));
  CHECK(c == -1);

  Abc x;
  auto abc = MonomialOrder::from_alphabet(x.alphabet);
  auto single = leading_term(x.p("b*c*a"), abc);
  CHECK(single.first == x.w("b*c*a"));
  CHECK(single.second == 1);
  CHECK_THROWS_WITH_AS(leading_term(NCPoly{}, abc), "no leading term", std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto p = oracle::random_poly(rng, 3, 3);
    auto q = oracle::random_poly(rng, 3, 3);
    auto r = oracle::random_poly(rng, 3, 3);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p + q == q + p);
    CHECK(p * NCPoly(1) == p);
    CHECK(NCPoly(1) * p == p);
    CHECK((p - p).is_zero());
    auto pq = p * q;
    for (const auto& [w, coeff] : pq.terms()) CHECK(coeff != 0);
  }
}

TEST_CASE("exact arithmetic never rounds") {
  Abc x;
  auto third = x.p("1/3*a");
  CHECK(third * Rational(3) == x.a);
  CHECK((third + third + third) == x.a);
}

TEST_CASE("format and parse round trip") {
  Abc x;
  auto p = x.p("3/2*a*b - b*a + c - 1");
  auto order = MonomialOrder::parse(x.alphabet, "c>b>a");
  std::string text = format(p, x.alphabet, &order);
  CHECK(text == "-b*a + 3/2*a*b + c - 1");
  CHECK(parse_poly(text, x.alphabet) == p);
  CHECK(format(Word{}, x.alphabet) == "1");
  CHECK(format(NCPoly{}, x.alphabet) == "0");
  CHECK(x.p("a*b = b*a") == x.p("a*b - b*a"));
}

TEST_CASE("parse errors") {
  Abc x;
  CHECK_THROWS_AS(parse_poly("a*z", x.alphabet), ParseError);
  CHECK_THROWS_AS(parse_poly("a*", x.alphabet), ParseError);
  std::istringstream in("generators: a b\na*b - b*a\nb*q\n");
  try {
    read_presentation(in);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("presentation round trip") {
  std::istringstream in("# comment\ngenerators: a b c\na*b - b*a\n\nb*c = c*b\n");
  auto pres = read_presentation(in);
  CHECK(pres.alphabet.size() == 3);
  REQUIRE(pres.relations.size() == 2);
  std::ostringstream out;
  write_presentation(out, pres.alphabet, pres.relations);
  std::istringstream again(out.str());
  auto back = read_presentation(again);
  CHECK(back.alphabet == pres.alphabet);
  CHECK(back.relations == pres.relations);
}

TEST_CASE("span rank") {
  Abc x;
  std::vector<NCPoly> polys{x.p("a*b - b*a"), x.p("2*b*a - 2*a*b"), x.p("c"), x.p("a*b - b*a + c")};
  CHECK(span_rank(polys) == 2);
  CHECK(proportional(polys[0], polys[1]));
  CHECK_FALSE(proportional(polys[0], polys[2]));
}
