#pragma once

// Independent brute-force references used to cross-check the library. None of
// these touch the automaton, the rewrite engine or the closed forms.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ncalg/ncpoly.hpp"
#include "ncalg/pgc.hpp"

namespace oracle {

using ncalg::Letter;
using ncalg::NCPoly;
using ncalg::Word;

// Every word of the given length over g letters.
inline std::vector<Word> all_words(std::size_t g, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> w(length, 0);
  if (g == 0) {
    if (length == 0) out.emplace_back();
    return out;
  }
  while (true) {
    out.emplace_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1 == g) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

inline bool has_factor(const Word& w, const Word& f) {
  if (f.size() > w.size()) return false;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < f.size() && ok; ++k) ok = w[i + k] == f[k];
    if (ok) return true;
  }
  return false;
}

inline std::vector<std::uint64_t> count_avoiding(std::size_t g, const std::vector<Word>& bad,
                                                 std::size_t max_length) {
  std::vector<std::uint64_t> out;
  for (std::size_t d = 0; d <= max_length; ++d) {
    std::uint64_t n = 0;
    for (const auto& w : all_words(g, d)) {
      bool ok = true;
      for (const auto& b : bad) ok = ok && !has_factor(w, b);
      n += ok;
    }
    out.push_back(n);
  }
  return out;
}

// Matchings of size j in the n-vertex path, by trying every edge subset.
inline std::uint64_t matchings(int n, int j) {
  int edges = n > 0 ? n - 1 : 0;
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges); ++mask) {
    if (__builtin_popcount(mask) != j) continue;
    // edges k and k+1 share vertex k+1
    if (mask & (mask >> 1)) continue;
    ++count;
  }
  return count;
}

// Dimension of the degree-3 component of T(V)/(R): g^3 - dim(V R + R V).
inline std::size_t degree3_dimension(std::size_t g, const std::vector<NCPoly>& quadratic) {
  std::vector<NCPoly> span;
  for (Letter x = 0; x < g; ++x) {
    auto gen = NCPoly::generator(x);
    for (const auto& r : quadratic) {
      span.push_back(gen * r);
      span.push_back(r * gen);
    }
  }
  return g * g * g - ncalg::span_rank(span);
}

// Dimension of the degree-2 component: g^2 - dim R.
inline std::size_t degree2_dimension(std::size_t g, const std::vector<NCPoly>& quadratic) {
  return g * g - ncalg::span_rank(quadratic);
}

// Checks an ordering against every triple directly.
inline bool ordering_valid(const ncalg::PGCPresentation& p, const ncalg::VertexOrdering& o) {
  std::size_t n = p.generators.size();
  if (o.position.size() != n) return false;
  std::set<std::size_t> seen(o.position.begin(), o.position.end());
  if (seen.size() != n || *seen.begin() != 1 || *seen.rbegin() != n) return false;
  for (Letter a = 0; a < n; ++a)
    for (Letter c = 0; c < n; ++c) {
      if (a == c || p.commute(a, c)) continue;
      for (Letter b = 0; b < n; ++b) {
        if (b == a || b == c || !p.commute(a, b) || !p.commute(b, c)) continue;
        if (o.position[a] < o.position[b] && o.position[b] < o.position[c]) return false;
      }
    }
  return true;
}

inline Word random_word(std::mt19937_64& rng, std::size_t g, std::size_t length) {
  std::uniform_int_distribution<Letter> letter(0, static_cast<Letter>(g - 1));
  std::vector<Letter> w(length);
  for (auto& l : w) l = letter(rng);
  return Word(std::move(w));
}

inline NCPoly random_poly(std::mt19937_64& rng, std::size_t g, std::size_t max_degree,
                          std::size_t max_terms = 4) {
  std::uniform_int_distribution<std::size_t> terms(0, max_terms);
  std::uniform_int_distribution<std::size_t> degree(0, max_degree);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  NCPoly p;
  for (std::size_t t = terms(rng); t > 0; --t)
    p.add_term(random_word(rng, g, degree(rng)), ncalg::Rational(num(rng), den(rng)));
  return p;
}

}  // namespace oracle
