#pragma once

// Free associative algebra over the rationals: generators, words,
// noncommutative polynomials and degree-lexicographic monomial orders.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ncalg/rational.hpp"

namespace ncalg {

using Letter = std::uint32_t;

enum class GeneratorKind { node, edge };

struct Generator {
  std::string label;
  GeneratorKind kind = GeneratorKind::node;
  // Position in the presentation's preferred total order; larger is greater.
  std::uint32_t rank = 0;
  // Filtration weight: 2 for nodes u(i), 1 for edges u(i,j).
  int weight = 2;
};

int default_weight(GeneratorKind kind);

/// Generator table of one presentation. Words refer to generators by their
/// index (a Letter); labels are only consulted for input and output.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<std::string> labels);

  /// Appends a generator and returns its letter. The rank defaults to the
  /// insertion index when not set explicitly. Duplicate labels throw.
  Letter add(std::string label, GeneratorKind kind = GeneratorKind::node);
  Letter add(Generator g);

  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  const Generator& operator[](Letter l) const { return gens_.at(l); }
  std::span<const Generator> generators() const { return gens_; }

  std::optional<Letter> find(std::string_view label) const;
  Letter at(std::string_view label) const;

  void set_rank(Letter l, std::uint32_t rank) { gens_.at(l).rank = rank; }

  friend bool operator==(const Alphabet& a, const Alphabet& b);

 private:
  std::vector<Generator> gens_;
  std::map<std::string, Letter, std::less<>> index_;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::span<const Letter> letters)
      : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word subword(std::size_t pos, std::size_t len) const;
  bool contains_factor(const Word& factor) const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b, const Word& c);

/// Storage order for polynomial terms: length, then letter index. Independent
/// of any monomial order so polynomials from different orders mix freely.
struct CanonicalLess {
  bool operator()(const Word& a, const Word& b) const;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Degree-lexicographic order: shorter words are smaller; equal lengths are
/// compared left to right by generator rank.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// ranks[l] is the rank of letter l; ranks must be pairwise distinct.
  explicit MonomialOrder(std::vector<std::uint32_t> ranks);

  static MonomialOrder from_alphabet(const Alphabet& alphabet);
  /// `greatest_first` lists every letter exactly once, largest first.
  static MonomialOrder from_descending(std::size_t generator_count,
                                       std::span<const Letter> greatest_first);
  /// Parses "c>b>a" against the alphabet. Every generator must appear once.
  static MonomialOrder parse(const Alphabet& alphabet, std::string_view text);

  std::strong_ordering compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  std::size_t generator_count() const { return ranks_.size(); }
  std::uint32_t rank(Letter l) const { return ranks_.at(l); }
  std::vector<Letter> letters_descending() const;
  std::string format(const Alphabet& alphabet) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::vector<std::uint32_t> ranks_;
};

/// Comparator adaptor ordering words greatest-first under a monomial order.
struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const {
    return order->compare(a, b) > 0;
  }
};

class NCPoly {
 public:
  using Terms = std::map<Word, Rational, CanonicalLess>;

  NCPoly() = default;
  NCPoly(const Rational& constant);
  NCPoly(int constant) : NCPoly(Rational(constant)) {}

  static NCPoly monomial(Word w, const Rational& c = 1);
  static NCPoly generator(Letter l) { return monomial(Word{l}); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const Word& w) const;

  /// Largest word length; 0 for the zero polynomial.
  std::size_t degree() const;
  bool is_homogeneous() const;

  /// Adds c*w in place; a resulting zero coefficient removes the term.
  void add_term(const Word& w, const Rational& c);

  /// Substitutes letter l by letter image[l] in every word.
  NCPoly map_letters(std::span<const Letter> image) const;
  /// Terms whose words satisfy the predicate.
  NCPoly filter(const std::function<bool(const Word&)>& keep) const;

  NCPoly& operator+=(const NCPoly& q);
  NCPoly& operator-=(const NCPoly& q);
  NCPoly& operator*=(const Rational& c);

  friend NCPoly operator+(NCPoly p, const NCPoly& q) { return p += q; }
  friend NCPoly operator-(NCPoly p, const NCPoly& q) { return p -= q; }
  friend NCPoly operator-(NCPoly p) { return p *= Rational(-1); }
  friend NCPoly operator*(const NCPoly& p, const NCPoly& q);
  friend NCPoly operator*(NCPoly p, const Rational& c) { return p *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly p) { return p *= c; }
  friend bool operator==(const NCPoly&, const NCPoly&) = default;

 private:
  Terms terms_;
};

NCPoly commutator(const NCPoly& x, const NCPoly& y);

/// The order-greatest word of p and its coefficient. Throws
/// std::domain_error("no leading term") for the zero polynomial.
std::pair<Word, Rational> leading_term(const NCPoly& p,
                                       const MonomialOrder& order);

/// True when p = c*q for some nonzero rational c.
bool proportional(const NCPoly& p, const NCPoly& q);

/// Dimension of the rational span of the given polynomials.
std::size_t span_rank(std::span<const NCPoly> polys);
bool same_span(std::span<const NCPoly> a, std::span<const NCPoly> b);

// ---------------------------------------------------------------------------
// Text syntax. Terms are joined by " + " / " - ", words are labels separated
// by "*", and a coefficient of +-1 is omitted:  "v1*v2 - e12*v1 + 3/2*e12*v2".
// The unit word prints as "1"; the zero polynomial as "0".

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string format(const Word& w, const Alphabet& alphabet);
/// Terms are printed greatest-first under `order` when given, otherwise in
/// canonical storage order reversed (longest words first).
std::string format(const NCPoly& p, const Alphabet& alphabet,
                   const MonomialOrder* order = nullptr);
std::vector<std::string> word_labels(const Word& w, const Alphabet& alphabet);

/// Parses one polynomial. "lhs = rhs" is accepted and means lhs - rhs.
NCPoly parse_poly(std::string_view text, const Alphabet& alphabet);
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Generators plus defining relations, as read from a presentation file:
///   generators: a b c
///   a*b - b*a
///   b*c = c*b
/// Blank lines and '#' comments are ignored.
struct Presentation {
  Alphabet alphabet;
  std::vector<NCPoly> relations;
};

Presentation read_presentation(std::istream& in);
void write_presentation(std::ostream& out, const Alphabet& alphabet,
                        std::span<const NCPoly> relations);

}  // namespace ncalg
