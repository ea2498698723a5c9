#include "ncalg/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ncalg {

int default_weight(GeneratorKind kind) {
  return kind == GeneratorKind::node ? 2 : 1;
}

// --- Alphabet ---------------------------------------------------------------

Alphabet::Alphabet(std::initializer_list<std::string> labels) {
  for (const auto& l : labels) add(l);
}

Letter Alphabet::add(std::string label, GeneratorKind kind) {
  Generator g;
  g.label = std::move(label);
  g.kind = kind;
  g.rank = static_cast<std::uint32_t>(gens_.size());
  g.weight = default_weight(kind);
  return add(std::move(g));
}

Letter Alphabet::add(Generator g) {
  if (g.label.empty()) throw std::invalid_argument("empty generator label");
  if (index_.contains(g.label))
    throw std::invalid_argument("duplicate generator '" + g.label + "'");
  auto l = static_cast<Letter>(gens_.size());
  index_.emplace(g.label, l);
  gens_.push_back(std::move(g));
  return l;
}

std::optional<Letter> Alphabet::find(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::at(std::string_view label) const {
  if (auto l = find(label)) return *l;
  throw std::invalid_argument("unknown generator '" + std::string(label) + "'");
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a.gens_[i];
    const auto& y = b.gens_[i];
    if (x.label != y.label || x.kind != y.kind || x.rank != y.rank ||
        x.weight != y.weight)
      return false;
  }
  return true;
}

// --- Word -------------------------------------------------------------------

Word Word::subword(std::size_t pos, std::size_t len) const {
  return Word(std::span<const Letter>(letters_).subspan(pos, len));
}

bool Word::contains_factor(const Word& factor) const {
  return std::search(letters_.begin(), letters_.end(), factor.letters_.begin(),
                     factor.letters_.end()) != letters_.end() ||
         factor.empty();
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters_.begin(), a.letters_.end());
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b, const Word& c) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size() + c.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  out.insert(out.end(), c.begin(), c.end());
  return Word(std::move(out));
}

bool CanonicalLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  auto la = a.letters();
  auto lb = b.letters();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(),
                                      lb.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= l + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ w.size());
}

// --- MonomialOrder ----------------------------------------------------------

MonomialOrder::MonomialOrder(std::vector<std::uint32_t> ranks)
    : ranks_(std::move(ranks)) {
  std::set<std::uint32_t> seen(ranks_.begin(), ranks_.end());
  if (seen.size() != ranks_.size())
    throw std::invalid_argument("generator ranks must be distinct");
}

MonomialOrder MonomialOrder::from_alphabet(const Alphabet& alphabet) {
  std::vector<std::uint32_t> ranks;
  ranks.reserve(alphabet.size());
  for (const auto& g : alphabet.generators()) ranks.push_back(g.rank);
  return MonomialOrder(std::move(ranks));
}

MonomialOrder MonomialOrder::from_descending(
    std::size_t generator_count, std::span<const Letter> greatest_first) {
  if (greatest_first.size() != generator_count)
    throw std::invalid_argument("order must list every generator exactly once");
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> ranks(generator_count, unset);
  auto r = static_cast<std::uint32_t>(generator_count);
  for (Letter l : greatest_first) {
    if (l >= generator_count || ranks[l] != unset)
      throw std::invalid_argument("order must list every generator exactly once");
    ranks[l] = --r;
  }
  return MonomialOrder(std::move(ranks));
}

MonomialOrder MonomialOrder::parse(const Alphabet& alphabet,
                                   std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find('>', pos);
    if (next == std::string_view::npos) next = text.size();
    auto piece = text.substr(pos, next - pos);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front())))
      piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back())))
      piece.remove_suffix(1);
    if (piece.empty()) throw std::invalid_argument("empty entry in order list");
    letters.push_back(alphabet.at(piece));
    pos = next + 1;
  }
  if (letters.size() != alphabet.size()) {
    std::set<Letter> named(letters.begin(), letters.end());
    for (Letter l = 0; l < alphabet.size(); ++l)
      if (!named.contains(l))
        throw std::invalid_argument("order does not mention generator '" +
                                    alphabet[l].label + "'");
  }
  return from_descending(alphabet.size(), letters);
}

std::strong_ordering MonomialOrder::compare(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return ranks_[a[i]] <=> ranks_[b[i]];
  }
  return std::strong_ordering::equal;
}

std::vector<Letter> MonomialOrder::letters_descending() const {
  std::vector<Letter> out(ranks_.size());
  for (Letter l = 0; l < ranks_.size(); ++l) out[l] = l;
  std::sort(out.begin(), out.end(),
            [&](Letter a, Letter b) { return ranks_[a] > ranks_[b]; });
  return out;
}

std::string MonomialOrder::format(const Alphabet& alphabet) const {
  std::string out;
  for (Letter l : letters_descending()) {
    if (!out.empty()) out += ">";
    out += alphabet[l].label;
  }
  return out;
}

// --- NCPoly -----------------------------------------------------------------

NCPoly::NCPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Word{}, constant);
}

NCPoly NCPoly::monomial(Word w, const Rational& c) {
  NCPoly p;
  if (c != 0) p.terms_.emplace(std::move(w), c);
  return p;
}

Rational NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t NCPoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

bool NCPoly::is_homogeneous() const {
  return terms_.empty() ||
         terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

NCPoly NCPoly::map_letters(std::span<const Letter> image) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) {
    std::vector<Letter> mapped;
    mapped.reserve(w.size());
    for (Letter l : w) mapped.push_back(image[l]);
    out.add_term(Word(std::move(mapped)), c);
  }
  return out;
}

NCPoly NCPoly::filter(const std::function<bool(const Word&)>& keep) const {
  NCPoly out;
  for (const auto& [w, c] : terms_)
    if (keep(w)) out.terms_.emplace_hint(out.terms_.end(), w, c);
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& q) {
  for (const auto& [w, c] : q.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& q) {
  for (const auto& [w, c] : q.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NCPoly operator*(const NCPoly& p, const NCPoly& q) {
  NCPoly out;
  for (const auto& [u, a] : p.terms_)
    for (const auto& [v, b] : q.terms_) out.add_term(u * v, a * b);
  return out;
}

NCPoly commutator(const NCPoly& x, const NCPoly& y) { return x * y - y * x; }

std::pair<Word, Rational> leading_term(const NCPoly& p,
                                       const MonomialOrder& order) {
  if (p.is_zero()) throw std::domain_error("no leading term");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

bool proportional(const NCPoly& p, const NCPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.term_count() != q.term_count()) return false;
  Rational ratio = q.terms().begin()->second / p.terms().begin()->second;
  return p * ratio == q;
}

namespace {

// Row-echelon basis keyed by each row's canonical-greatest word.
class EchelonBasis {
 public:
  // Returns true when the row was independent of the rows already present.
  bool insert(NCPoly row) {
    while (!row.is_zero()) {
      const auto& [w, c] = *row.terms().rbegin();
      auto it = pivots_.find(w);
      if (it == pivots_.end()) {
        Rational inv = 1 / c;
        row *= inv;
        Word key = row.terms().rbegin()->first;
        pivots_.emplace(std::move(key), std::move(row));
        return true;
      }
      row -= it->second * Rational(c);
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<Word, NCPoly, CanonicalLess> pivots_;
};

}  // namespace

std::size_t span_rank(std::span<const NCPoly> polys) {
  EchelonBasis basis;
  for (const auto& p : polys) basis.insert(p);
  return basis.rank();
}

bool same_span(std::span<const NCPoly> a, std::span<const NCPoly> b) {
  std::vector<NCPoly> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  auto r = span_rank(both);
  return r == span_rank(a) && r == span_rank(b);
}

// --- text syntax ------------------------------------------------------------

ParseError::ParseError(const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                              : what),
      line_(line) {}

std::vector<std::string> word_labels(const Word& w, const Alphabet& alphabet) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(alphabet[l].label);
  return out;
}

std::string format(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    if (!out.empty()) out += '*';
    out += alphabet[l].label;
  }
  return out;
}

std::string format(const NCPoly& p, const Alphabet& alphabet,
                   const MonomialOrder* order) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Word, Rational>> terms(p.terms().rbegin(),
                                               p.terms().rend());
  if (order)
    std::stable_sort(terms.begin(), terms.end(), [&](auto& a, auto& b) {
      return order->compare(a.first, b.first) > 0;
    });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += format(w, alphabet);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Alphabet& alphabet)
      : text_(text), alphabet_(alphabet) {}

  NCPoly parse() {
    NCPoly lhs = parse_sum();
    skip_space();
    if (peek() == '=') {
      ++pos_;
      NCPoly rhs = parse_sum();
      lhs -= rhs;
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, peek()) + "'");
    return lhs;
  }

 private:
  NCPoly parse_sum() {
    NCPoly sum;
    skip_space();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    sum += parse_term() * Rational(sign);
    for (;;) {
      skip_space();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      sum += parse_term() * Rational(c == '-' ? -1 : 1);
    }
    return sum;
  }

  NCPoly parse_term() {
    Rational coeff = 1;
    std::vector<Letter> letters;
    parse_factor(coeff, letters);
    for (;;) {
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      parse_factor(coeff, letters);
    }
    return NCPoly::monomial(Word(std::move(letters)), coeff);
  }

  void parse_factor(Rational& coeff, std::vector<Letter>& letters) {
    skip_space();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = parse_integer();
      Integer den = 1;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected denominator");
        den = parse_integer();
        if (den == 0) fail("zero denominator");
      }
      coeff *= Rational(num, den);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
      auto label = text_.substr(start, pos_ - start);
      auto l = alphabet_.find(label);
      if (!l) fail("unknown generator '" + std::string(label) + "'");
      letters.push_back(*l);
      return;
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  Integer parse_integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  static bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

NCPoly parse_poly(std::string_view text, const Alphabet& alphabet) {
  return PolyParser(text, alphabet).parse();
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  auto p = parse_poly(text, alphabet);
  if (p.term_count() != 1 || p.terms().begin()->second != 1)
    throw ParseError("expected a single word: '" + std::string(text) + "'");
  return p.terms().begin()->first;
}

Presentation read_presentation(std::istream& in) {
  Presentation out;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    if (!have_header) {
      constexpr std::string_view key = "generators:";
      if (!view.starts_with(key))
        throw ParseError("expected 'generators:' header", lineno);
      std::istringstream labels{std::string(view.substr(key.size()))};
      std::string label;
      try {
        while (labels >> label) out.alphabet.add(label);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno);
      }
      have_header = true;
      continue;
    }
    try {
      auto p = parse_poly(view, out.alphabet);
      if (!p.is_zero()) out.relations.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!have_header) throw ParseError("missing 'generators:' header", lineno);
  return out;
}

void write_presentation(std::ostream& out, const Alphabet& alphabet,
                        std::span<const NCPoly> relations) {
  out << "generators:";
  for (const auto& g : alphabet.generators()) out << ' ' << g.label;
  out << '\n';
  for (const auto& r : relations) out << format(r, alphabet) << '\n';
}

}  // namespace ncalg
