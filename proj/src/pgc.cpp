#include "ncalg/pgc.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ncalg {

// --- SimpleGraph ------------------------------------------------------------

SimpleGraph::SimpleGraph(std::vector<std::string> labels) {
  for (auto& l : labels) add_vertex(std::move(l));
}

std::size_t SimpleGraph::add_vertex(std::string label) {
  if (find(label)) throw std::invalid_argument("duplicate vertex '" + label + "'");
  labels_.push_back(std::move(label));
  return labels_.size() - 1;
}

void SimpleGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= labels_.size() || b >= labels_.size())
    throw std::out_of_range("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("loop at vertex '" + labels_[a] + "'");
  edges_.emplace(std::min(a, b), std::max(a, b));
}

void SimpleGraph::add_edge(std::string_view a, std::string_view b) {
  auto ia = find(a);
  auto ib = find(b);
  if (!ia || !ib)
    throw std::invalid_argument("unknown vertex '" + std::string(ia ? b : a) + "'");
  add_edge(*ia, *ib);
}

std::optional<std::size_t> SimpleGraph::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool SimpleGraph::adjacent(std::size_t a, std::size_t b) const {
  return edges_.contains({std::min(a, b), std::max(a, b)});
}

std::size_t SimpleGraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(
      edges_.begin(), edges_.end(), [v](auto& e) { return e.first == v || e.second == v; }));
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph out(labels_);
  for (std::size_t a = 0; a < labels_.size(); ++a)
    for (std::size_t b = a + 1; b < labels_.size(); ++b)
      if (!adjacent(a, b)) out.add_edge(a, b);
  return out;
}

std::optional<std::array<std::size_t, 3>> SimpleGraph::find_triangle() const {
  for (const auto& [a, b] : edges_)
    for (std::size_t c = b + 1; c < labels_.size(); ++c)
      if (adjacent(a, c) && adjacent(b, c)) return std::array{a, b, c};
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

SimpleGraph read_graph(std::istream& in) {
  SimpleGraph g;
  bool have_vertices = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    try {
      if (view.starts_with("vertices:")) {
        if (have_vertices) throw ParseError("second 'vertices:' line", lineno);
        for (auto& label : split_words(view.substr(9))) g.add_vertex(label);
        have_vertices = true;
      } else if (view.starts_with("edge:")) {
        if (!have_vertices) throw ParseError("'edge:' before 'vertices:'", lineno);
        auto ends = split_words(view.substr(5));
        if (ends.size() != 2) throw ParseError("an edge needs exactly two vertices", lineno);
        g.add_edge(ends[0], ends[1]);
      } else {
        throw ParseError("expected 'vertices:' or 'edge:'", lineno);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!have_vertices) throw ParseError("missing 'vertices:' line", lineno);
  return g;
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << "vertices:";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& [a, b] : g.edges())
    out << "edge: " << g.labels()[a] << ' ' << g.labels()[b] << '\n';
}

// --- PGC presentations ------------------------------------------------------

bool PGCPresentation::commute(Letter a, Letter b) const {
  return commuting.contains({std::min(a, b), std::max(a, b)});
}

void PGCPresentation::add_commuting(Letter a, Letter b) {
  if (a == b) throw std::invalid_argument("a generator trivially commutes with itself");
  commuting.emplace(std::min(a, b), std::max(a, b));
}

std::vector<NCPoly> PGCPresentation::relations() const {
  std::vector<NCPoly> out;
  for (const auto& [a, b] : commuting)
    out.push_back(commutator(NCPoly::generator(a), NCPoly::generator(b)));
  return out;
}

std::optional<PGCPresentation> is_pgc(const Alphabet& alphabet,
                                      std::span<const NCPoly> relations) {
  PGCPresentation p{alphabet, {}};
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    if (r.term_count() != 2) return std::nullopt;
    auto first = r.terms().begin();
    auto second = std::next(first);
    const Word& u = first->first;
    const Word& v = second->first;
    if (u.size() != 2 || v.size() != 2) return std::nullopt;
    if (u[0] == u[1] || u[0] != v[1] || u[1] != v[0]) return std::nullopt;
    if (first->second + second->second != 0) return std::nullopt;
    p.add_commuting(u[0], u[1]);
  }
  return p;
}

SimpleGraph commuting_graph(const PGCPresentation& p) {
  SimpleGraph g;
  for (const auto& gen : p.generators.generators()) g.add_vertex(gen.label);
  for (const auto& [a, b] : p.commuting) g.add_edge(a, b);
  return g;
}

SimpleGraph noncommuting_graph(const PGCPresentation& p) {
  return commuting_graph(p).complement();
}

PGCPresentation presentation_from_graph(const SimpleGraph& g, GraphMode mode) {
  PGCPresentation p;
  for (const auto& l : g.labels()) p.generators.add(l);
  for (std::size_t a = 0; a < g.vertex_count(); ++a)
    for (std::size_t b = a + 1; b < g.vertex_count(); ++b)
      if (g.adjacent(a, b) == (mode == GraphMode::commuting))
        p.add_commuting(static_cast<Letter>(a), static_cast<Letter>(b));
  return p;
}

// --- vertex orderings -------------------------------------------------------

namespace {

// Positions are handed out 1, 2, ... in sequence. A vertex y becomes doomed
// once two placed vertices a (earlier) and b (later) satisfy commute(a, b),
// commute(b, y) and !commute(a, y): placing y anywhere later would put b
// strictly between a and y.
class OrderingSearch {
 public:
  OrderingSearch(const SimpleGraph& g, GraphMode mode)
      : n_(g.vertex_count()), commute_(n_ * n_, false), doom_(n_, 0),
        placed_(n_, false) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (a != b) commute_[a * n_ + b] = g.adjacent(a, b) == (mode == GraphMode::commuting);
    candidates_.resize(n_);
    std::iota(candidates_.begin(), candidates_.end(), 0);
    std::vector<std::size_t> degree(n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) degree[a] += commute_[a * n_ + b];
    const auto& labels = g.labels();
    std::sort(candidates_.begin(), candidates_.end(), [&](std::size_t x, std::size_t y) {
      if (degree[x] != degree[y]) return degree[x] < degree[y];
      return labels[x] < labels[y];
    });
  }

  std::optional<VertexOrdering> run() {
    if (!extend()) return std::nullopt;
    VertexOrdering out;
    out.position.assign(n_, 0);
    for (std::size_t i = 0; i < sequence_.size(); ++i) out.position[sequence_[i]] = i + 1;
    return out;
  }

 private:
  bool commute(std::size_t a, std::size_t b) const { return commute_[a * n_ + b]; }

  bool extend() {
    if (sequence_.size() == n_) return true;
    for (std::size_t x : candidates_) {
      if (placed_[x] || doom_[x] > 0) continue;
      auto marks = place(x);
      bool viable = true;
      for (std::size_t y = 0; y < n_ && viable; ++y)
        if (!placed_[y] && doom_[y] > 0) viable = false;
      if (viable && extend()) return true;
      unplace(x, marks);
    }
    return false;
  }

  std::vector<std::size_t> place(std::size_t x) {
    std::vector<std::size_t> marks;
    for (std::size_t a : sequence_) {
      if (!commute(a, x)) continue;
      for (std::size_t y = 0; y < n_; ++y)
        if (!placed_[y] && y != x && commute(x, y) && !commute(a, y)) {
          ++doom_[y];
          marks.push_back(y);
        }
    }
    placed_[x] = true;
    sequence_.push_back(x);
    return marks;
  }

  void unplace(std::size_t x, const std::vector<std::size_t>& marks) {
    for (std::size_t y : marks) --doom_[y];
    placed_[x] = false;
    sequence_.pop_back();
  }

  std::size_t n_;
  std::vector<bool> commute_;
  std::vector<std::size_t> doom_;
  std::vector<bool> placed_;
  std::vector<std::size_t> candidates_;
  std::vector<std::size_t> sequence_;
};

}  // namespace

std::optional<VertexOrdering> find_vertex_ordering(const SimpleGraph& g, GraphMode mode) {
  return OrderingSearch(g, mode).run();
}

MonomialOrder ordering_to_order(const VertexOrdering& o) {
  std::vector<std::uint32_t> ranks;
  ranks.reserve(o.position.size());
  for (auto p : o.position) {
    if (p == 0 || p > o.position.size())
      throw std::invalid_argument("vertex ordering is not onto [n]");
    ranks.push_back(static_cast<std::uint32_t>(p - 1));
  }
  return MonomialOrder(std::move(ranks));
}

RewriteSystem ordering_to_rewrite(const PGCPresentation& p, const VertexOrdering& o) {
  if (o.position.size() != p.generators.size())
    throw std::invalid_argument("vertex ordering does not cover every generator");
  auto order = ordering_to_order(o);
  std::vector<Reduction> reductions;
  for (auto [a, b] : p.commuting) {
    Letter lo = a, hi = b;
    if (o.position[lo] > o.position[hi]) std::swap(lo, hi);
    reductions.push_back({Word{hi, lo}, NCPoly::monomial(Word{lo, hi})});
  }
  return RewriteSystem(std::move(order), std::move(reductions));
}

// --- duals ------------------------------------------------------------------

std::string prime_label(const Generator& g) { return g.label + "'"; }

DualPresentation pgc_dual(const PGCPresentation& p, const DualNaming& naming) {
  DualPresentation dual;
  for (const auto& g : p.generators.generators()) {
    Generator d = g;
    d.label = naming(g);
    dual.generators.add(std::move(d));
  }
  auto n = static_cast<Letter>(p.generators.size());
  for (Letter i = 0; i < n; ++i)
    for (Letter j = i + 1; j < n; ++j) {
      auto ij = NCPoly::monomial(Word{i, j});
      auto ji = NCPoly::monomial(Word{j, i});
      if (p.commute(i, j)) {
        dual.relations.push_back(ij + ji);
      } else {
        dual.relations.push_back(ij);
        dual.relations.push_back(ji);
      }
    }
  for (Letter i = 0; i < n; ++i) dual.relations.push_back(NCPoly::monomial(Word{i, i}));
  return dual;
}

namespace {

void count_cliques(const std::vector<std::uint32_t>& adj, std::uint32_t candidates,
                   std::size_t size, std::size_t max_size, std::vector<Integer>& counts) {
  while (candidates != 0) {
    int v = __builtin_ctz(candidates);
    candidates &= candidates - 1;
    ++counts[size + 1];
    if (size + 1 < max_size) count_cliques(adj, candidates & adj[v], size + 1, max_size, counts);
  }
}

}  // namespace

std::vector<Integer> dual_hilbert_by_cliques(const PGCPresentation& p, std::size_t max_i) {
  std::size_t n = p.generators.size();
  if (n > 30) throw std::invalid_argument("clique enumeration limited to 30 generators");
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [a, b] : p.commuting) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }
  std::vector<Integer> counts(max_i + 1, 0);
  counts[0] = 1;
  std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  if (max_i > 0) count_cliques(adj, all, 0, max_i, counts);
  return counts;
}

}  // namespace ncalg
