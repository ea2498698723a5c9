#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>

namespace ncalg {

namespace {

NCPoly sandwich(const Word& prefix, const NCPoly& p, const Word& suffix) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) out.add_term(concat(prefix, w, suffix), c);
  return out;
}

std::vector<Word> lhs_list(std::span<const Reduction> reductions) {
  std::vector<Word> out;
  out.reserve(reductions.size());
  for (const auto& r : reductions) out.push_back(r.lhs);
  return out;
}

}  // namespace

// --- RewriteSystem ----------------------------------------------------------

RewriteSystem::RewriteSystem(MonomialOrder order)
    : RewriteSystem(std::move(order), {}) {}

RewriteSystem::RewriteSystem(MonomialOrder order, std::vector<Reduction> reductions)
    : order_(std::move(order)), reductions_(std::move(reductions)) {
  std::sort(reductions_.begin(), reductions_.end(),
            [&](const Reduction& a, const Reduction& b) {
              return order_.less(a.lhs, b.lhs);
            });
  for (std::size_t i = 0; i < reductions_.size(); ++i) {
    const auto& r = reductions_[i];
    if (r.lhs.size() < 2)
      throw std::invalid_argument("reduction lhs must have length >= 2");
    for (Letter l : r.lhs)
      if (l >= order_.generator_count())
        throw std::invalid_argument("reduction uses a letter outside the order");
    for (const auto& [w, c] : r.rhs.terms())
      if (!order_.less(w, r.lhs))
        throw std::invalid_argument("reduction rhs is not below its lhs");
    for (std::size_t j = 0; j < reductions_.size(); ++j)
      if (i != j && reductions_[j].lhs.contains_factor(r.lhs))
        throw std::invalid_argument("reduction system is not inter-reduced");
  }
  auto patterns = lhs_list(reductions_);
  automaton_ = std::make_shared<const FactorAutomaton>(order_.generator_count(),
                                                       patterns);
}

std::size_t RewriteSystem::max_lhs_length() const {
  std::size_t m = 0;
  for (const auto& r : reductions_) m = std::max(m, r.lhs.size());
  return m;
}

bool RewriteSystem::is_quadratic() const {
  return std::all_of(reductions_.begin(), reductions_.end(),
                     [](const Reduction& r) { return r.lhs.size() == 2; });
}

std::vector<Word> RewriteSystem::bad_words() const { return lhs_list(reductions_); }

std::optional<std::size_t> RewriteSystem::find(const Word& lhs) const {
  auto it = std::lower_bound(
      reductions_.begin(), reductions_.end(), lhs,
      [&](const Reduction& r, const Word& w) { return order_.less(r.lhs, w); });
  if (it == reductions_.end() || it->lhs != lhs) return std::nullopt;
  return static_cast<std::size_t>(it - reductions_.begin());
}

std::vector<NCPoly> RewriteSystem::relations() const {
  std::vector<NCPoly> out;
  out.reserve(reductions_.size());
  for (const auto& r : reductions_) out.push_back(r.relation());
  return out;
}

// --- normal forms -----------------------------------------------------------

NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs,
                   std::size_t step_budget) {
  const auto& automaton = rs.automaton();
  std::map<Word, Rational, OrderGreater> pending(OrderGreater{&rs.order()});
  for (const auto& [w, c] : p.terms()) pending.emplace(w, c);

  auto accumulate = [&](Word w, const Rational& c) {
    auto [it, inserted] = pending.try_emplace(std::move(w), c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) pending.erase(it);
  };

  NCPoly result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const Rational& c = node.mapped();
    auto occ = automaton.first_occurrence(w.letters());
    if (!occ) {
      // Everything still pending is smaller, so this term is final.
      result.add_term(w, c);
      continue;
    }
    if (++steps > step_budget) throw ReductionBudgetExhausted();
    const auto& red = rs.reductions()[occ->pattern];
    Word prefix = w.subword(0, occ->position);
    std::size_t tail = occ->position + red.lhs.size();
    Word suffix = w.subword(tail, w.size() - tail);
    for (const auto& [u, d] : red.rhs.terms())
      accumulate(concat(prefix, u, suffix), c * d);
  }
  return result;
}

NCPoly normal_form_randomized(const NCPoly& p, const RewriteSystem& rs,
                              std::uint64_t seed, std::size_t step_budget) {
  const auto& automaton = rs.automaton();
  std::mt19937_64 rng(seed);
  std::unordered_map<Word, Rational, WordHash> terms;
  std::vector<Word> reducible;
  std::unordered_map<Word, std::size_t, WordHash> slot;

  auto untrack = [&](const Word& w) {
    auto it = slot.find(w);
    if (it == slot.end()) return;
    std::size_t i = it->second;
    slot.erase(it);
    if (i + 1 != reducible.size()) {
      reducible[i] = std::move(reducible.back());
      slot[reducible[i]] = i;
    }
    reducible.pop_back();
  };
  auto accumulate = [&](const Word& w, const Rational& c) {
    auto [it, inserted] = terms.try_emplace(w, c);
    if (inserted) {
      if (automaton.first_occurrence(w.letters())) {
        slot.emplace(w, reducible.size());
        reducible.push_back(w);
      }
      return;
    }
    it->second += c;
    if (it->second == 0) {
      terms.erase(it);
      untrack(w);
    }
  };

  for (const auto& [w, c] : p.terms()) accumulate(w, c);

  std::size_t steps = 0;
  while (!reducible.empty()) {
    if (++steps > step_budget) throw ReductionBudgetExhausted();
    std::uniform_int_distribution<std::size_t> pick_term(0, reducible.size() - 1);
    Word w = reducible[pick_term(rng)];
    Rational c = terms.at(w);
    auto occs = automaton.occurrences(w.letters());
    std::uniform_int_distribution<std::size_t> pick_occ(0, occs.size() - 1);
    auto occ = occs[pick_occ(rng)];
    const auto& red = rs.reductions()[occ.pattern];
    Word prefix = w.subword(0, occ.position);
    std::size_t tail = occ.position + red.lhs.size();
    Word suffix = w.subword(tail, w.size() - tail);
    accumulate(w, -c);
    for (const auto& [u, d] : red.rhs.terms())
      accumulate(concat(prefix, u, suffix), c * d);
  }

  NCPoly result;
  for (const auto& [w, c] : terms) result.add_term(w, c);
  return result;
}

// --- orientation ------------------------------------------------------------

namespace {

struct Pending {
  NCPoly poly;
  std::optional<std::size_t> source;
};

OrientResult interreduce(std::vector<Pending> work, const MonomialOrder& order) {
  std::vector<Reduction> accepted;
  std::vector<std::size_t> dropped;

  while (!work.empty()) {
    // Smallest leading word first keeps evictions rare.
    std::size_t best = 0;
    Word best_lead;
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i].poly.is_zero()) {
        best = i;
        break;
      }
      Word lead = leading_term(work[i].poly, order).first;
      if (i == 0 || order.less(lead, best_lead)) {
        best = i;
        best_lead = std::move(lead);
      }
    }
    Pending item = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));

    NCPoly p = item.poly.is_zero()
                   ? item.poly
                   : normal_form(item.poly, RewriteSystem(order, accepted));
    if (p.is_zero()) {
      if (item.source) dropped.push_back(*item.source);
      continue;
    }
    auto [lead, coeff] = leading_term(p, order);
    if (lead.size() < 2)
      throw std::invalid_argument("relation has a leading word of length < 2");
    p *= Rational(1) / coeff;
    Reduction red{lead, NCPoly::monomial(lead) - p};

    for (auto it = accepted.begin(); it != accepted.end();) {
      if (it->lhs.contains_factor(lead)) {
        work.push_back({it->relation(), std::nullopt});
        it = accepted.erase(it);
      } else {
        ++it;
      }
    }
    accepted.push_back(std::move(red));
  }

  RewriteSystem draft(order, accepted);
  for (auto& r : accepted) r.rhs = normal_form(r.rhs, draft);
  std::sort(dropped.begin(), dropped.end());
  return {RewriteSystem(order, std::move(accepted)), std::move(dropped)};
}

}  // namespace

OrientResult orient_with_report(std::span<const NCPoly> relations,
                                const MonomialOrder& order) {
  std::vector<Pending> work;
  work.reserve(relations.size());
  for (std::size_t i = 0; i < relations.size(); ++i)
    work.push_back({relations[i], i});
  return interreduce(std::move(work), order);
}

RewriteSystem orient(std::span<const NCPoly> relations, const MonomialOrder& order) {
  return orient_with_report(relations, order).system;
}

// --- ambiguities ------------------------------------------------------------

std::vector<Ambiguity> overlaps(const RewriteSystem& rs) {
  std::vector<Ambiguity> out;
  auto reds = rs.reductions();
  for (std::size_t i = 0; i < reds.size(); ++i) {
    const Word& a = reds[i].lhs;
    for (std::size_t j = 0; j < reds.size(); ++j) {
      const Word& b = reds[j].lhs;
      std::size_t limit = std::min(a.size(), b.size());
      for (std::size_t k = 1; k < limit; ++k) {
        if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin()))
          continue;
        out.push_back({i, j, k, a * b.subword(k, b.size() - k)});
      }
    }
  }
  const auto& order = rs.order();
  std::sort(out.begin(), out.end(), [&](const Ambiguity& x, const Ambiguity& y) {
    auto c = order.compare(x.word, y.word);
    if (c != 0) return c < 0;
    if (x.left != y.left) return x.left < y.left;
    return x.right < y.right;
  });
  return out;
}

Resolution resolve_paths(const Ambiguity& a, const RewriteSystem& rs) {
  const auto& left = rs.reductions()[a.left];
  const auto& right = rs.reductions()[a.right];
  Word after_left = a.word.subword(left.lhs.size(), a.word.size() - left.lhs.size());
  Word before_right = a.word.subword(0, a.word.size() - right.lhs.size());
  NCPoly via_left = sandwich(Word{}, left.rhs, after_left);
  NCPoly via_right = sandwich(before_right, right.rhs, Word{});
  return {normal_form(via_left, rs), normal_form(via_right, rs)};
}

bool resolve(const Ambiguity& a, const RewriteSystem& rs) {
  return resolve_paths(a, rs).resolved();
}

PbwReport check_quadratic_pbw(const RewriteSystem& rs) {
  if (!rs.is_quadratic()) throw std::invalid_argument("not quadratic");
  PbwReport report;
  report.checked = overlaps(rs);
  for (const auto& a : report.checked)
    if (!resolve(a, rs)) report.failures.push_back(a);
  report.koszul_verdict = report.failures.empty();
  return report;
}

// --- completion -------------------------------------------------------------

CompletionReport complete(const RewriteSystem& rs, std::size_t max_degree) {
  if (max_degree < rs.max_lhs_length())
    throw std::invalid_argument("completion cap below the longest lhs");
  const auto& order = rs.order();
  RewriteSystem current = rs;
  std::vector<Word> discarded;
  std::size_t passes = 0;

  for (;;) {
    ++passes;
    discarded.clear();
    std::vector<NCPoly> additions;
    for (const auto& amb : overlaps(current)) {
      auto res = resolve_paths(amb, current);
      NCPoly diff = res.left_first - res.right_first;
      if (diff.is_zero()) continue;
      Word lead = leading_term(diff, order).first;
      if (lead.size() > max_degree) {
        if (std::find(discarded.begin(), discarded.end(), lead) == discarded.end())
          discarded.push_back(std::move(lead));
        continue;
      }
      additions.push_back(std::move(diff));
    }
    if (additions.empty()) break;
    std::vector<Pending> work;
    for (auto& r : current.relations()) work.push_back({std::move(r), std::nullopt});
    for (auto& d : additions) work.push_back({std::move(d), std::nullopt});
    current = interreduce(std::move(work), order).system;
  }

  std::size_t shortest_failure = std::numeric_limits<std::size_t>::max();
  for (const auto& amb : overlaps(current))
    if (!resolve(amb, current))
      shortest_failure = std::min(shortest_failure, amb.word.size());

  CompletionReport report{current, max_degree, true, {}, passes};
  if (shortest_failure != std::numeric_limits<std::size_t>::max()) {
    report.confluent = false;
    report.saturated_below = shortest_failure - 1;
  }
  std::sort(discarded.begin(), discarded.end(),
            [&](const Word& a, const Word& b) { return order.less(a, b); });
  report.discarded = std::move(discarded);
  return report;
}

std::vector<Integer> count_normal_words(const RewriteSystem& rs, std::size_t degree) {
  return rs.automaton().count_avoiding(degree);
}

}  // namespace ncalg
