#pragma once

// Oriented reduction systems over the free algebra: normal forms, overlap
// ambiguities (diamond lemma), bounded critical-pair completion and counting
// of normal words.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ncalg/factor_automaton.hpp"
#include "ncalg/ncpoly.hpp"

namespace ncalg {

struct Reduction {
  Word lhs;
  NCPoly rhs;  // every word strictly smaller than lhs

  /// lhs - rhs, the relation this reduction was solved from.
  NCPoly relation() const { return NCPoly::monomial(lhs) - rhs; }
};

/// An immutable, inter-reduced set of reductions under one monomial order.
/// Reductions are kept sorted by lhs (ascending under the order).
class RewriteSystem {
 public:
  explicit RewriteSystem(MonomialOrder order);
  /// Validates: lhs length >= 2, rhs words below lhs, no lhs a factor of
  /// another. Throws std::invalid_argument otherwise.
  RewriteSystem(MonomialOrder order, std::vector<Reduction> reductions);

  const MonomialOrder& order() const { return order_; }
  std::span<const Reduction> reductions() const { return reductions_; }
  std::size_t size() const { return reductions_.size(); }
  bool empty() const { return reductions_.empty(); }
  std::size_t generator_count() const { return order_.generator_count(); }
  std::size_t max_lhs_length() const;
  bool is_quadratic() const;

  std::vector<Word> bad_words() const;
  std::optional<std::size_t> find(const Word& lhs) const;
  std::vector<NCPoly> relations() const;

  const FactorAutomaton& automaton() const { return *automaton_; }

 private:
  MonomialOrder order_;
  std::vector<Reduction> reductions_;
  std::shared_ptr<const FactorAutomaton> automaton_;
};

class ReductionBudgetExhausted : public std::runtime_error {
 public:
  ReductionBudgetExhausted() : std::runtime_error("reduction budget exhausted") {}
};

inline constexpr std::size_t default_step_budget = 1'000'000;

/// Rewrites until no word contains a reduction lhs. Strategy: the
/// order-greatest reducible word first, at its leftmost occurrence.
NCPoly normal_form(const NCPoly& p, const RewriteSystem& rs,
                   std::size_t step_budget = default_step_budget);

/// Same contract, but each step rewrites a uniformly chosen reducible term at
/// a uniformly chosen occurrence. Agrees with normal_form exactly when the
/// system is confluent.
NCPoly normal_form_randomized(const NCPoly& p, const RewriteSystem& rs,
                              std::uint64_t seed,
                              std::size_t step_budget = default_step_budget);

struct OrientResult {
  RewriteSystem system;
  // Indices of input relations that reduced to zero and were dropped.
  std::vector<std::size_t> dropped;
};

/// Eliminates among the relations so leading words are distinct and no
/// leading word is a factor of another, then solves each for its leading
/// word. Tails are fully reduced.
OrientResult orient_with_report(std::span<const NCPoly> relations,
                                const MonomialOrder& order);
RewriteSystem orient(std::span<const NCPoly> relations, const MonomialOrder& order);

struct Ambiguity {
  std::size_t left;   // index into rs.reductions(); its lhs is a prefix
  std::size_t right;  // index whose lhs is a suffix
  std::size_t shared; // number of overlapping letters
  Word word;
};

/// Every overlap: a proper nonempty suffix of one lhs equal to a prefix of
/// another (or the same) lhs. Sorted by overlap word under the order, then by
/// (left, right).
std::vector<Ambiguity> overlaps(const RewriteSystem& rs);

struct Resolution {
  NCPoly left_first;   // normal form after applying `left` first
  NCPoly right_first;  // normal form after applying `right` first
  bool resolved() const { return left_first == right_first; }
};

Resolution resolve_paths(const Ambiguity& a, const RewriteSystem& rs);
bool resolve(const Ambiguity& a, const RewriteSystem& rs);

struct PbwReport {
  bool koszul_verdict = false;
  std::vector<Ambiguity> checked;
  std::vector<Ambiguity> failures;
};

/// PBW test for quadratic systems: the algebra is certified Koszul when every
/// degree-3 overlap resolves. Throws std::invalid_argument("not quadratic")
/// if some lhs has length other than 2.
PbwReport check_quadratic_pbw(const RewriteSystem& rs);

struct CompletionReport {
  RewriteSystem system;
  // Every overlap whose word has length <= saturated_below resolves. When the
  // system is confluent this equals the requested cap.
  std::size_t saturated_below = 0;
  bool confluent = false;
  // Leading words of reductions that were needed but exceed the cap.
  std::vector<Word> discarded;
  std::size_t passes = 0;
};

/// Critical-pair completion: each non-resolving ambiguity contributes the
/// difference of its two normal forms, oriented by leading term. Reductions
/// whose lhs would be longer than max_degree are reported, not adjoined.
CompletionReport complete(const RewriteSystem& rs, std::size_t max_degree);

/// Number of words of each length 0..degree containing no lhs as a factor.
std::vector<Integer> count_normal_words(const RewriteSystem& rs,
                                        std::size_t degree);

}  // namespace ncalg
