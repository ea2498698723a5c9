#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ncalg/ncpoly.hpp"

namespace ncalg {

/// Aho-Corasick automaton over a finite letter alphabet recognising a set of
/// forbidden factors. Transitions are dense (states x letters) so a scan costs
/// one table lookup per letter.
class FactorAutomaton {
 public:
  using State = std::uint32_t;
  static constexpr State root = 0;

  FactorAutomaton() : FactorAutomaton(0, {}) {}
  FactorAutomaton(std::size_t alphabet_size, std::span<const Word> patterns);

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t state_count() const { return depth_.size(); }

  State step(State s, Letter l) const { return next_[s * alphabet_size_ + l]; }

  /// Some pattern is a suffix of the string spelled by this state.
  bool accepting(State s) const { return match_[s] != no_match; }
  /// Index of the longest pattern that is a suffix of the state's string.
  std::optional<std::size_t> match(State s) const;

  struct Occurrence {
    std::size_t position;  // start index in the scanned word
    std::size_t pattern;
  };

  /// Occurrence with the smallest end position (ties: longest pattern).
  std::optional<Occurrence> first_occurrence(std::span<const Letter> word) const;
  /// Every (position, pattern) pair at which a pattern occurs.
  std::vector<Occurrence> occurrences(std::span<const Letter> word) const;

  /// Number of words of each length 0..max_length containing no pattern.
  std::vector<Integer> count_avoiding(std::size_t max_length) const;

 private:
  static constexpr std::size_t no_match = static_cast<std::size_t>(-1);

  std::size_t alphabet_size_;
  std::vector<std::size_t> pattern_length_;
  std::vector<State> next_;
  std::vector<State> fail_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> own_match_;  // pattern ending exactly at this node
  std::vector<std::size_t> match_;      // longest pattern along suffix links
};

}  // namespace ncalg
