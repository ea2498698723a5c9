#include "ncalg/factor_automaton.hpp"

#include <queue>

namespace ncalg {

FactorAutomaton::FactorAutomaton(std::size_t alphabet_size,
                                 std::span<const Word> patterns)
    : alphabet_size_(alphabet_size) {
  constexpr State absent = static_cast<State>(-1);
  auto new_state = [&](std::size_t depth) {
    next_.insert(next_.end(), alphabet_size_, absent);
    depth_.push_back(depth);
    own_match_.push_back(no_match);
    return static_cast<State>(depth_.size() - 1);
  };
  new_state(0);

  for (std::size_t p = 0; p < patterns.size(); ++p) {
    pattern_length_.push_back(patterns[p].size());
    State s = root;
    for (Letter l : patterns[p]) {
      if (l >= alphabet_size_)
        throw std::out_of_range("pattern letter outside automaton alphabet");
      if (next_[s * alphabet_size_ + l] == absent) {
        State t = new_state(depth_[s] + 1);
        next_[s * alphabet_size_ + l] = t;
      }
      s = next_[s * alphabet_size_ + l];
    }
    if (own_match_[s] == no_match) own_match_[s] = p;
  }

  fail_.assign(state_count(), root);
  match_.assign(state_count(), no_match);
  match_[root] = own_match_[root];

  std::queue<State> queue;
  for (std::size_t l = 0; l < alphabet_size_; ++l) {
    State& t = next_[root * alphabet_size_ + l];
    if (t == absent) {
      t = root;
    } else {
      fail_[t] = root;
      match_[t] = own_match_[t] != no_match ? own_match_[t] : match_[root];
      queue.push(t);
    }
  }
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop();
    for (std::size_t l = 0; l < alphabet_size_; ++l) {
      State& t = next_[s * alphabet_size_ + l];
      State via_fail = next_[fail_[s] * alphabet_size_ + l];
      if (t == absent) {
        t = via_fail;
      } else {
        fail_[t] = via_fail;
        match_[t] = own_match_[t] != no_match ? own_match_[t] : match_[via_fail];
        queue.push(t);
      }
    }
  }
}

std::optional<std::size_t> FactorAutomaton::match(State s) const {
  if (match_[s] == no_match) return std::nullopt;
  return match_[s];
}

std::optional<FactorAutomaton::Occurrence> FactorAutomaton::first_occurrence(
    std::span<const Letter> word) const {
  State s = root;
  if (accepting(s)) return Occurrence{0, match_[s]};
  for (std::size_t i = 0; i < word.size(); ++i) {
    s = step(s, word[i]);
    if (accepting(s)) {
      std::size_t p = match_[s];
      return Occurrence{i + 1 - pattern_length_[p], p};
    }
  }
  return std::nullopt;
}

std::vector<FactorAutomaton::Occurrence> FactorAutomaton::occurrences(
    std::span<const Letter> word) const {
  std::vector<Occurrence> out;
  State s = root;
  for (std::size_t i = 0; i < word.size(); ++i) {
    s = step(s, word[i]);
    for (State t = s; t != root; t = fail_[t]) {
      if (!accepting(t)) break;
      std::size_t p = own_match_[t];
      if (p != no_match) out.push_back({i + 1 - pattern_length_[p], p});
    }
  }
  return out;
}

std::vector<Integer> FactorAutomaton::count_avoiding(
    std::size_t max_length) const {
  std::vector<Integer> totals;
  totals.reserve(max_length + 1);
  if (accepting(root)) {
    // The empty pattern is a factor of every word.
    totals.assign(max_length + 1, 0);
    return totals;
  }
  std::vector<Integer> current(state_count()), next(state_count());
  current[root] = 1;
  totals.push_back(1);
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (auto& x : next) x = 0;
    for (State s = 0; s < state_count(); ++s) {
      if (current[s] == 0) continue;
      for (Letter l = 0; l < alphabet_size_; ++l) {
        State t = step(s, l);
        if (!accepting(t)) next[t] += current[s];
      }
    }
    std::swap(current, next);
    Integer sum = 0;
    for (const auto& x : current) sum += x;
    totals.push_back(std::move(sum));
  }
  return totals;
}

}  // namespace ncalg
