#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "wsync/alphabet.hpp"
#include "wsync/state_set.hpp"

namespace wsync {

/// Complete deterministic transition system without start or final states.
/// Immutable after construction; all operations on it are pure.
class SemiAutomaton {
 public:
  /// `delta[q * alphabet.size() + x]` is the successor of state q on letter x.
  SemiAutomaton(Alphabet alphabet, std::vector<std::string> state_names,
                std::vector<StateId> delta);

  /// Convenience constructor with generated names q0..q{n-1}.
  SemiAutomaton(Alphabet alphabet, std::size_t state_count, std::vector<StateId> delta);

  std::size_t state_count() const { return names_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t letter_count() const { return alphabet_.size(); }

  StateId next(StateId q, LetterId x) const { return delta_[q * alphabet_.size() + x]; }
  StateId run(StateId q, const Word& w) const;

  const std::string& state_name(StateId q) const { return names_.at(q); }
  const std::vector<std::string>& state_names() const { return names_; }
  std::optional<StateId> find_state(std::string_view name) const;
  StateId require_state(std::string_view name) const;

  StateSet all_states() const { return StateSet::all(state_count()); }

  bool operator==(const SemiAutomaton&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<StateId> delta_;
};

/// Partial DFA: the constraint automaton. Transitions may be undefined.
class ConstraintPdfa {
 public:
  static constexpr StateId kUndefined = std::numeric_limits<StateId>::max();

  /// `mu[p * alphabet.size() + x]` is the successor or kUndefined.
  ConstraintPdfa(Alphabet alphabet, std::vector<std::string> state_names,
                 std::vector<StateId> mu, StateId initial, StateSet accepting);

  ConstraintPdfa(Alphabet alphabet, std::size_t state_count, std::vector<StateId> mu,
                 StateId initial, StateSet accepting);

  std::size_t state_count() const { return names_.size(); }
  const Alphabet& alphabet() const { return alphabet_; }

  StateId step(StateId p, LetterId x) const { return mu_[p * alphabet_.size() + x]; }
  bool defined(StateId p, LetterId x) const { return step(p, x) != kUndefined; }

  StateId initial() const { return initial_; }
  const StateSet& accepting() const { return accepting_; }
  bool accepts_state(StateId p) const { return accepting_.test(p); }

  const std::string& state_name(StateId p) const { return names_.at(p); }
  const std::vector<std::string>& state_names() const { return names_; }
  std::optional<StateId> find_state(std::string_view name) const;

  bool operator==(const ConstraintPdfa&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::vector<StateId> mu_;
  StateId initial_;
  StateSet accepting_;
};

/// Image {delta(s, w) : s in S}; image(A, S, epsilon) = S.
StateSet image(const SemiAutomaton& a, const StateSet& set, const Word& w);
/// One-letter image, no alphabet checks (hot path).
StateSet image_letter(const SemiAutomaton& a, const StateSet& set, LetterId x);
/// Preimage {q : delta(q, x) in S}.
StateSet preimage(const SemiAutomaton& a, const StateSet& set, LetterId x);

/// True iff mu(p0, w) is defined and accepting; an undefined transition
/// mid-run makes the whole run rejecting.
bool pdfa_accepts(const ConstraintPdfa& b, const Word& w);

/// Same states, transitions kept only for the letters in `keep` (indices into
/// a's alphabet, deduplicated, canonical order). The result is complete over
/// the sub-alphabet.
SemiAutomaton restrict_alphabet(const SemiAutomaton& a, const std::vector<LetterId>& keep);

/// True iff every letter self-loops at q.
bool is_sink(const SemiAutomaton& a, StateId q);

}  // namespace wsync
