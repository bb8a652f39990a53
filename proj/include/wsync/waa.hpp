#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "wsync/automaton.hpp"

namespace wsync {

/// Witness that an automaton is weakly acyclic: a topological order of its
/// states. If delta(q, x) = p and q != p then q comes before p in the order.
struct WaaCertificate {
  std::vector<StateId> order;          // order[i] = state at position i
  std::vector<std::uint32_t> position; // position[q] = index of q in order

  std::size_t state_count() const { return order.size(); }
};

/// Evidence against weak acyclicity: a simple cycle through >= 2 states,
/// cycle[i] -> cycle[i+1] -> ... -> cycle[0], each step by some letter.
struct NotWaa {
  std::vector<StateId> cycle;
};

using WaaCheck = std::variant<WaaCertificate, NotWaa>;

/// Topological sort of the transition digraph with self-loops removed.
/// Deterministic: among ready states the smallest index goes first.
WaaCheck check_weakly_acyclic(const SemiAutomaton& a);

/// Certificate or WaaRequired error.
WaaCertificate require_waa(const SemiAutomaton& a);

bool is_weakly_acyclic(const SemiAutomaton& a);

/// The maximal states of a weakly acyclic automaton: exactly its sinks.
StateSet maximal_states(const SemiAutomaton& a, const WaaCertificate& cert);

/// The unique sink reachable from every state, if any. A weakly acyclic
/// automaton is synchronizing precisely when this returns a state.
/// Runs in time O(|Sigma||Q| + |Q|).
std::optional<StateId> synchronizing_state(const SemiAutomaton& a, const WaaCertificate& cert);

/// A synchronizing word, built greedily: while the image of Q is not a
/// singleton, drive the unsynchronized state that is earliest in the
/// topological order to the sink along a shortest (lex-least) path.
/// The result has length at most (n-1)^2. None iff not synchronizing.
std::optional<Word> build_synchronizing_word(const SemiAutomaton& a, const WaaCertificate& cert);

/// Sinks reachable (by any word) from some state of `from`.
StateSet reachable_maximal_from(const SemiAutomaton& a, const WaaCertificate& cert,
                                const StateSet& from);

namespace detail {
/// distance[q] = length of a shortest word driving q to `target`, or
/// UINT32_MAX if unreachable. Shared by the word builders.
std::vector<std::uint32_t> distances_to_state(const SemiAutomaton& a, StateId target);
/// Lex-least shortest word from q to `target` along the distance field.
Word walk_to_state(const SemiAutomaton& a, const std::vector<std::uint32_t>& distance,
                   StateId q, StateId target);
}  // namespace detail

}  // namespace wsync
