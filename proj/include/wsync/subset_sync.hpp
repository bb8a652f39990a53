#pragma once

#include <optional>

#include "wsync/waa.hpp"

namespace wsync {

/// Guard for the exponential subset searches. These are oracles for testing,
/// not production solvers; lift `max_states` knowingly.
struct SearchLimits {
  std::size_t max_states = 20;
};

/// Decides whether some word maps `from` into `target`. Requires that
/// `from` contains every maximal state reachable from it (this is what makes
/// the criterion below sound; PreconditionViolated otherwise; pass from = Q
/// for Sync-Into-Subset).
/// Yes iff the reachable maximal states R satisfy R subset-of target; the
/// witness repeats the all-letters word w_Sigma, truncated as soon as the
/// image lies inside the target, and is verified before being returned.
std::optional<Word> sync_into_subset(const SemiAutomaton& a, const WaaCertificate& cert,
                                     const StateSet& from, const StateSet& target);

/// Shortest, lex-least word merging `from` to a single state, by BFS over
/// reachable subsets. Exponential worst case (guarded).
std::optional<Word> sync_from_subset_search(const SemiAutomaton& a, const StateSet& from,
                                            const SearchLimits& limits = {});

/// Shortest, lex-least word w with image(from, w) subset-of target, by BFS
/// over reachable subsets. Empty `from` yields epsilon; nonempty `from` with
/// empty `target` has no solution. Exponential worst case (guarded).
std::optional<Word> set_transporter_search(const SemiAutomaton& a, const StateSet& from,
                                           const StateSet& target,
                                           const SearchLimits& limits = {});

/// Polynomial SetTransporter for unary weakly acyclic automata: images of
/// a^i stabilize by i = n-1, so only a^0..a^{n-1} are tested.
std::optional<Word> set_transporter_unary_waa(const SemiAutomaton& a, const WaaCertificate& cert,
                                              const StateSet& from, const StateSet& target);

}  // namespace wsync
