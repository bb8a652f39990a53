#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wsync/classify.hpp"
#include "wsync/subset_sync.hpp"

namespace wsync {

/// Upper bound |P| * n(n-1)/2 on the length of a shortest synchronizing word
/// in L(B) for a weakly acyclic automaton with n states.
std::uint64_t shortest_bound(const SemiAutomaton& a, const WaaCertificate& cert,
                             const ConstraintPdfa& b);

/// True iff w is accepted by the constraint and synchronizes the automaton.
bool verify_witness(const ConstraintPdfa& b, const SemiAutomaton& a, const Word& w);

struct SolveStats {
  std::uint64_t states_explored = 0;
};

/// Exact solver: BFS over pairs (constraint state, state-set image) from
/// (p0, Q); a branch dies on an undefined constraint transition; accepting
/// pairs have an accepting constraint state and a singleton image. Returns
/// the shortest, lex-least accepted word. For weakly acyclic inputs the
/// witness is checked against shortest_bound.
std::optional<Word> solve_generic(const ConstraintPdfa& b, const SemiAutomaton& a,
                                  const SearchLimits& limits = {}, SolveStats* stats = nullptr);

/// Polynomial solver for the constraint free1|free2)*mid — i.e. (a+b)*c with
/// the letter roles made explicit: T = preimage(sink, mid), then decide
/// Sync-Into-Subset on the {free1,free2}-restriction against T.
std::optional<Word> solve_suffix_c(const SemiAutomaton& a, const WaaCertificate& cert,
                                   LetterId free1, LetterId free2, LetterId mid);
/// Letter roles resolved by name: a, b, c.
std::optional<Word> solve_suffix_c(const SemiAutomaton& a, const WaaCertificate& cert);

/// Polynomial solver for (a+b)*ca* (tail = a) and (a+b)*cc* (tail = c) with
/// explicit roles: for i = 0..n, pull the sink back through tail^i and mid,
/// and decide Sync-Into-Subset on the restriction against that target.
std::optional<Word> solve_c_then_tail(const SemiAutomaton& a, const WaaCertificate& cert,
                                      LetterId free1, LetterId free2, LetterId mid,
                                      LetterId tail);
/// Roles resolved by name; tail must be the letter named "a" or "c".
std::optional<Word> solve_c_then_tail(const SemiAutomaton& a, const WaaCertificate& cert,
                                      LetterId tail);

struct SolveReport {
  bool decision = false;
  std::optional<Word> witness;
  std::string method;
  std::optional<ConstraintLabel> label;
  std::uint64_t states_explored = 0;
};

/// Router: classify the constraint; weakly acyclic inputs whose constraint
/// matches (a+b)*c, (a+b)*ca* or (a+b)*cc* up to letter renaming go through
/// the polynomial solver (with permuted roles), everything else through
/// solve_generic. The decision is method-independent.
SolveReport dispatch_solve(const ConstraintPdfa& b, const SemiAutomaton& a,
                           const SearchLimits& limits = {});

}  // namespace wsync
