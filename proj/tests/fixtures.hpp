#pragma once

#include <string>

#include "wsync/automaton.hpp"
#include "wsync/classify.hpp"

namespace fixtures {

// Three small automata reused across the suites.
//
// w1 over {a,b}:   0 -a-> 1, 0 -b-> 0, 1 -a/b-> 2, 2 sink
// w2 over {a,b,c}: 0 -a-> 1, 0 -b/c-> 0, 1 -a/b-> 1, 1 -c-> 2, 2 sink
// w3 over {a,b,c}: c-chain 0 -> 1 -> 2 (sink), a/b self-loop below the sink

inline wsync::SemiAutomaton w1() {
  return wsync::SemiAutomaton(wsync::Alphabet({"a", "b"}), 3, {1, 0, 2, 2, 2, 2});
}

inline wsync::SemiAutomaton w2() {
  return wsync::SemiAutomaton(wsync::Alphabet({"a", "b", "c"}), 3,
                              {1, 0, 0, 1, 1, 2, 2, 2, 2});
}

inline wsync::SemiAutomaton w3() {
  return wsync::SemiAutomaton(wsync::Alphabet({"a", "b", "c"}), 3,
                              {0, 0, 1, 1, 1, 2, 2, 2, 2});
}

inline wsync::Word word(const wsync::SemiAutomaton& a, const std::string& text) {
  return wsync::Word::parse(a.alphabet(), text);
}

inline wsync::Word word(const wsync::ConstraintPdfa& b, const std::string& text) {
  return wsync::Word::parse(b.alphabet(), text);
}

/// Same letter names, permuted roles: the new letter perm[x] does what the
/// old letter x did, so the language is renamed accordingly.
inline wsync::ConstraintPdfa permute_letters(const wsync::ConstraintPdfa& b,
                                             const std::array<wsync::LetterId, 3>& perm) {
  const std::size_t k = b.alphabet().size();
  std::vector<wsync::StateId> mu(b.state_count() * k, wsync::ConstraintPdfa::kUndefined);
  for (wsync::StateId p = 0; p < b.state_count(); ++p)
    for (wsync::LetterId x = 0; x < k; ++x) mu[p * k + perm[x]] = b.step(p, x);
  return wsync::ConstraintPdfa(b.alphabet(), b.state_names(), std::move(mu), b.initial(),
                               b.accepting());
}

}  // namespace fixtures
