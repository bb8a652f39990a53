#pragma once

#include <random>

#include "wsync/automaton.hpp"

namespace wsync {

using Rng = std::mt19937_64;

/// Random weakly acyclic semi-automaton: transitions drawn forward along a
/// hidden topological order, then states relabelled by a random permutation.
/// Letters are named a, b, c, ...
SemiAutomaton random_waa(Rng& rng, std::size_t states, std::size_t letters);

/// Random weakly acyclic automaton guaranteed to synchronize: one sink,
/// reachable from everywhere (every non-sink state gets a strictly forward
/// transition on the first letter).
SemiAutomaton random_synchronizing_waa(Rng& rng, std::size_t states, std::size_t letters,
                                       bool shuffle = true);

StateSet random_subset(Rng& rng, std::size_t universe, bool nonempty);

/// Random small constraint PDFA over the given alphabet: uniform partial
/// transitions, initial state 0, random accepting set (biased nonempty).
ConstraintPdfa random_constraint(Rng& rng, const Alphabet& alphabet, std::size_t states);

Alphabet letters_alphabet(std::size_t count);

}  // namespace wsync
