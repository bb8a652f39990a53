#include "wsync/random_gen.hpp"

#include <algorithm>
#include <numeric>

#include "wsync/error.hpp"

namespace wsync {
namespace {

SemiAutomaton relabel(const SemiAutomaton& a, const std::vector<StateId>& new_id) {
  const std::size_t k = a.letter_count();
  std::vector<StateId> delta(a.state_count() * k);
  for (StateId q = 0; q < a.state_count(); ++q)
    for (LetterId x = 0; x < k; ++x) delta[new_id[q] * k + x] = new_id[a.next(q, x)];
  return SemiAutomaton(a.alphabet(), a.state_count(), std::move(delta));
}

std::vector<StateId> random_permutation(Rng& rng, std::size_t n) {
  std::vector<StateId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

Alphabet letters_alphabet(std::size_t count) {
  if (count == 0 || count > 26) raise(ErrorCode::invalid_argument, "supported alphabet sizes: 1..26");
  std::vector<std::string> letters;
  for (std::size_t i = 0; i < count; ++i) letters.push_back(std::string(1, char('a' + i)));
  return Alphabet(std::move(letters));
}

SemiAutomaton random_waa(Rng& rng, std::size_t states, std::size_t letters) {
  std::vector<StateId> delta(states * letters);
  for (StateId q = 0; q < states; ++q) {
    std::uniform_int_distribution<StateId> forward(q, static_cast<StateId>(states - 1));
    for (LetterId x = 0; x < letters; ++x) delta[q * letters + x] = forward(rng);
  }
  SemiAutomaton monotone(letters_alphabet(letters), states, std::move(delta));
  return relabel(monotone, random_permutation(rng, states));
}

SemiAutomaton random_synchronizing_waa(Rng& rng, std::size_t states, std::size_t letters,
                                       bool shuffle) {
  const StateId last = static_cast<StateId>(states - 1);
  std::vector<StateId> delta(states * letters);
  for (StateId q = 0; q < states; ++q) {
    for (LetterId x = 0; x < letters; ++x) {
      if (q == last) {
        delta[q * letters + x] = last;
      } else if (x == 0) {
        std::uniform_int_distribution<StateId> strictly_forward(q + 1, last);
        delta[q * letters + x] = strictly_forward(rng);
      } else {
        std::uniform_int_distribution<StateId> forward(q, last);
        delta[q * letters + x] = forward(rng);
      }
    }
  }
  SemiAutomaton monotone(letters_alphabet(letters), states, std::move(delta));
  if (!shuffle) return monotone;
  return relabel(monotone, random_permutation(rng, states));
}

StateSet random_subset(Rng& rng, std::size_t universe, bool nonempty) {
  StateSet s(universe);
  std::bernoulli_distribution coin(0.5);
  for (StateId q = 0; q < universe; ++q)
    if (coin(rng)) s.set(q);
  if (nonempty && s.empty()) {
    std::uniform_int_distribution<StateId> pick(0, static_cast<StateId>(universe - 1));
    s.set(pick(rng));
  }
  return s;
}

ConstraintPdfa random_constraint(Rng& rng, const Alphabet& alphabet, std::size_t states) {
  const std::size_t k = alphabet.size();
  std::vector<StateId> mu(states * k);
  std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(states));  // states = undefined
  for (auto& entry : mu) {
    StateId t = target(rng);
    entry = t == states ? ConstraintPdfa::kUndefined : t;
  }
  StateSet accepting = random_subset(rng, states, /*nonempty=*/true);
  return ConstraintPdfa(alphabet, states, std::move(mu), 0, std::move(accepting));
}

}  // namespace wsync
