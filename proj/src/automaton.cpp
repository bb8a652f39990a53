#include "wsync/automaton.hpp"

#include <algorithm>
#include <unordered_set>

#include "wsync/error.hpp"

namespace wsync {
namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
  return names;
}

void check_names(const std::vector<std::string>& names) {
  if (names.empty()) raise(ErrorCode::invalid_argument, "automaton needs at least one state");
  std::unordered_set<std::string_view> seen;
  for (const auto& name : names) {
    if (name.empty()) raise(ErrorCode::invalid_argument, "empty state name");
    if (!seen.insert(name).second)
      raise(ErrorCode::invalid_argument, "duplicate state name '" + name + "'");
  }
}

}  // namespace

SemiAutomaton::SemiAutomaton(Alphabet alphabet, std::vector<std::string> state_names,
                             std::vector<StateId> delta)
    : alphabet_(std::move(alphabet)), names_(std::move(state_names)), delta_(std::move(delta)) {
  check_names(names_);
  if (alphabet_.empty()) raise(ErrorCode::empty_alphabet, "semi-automaton over empty alphabet");
  if (delta_.size() != names_.size() * alphabet_.size())
    raise(ErrorCode::invalid_argument, "transition table size does not match states x letters");
  for (StateId target : delta_)
    if (target >= names_.size())
      raise(ErrorCode::invalid_argument, "transition target out of range");
}

SemiAutomaton::SemiAutomaton(Alphabet alphabet, std::size_t state_count,
                             std::vector<StateId> delta)
    : SemiAutomaton(std::move(alphabet), default_names(state_count), std::move(delta)) {}

StateId SemiAutomaton::run(StateId q, const Word& w) const {
  if (!(w.alphabet == alphabet_))
    raise(ErrorCode::alphabet_mismatch, "word alphabet differs from automaton alphabet");
  for (LetterId x : w.letters) q = next(q, x);
  return q;
}

std::optional<StateId> SemiAutomaton::find_state(std::string_view name) const {
  for (StateId q = 0; q < names_.size(); ++q)
    if (names_[q] == name) return q;
  return std::nullopt;
}

StateId SemiAutomaton::require_state(std::string_view name) const {
  if (auto q = find_state(name)) return *q;
  raise(ErrorCode::invalid_argument, "unknown state '" + std::string(name) + "'");
}

ConstraintPdfa::ConstraintPdfa(Alphabet alphabet, std::vector<std::string> state_names,
                               std::vector<StateId> mu, StateId initial, StateSet accepting)
    : alphabet_(std::move(alphabet)),
      names_(std::move(state_names)),
      mu_(std::move(mu)),
      initial_(initial),
      accepting_(std::move(accepting)) {
  check_names(names_);
  if (alphabet_.empty()) raise(ErrorCode::empty_alphabet, "PDFA over empty alphabet");
  if (mu_.size() != names_.size() * alphabet_.size())
    raise(ErrorCode::invalid_argument, "transition table size does not match states x letters");
  for (StateId target : mu_)
    if (target != kUndefined && target >= names_.size())
      raise(ErrorCode::invalid_argument, "transition target out of range");
  if (initial_ >= names_.size()) raise(ErrorCode::invalid_argument, "initial state out of range");
  if (accepting_.universe() != names_.size())
    raise(ErrorCode::invalid_argument, "accepting set universe does not match state count");
}

ConstraintPdfa::ConstraintPdfa(Alphabet alphabet, std::size_t state_count, std::vector<StateId> mu,
                               StateId initial, StateSet accepting)
    : ConstraintPdfa(std::move(alphabet), default_names(state_count), std::move(mu), initial,
                     std::move(accepting)) {}

std::optional<StateId> ConstraintPdfa::find_state(std::string_view name) const {
  for (StateId p = 0; p < names_.size(); ++p)
    if (names_[p] == name) return p;
  return std::nullopt;
}

StateSet image(const SemiAutomaton& a, const StateSet& set, const Word& w) {
  if (!(w.alphabet == a.alphabet()))
    raise(ErrorCode::alphabet_mismatch, "word alphabet differs from automaton alphabet");
  if (set.universe() != a.state_count())
    raise(ErrorCode::invalid_argument, "state set universe does not match automaton");
  StateSet cur = set;
  for (LetterId x : w.letters) cur = image_letter(a, cur, x);
  return cur;
}

StateSet image_letter(const SemiAutomaton& a, const StateSet& set, LetterId x) {
  StateSet out(a.state_count());
  set.for_each([&](StateId q) { out.set(a.next(q, x)); });
  return out;
}

StateSet preimage(const SemiAutomaton& a, const StateSet& set, LetterId x) {
  if (x >= a.letter_count())
    raise(ErrorCode::alphabet_mismatch, "letter index out of range");
  if (set.universe() != a.state_count())
    raise(ErrorCode::invalid_argument, "state set universe does not match automaton");
  StateSet out(a.state_count());
  for (StateId q = 0; q < a.state_count(); ++q)
    if (set.test(a.next(q, x))) out.set(q);
  return out;
}

bool pdfa_accepts(const ConstraintPdfa& b, const Word& w) {
  if (!(w.alphabet == b.alphabet()))
    raise(ErrorCode::alphabet_mismatch, "word alphabet differs from constraint alphabet");
  StateId p = b.initial();
  for (LetterId x : w.letters) {
    p = b.step(p, x);
    if (p == ConstraintPdfa::kUndefined) return false;
  }
  return b.accepts_state(p);
}

SemiAutomaton restrict_alphabet(const SemiAutomaton& a, const std::vector<LetterId>& keep) {
  std::vector<LetterId> kept = keep;
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  if (kept.empty()) raise(ErrorCode::empty_alphabet, "restriction to empty alphabet");
  std::vector<std::string> letters;
  for (LetterId x : kept) {
    if (x >= a.letter_count()) raise(ErrorCode::alphabet_mismatch, "letter index out of range");
    letters.push_back(a.alphabet().name(x));
  }
  std::vector<StateId> delta(a.state_count() * kept.size());
  for (StateId q = 0; q < a.state_count(); ++q)
    for (std::size_t i = 0; i < kept.size(); ++i)
      delta[q * kept.size() + i] = a.next(q, kept[i]);
  return SemiAutomaton(Alphabet(std::move(letters)), a.state_names(), std::move(delta));
}

bool is_sink(const SemiAutomaton& a, StateId q) {
  if (q >= a.state_count()) raise(ErrorCode::invalid_argument, "state index out of range");
  for (LetterId x = 0; x < a.letter_count(); ++x)
    if (a.next(q, x) != q) return false;
  return true;
}

}  // namespace wsync
