#include "wsync/subset_sync.hpp"

#include <functional>
#include <unordered_map>

#include "wsync/error.hpp"

namespace wsync {
namespace {

void check_guard(const SemiAutomaton& a, const SearchLimits& limits) {
  if (a.state_count() > limits.max_states)
    raise(ErrorCode::instance_too_large,
          "subset search over " + std::to_string(a.state_count()) +
              " states exceeds the guard of " + std::to_string(limits.max_states) +
              "; raise max_states to override");
}

void check_set(const SemiAutomaton& a, const StateSet& s, const char* what) {
  if (s.universe() != a.state_count())
    raise(ErrorCode::invalid_argument, std::string(what) + " universe does not match automaton");
}

// BFS over reachable subsets, expanding letters in canonical order, so the
// first accepted node carries the shortest lex-least witness.
std::optional<Word> subset_bfs(const SemiAutomaton& a, const StateSet& start,
                               const std::function<bool(const StateSet&)>& accept) {
  struct Node {
    StateSet set;
    std::uint32_t parent;
    LetterId letter;
  };
  auto witness = [&](const std::vector<Node>& nodes, std::uint32_t i) {
    Word w = Word::epsilon(a.alphabet());
    while (i != 0) {
      w.push_back(nodes[i].letter);
      i = nodes[i].parent;
    }
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  };

  if (accept(start)) return Word::epsilon(a.alphabet());
  std::vector<Node> nodes{{start, 0, 0}};
  std::unordered_map<StateSet, std::uint32_t, StateSetHash> seen{{start, 0}};
  for (std::uint32_t head = 0; head < nodes.size(); ++head) {
    for (LetterId x = 0; x < a.letter_count(); ++x) {
      StateSet next = image_letter(a, nodes[head].set, x);
      if (seen.count(next)) continue;
      std::uint32_t id = static_cast<std::uint32_t>(nodes.size());
      seen.emplace(next, id);
      nodes.push_back({next, head, x});
      if (accept(nodes.back().set)) return witness(nodes, id);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Word> sync_into_subset(const SemiAutomaton& a, const WaaCertificate& cert,
                                     const StateSet& from, const StateSet& target) {
  check_set(a, from, "source set");
  check_set(a, target, "target set");
  StateSet reachable_max = reachable_maximal_from(a, cert, from);
  if (!reachable_max.is_subset_of(from))
    raise(ErrorCode::precondition_violated,
          "source set does not contain all maximal states reachable from it");
  if (!reachable_max.is_subset_of(target)) return std::nullopt;

  Word w = Word::epsilon(a.alphabet());
  StateSet current = from;
  for (std::size_t round = 0; round + 1 < a.state_count(); ++round) {
    if (current.is_subset_of(target)) return w;
    for (LetterId x = 0; x < a.letter_count(); ++x) {
      current = image_letter(a, current, x);
      w.push_back(x);
    }
  }
  if (!current.is_subset_of(target))
    raise(ErrorCode::invalid_argument, "internal: w_Sigma^(n-1) failed to reach the target");
  return w;
}

std::optional<Word> sync_from_subset_search(const SemiAutomaton& a, const StateSet& from,
                                            const SearchLimits& limits) {
  check_set(a, from, "source set");
  if (from.empty()) raise(ErrorCode::empty_input, "Sync-From-Subset needs a nonempty source set");
  check_guard(a, limits);
  return subset_bfs(a, from, [](const StateSet& s) { return s.count() == 1; });
}

std::optional<Word> set_transporter_search(const SemiAutomaton& a, const StateSet& from,
                                           const StateSet& target, const SearchLimits& limits) {
  check_set(a, from, "source set");
  check_set(a, target, "target set");
  check_guard(a, limits);
  return subset_bfs(a, from, [&](const StateSet& s) { return s.is_subset_of(target); });
}

std::optional<Word> set_transporter_unary_waa(const SemiAutomaton& a, const WaaCertificate& cert,
                                              const StateSet& from, const StateSet& target) {
  if (a.letter_count() != 1)
    raise(ErrorCode::alphabet_mismatch, "unary SetTransporter needs a one-letter alphabet");
  if (cert.state_count() != a.state_count())
    raise(ErrorCode::waa_required, "certificate does not match automaton");
  check_set(a, from, "source set");
  check_set(a, target, "target set");

  StateSet current = from;
  Word w = Word::epsilon(a.alphabet());
  for (std::size_t i = 0; i < a.state_count(); ++i) {
    if (current.is_subset_of(target)) return w;
    current = image_letter(a, current, 0);
    w.push_back(0);
  }
  return std::nullopt;
}

}  // namespace wsync
