#include "wsync/constrained.hpp"

#include <algorithm>
#include <unordered_map>

#include "wsync/error.hpp"

namespace wsync {
namespace {

void check_shared_alphabet(const ConstraintPdfa& b, const SemiAutomaton& a) {
  if (!(b.alphabet() == a.alphabet()))
    raise(ErrorCode::alphabet_mismatch,
          "constraint and input automaton must share one alphabet");
}

struct PairKey {
  StateId p;
  StateSet set;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& key) const {
    return key.set.hash() * 1000003u + key.p;
  }
};

// Witness w for (a+b)*-style restrictions comes out over the restricted
// alphabet; translate letter indices back into the full alphabet.
Word lift_word(const SemiAutomaton& a, const Word& restricted,
               const std::vector<LetterId>& kept) {
  Word out = Word::epsilon(a.alphabet());
  for (LetterId x : restricted.letters) out.push_back(kept[x]);
  return out;
}

std::vector<LetterId> sorted_pair(LetterId x, LetterId y) {
  std::vector<LetterId> kept{x, y};
  std::sort(kept.begin(), kept.end());
  return kept;
}

void check_distinct_roles(const SemiAutomaton& a, std::initializer_list<LetterId> roles) {
  std::vector<LetterId> v(roles);
  for (LetterId x : v)
    if (x >= a.letter_count())
      raise(ErrorCode::alphabet_mismatch, "letter role index out of range");
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    raise(ErrorCode::alphabet_mismatch, "letter roles must be distinct");
}

}  // namespace

std::uint64_t shortest_bound(const SemiAutomaton& a, const WaaCertificate& cert,
                             const ConstraintPdfa& b) {
  if (cert.state_count() != a.state_count())
    raise(ErrorCode::waa_required, "certificate does not match automaton");
  const std::uint64_t n = a.state_count();
  return static_cast<std::uint64_t>(b.state_count()) * (n * (n - 1) / 2);
}

bool verify_witness(const ConstraintPdfa& b, const SemiAutomaton& a, const Word& w) {
  check_shared_alphabet(b, a);
  return pdfa_accepts(b, w) && image(a, a.all_states(), w).count() == 1;
}

std::optional<Word> solve_generic(const ConstraintPdfa& b, const SemiAutomaton& a,
                                  const SearchLimits& limits, SolveStats* stats) {
  check_shared_alphabet(b, a);
  if (a.state_count() > limits.max_states)
    raise(ErrorCode::instance_too_large,
          "product search over " + std::to_string(a.state_count()) +
              " states exceeds the guard of " + std::to_string(limits.max_states) +
              "; raise max_states to override");

  struct Node {
    PairKey key;
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
  auto accepted = [&](const PairKey& key) {
    return b.accepts_state(key.p) && key.set.count() == 1;
  };

  std::optional<Word> result;
  PairKey start{b.initial(), a.all_states()};
  if (accepted(start)) {
    result = Word::epsilon(a.alphabet());
  } else {
    std::vector<Node> nodes{{start, 0, 0}};
    std::unordered_map<PairKey, std::uint32_t, PairKeyHash> seen{{start, 0}};
    for (std::uint32_t head = 0; head < nodes.size() && !result; ++head) {
      for (LetterId x = 0; x < a.letter_count(); ++x) {
        StateId pn = b.step(nodes[head].key.p, x);
        if (pn == ConstraintPdfa::kUndefined) continue;
        PairKey next{pn, image_letter(a, nodes[head].key.set, x)};
        if (seen.count(next)) continue;
        std::uint32_t id = static_cast<std::uint32_t>(nodes.size());
        seen.emplace(next, id);
        nodes.push_back({std::move(next), head, x});
        if (accepted(nodes.back().key)) {
          result = witness(nodes, id);
          break;
        }
      }
    }
    if (stats) stats->states_explored = nodes.size();
  }

  if (result) {
    WaaCheck check = check_weakly_acyclic(a);
    if (auto* cert = std::get_if<WaaCertificate>(&check)) {
      // A shortest witness strictly advances the topological image tuple at
      // least once per |P| letters, except possibly in one trailing window.
      std::uint64_t bound = shortest_bound(a, *cert, b) + b.state_count() - 1;
      if (result->size() > bound)
        raise(ErrorCode::invalid_witness,
              "internal: witness exceeds the length bound on a weakly acyclic input");
    }
  }
  return result;
}

std::optional<Word> solve_suffix_c(const SemiAutomaton& a, const WaaCertificate& cert,
                                   LetterId free1, LetterId free2, LetterId mid) {
  check_distinct_roles(a, {free1, free2, mid});
  auto sink = synchronizing_state(a, cert);
  if (!sink) return std::nullopt;

  StateSet target = preimage(a, StateSet::of(a.state_count(), {*sink}), mid);
  auto kept = sorted_pair(free1, free2);
  SemiAutomaton restricted = restrict_alphabet(a, kept);
  auto restricted_cert = require_waa(restricted);
  auto prefix = sync_into_subset(restricted, restricted_cert, restricted.all_states(), target);
  if (!prefix) return std::nullopt;

  Word w = lift_word(a, *prefix, kept);
  w.push_back(mid);
  if (image(a, a.all_states(), w).count() != 1)
    raise(ErrorCode::invalid_witness, "internal: suffix-c witness failed verification");
  return w;
}

std::optional<Word> solve_suffix_c(const SemiAutomaton& a, const WaaCertificate& cert) {
  const Alphabet& sigma = a.alphabet();
  return solve_suffix_c(a, cert, sigma.require("a"), sigma.require("b"), sigma.require("c"));
}

std::optional<Word> solve_c_then_tail(const SemiAutomaton& a, const WaaCertificate& cert,
                                      LetterId free1, LetterId free2, LetterId mid,
                                      LetterId tail) {
  check_distinct_roles(a, {free1, free2, mid});
  if (tail != mid && tail != free1 && tail != free2)
    raise(ErrorCode::alphabet_mismatch, "tail letter must be the mid letter or a free letter");
  auto sink = synchronizing_state(a, cert);
  if (!sink) return std::nullopt;

  auto kept = sorted_pair(free1, free2);
  SemiAutomaton restricted = restrict_alphabet(a, kept);
  auto restricted_cert = require_waa(restricted);
  StateSet restricted_all = restricted.all_states();

  // Images of tail^i pulled back from the sink stabilize by i = n.
  StateSet tail_preimage = StateSet::of(a.state_count(), {*sink});
  for (std::size_t i = 0; i <= a.state_count(); ++i) {
    StateSet target = preimage(a, tail_preimage, mid);
    if (auto prefix = sync_into_subset(restricted, restricted_cert, restricted_all, target)) {
      Word w = lift_word(a, *prefix, kept);
      w.push_back(mid);
      for (std::size_t r = 0; r < i; ++r) w.push_back(tail);
      if (image(a, a.all_states(), w).count() != 1)
        raise(ErrorCode::invalid_witness, "internal: c-then-tail witness failed verification");
      return w;
    }
    tail_preimage = preimage(a, tail_preimage, tail);
  }
  return std::nullopt;
}

std::optional<Word> solve_c_then_tail(const SemiAutomaton& a, const WaaCertificate& cert,
                                      LetterId tail) {
  const Alphabet& sigma = a.alphabet();
  LetterId la = sigma.require("a");
  LetterId lb = sigma.require("b");
  LetterId lc = sigma.require("c");
  if (tail != la && tail != lc)
    raise(ErrorCode::alphabet_mismatch, "tail must be the letter 'a' or 'c'");
  return solve_c_then_tail(a, cert, la, lb, lc, tail);
}

SolveReport dispatch_solve(const ConstraintPdfa& b, const SemiAutomaton& a,
                           const SearchLimits& limits) {
  check_shared_alphabet(b, a);
  SolveReport report;
  std::optional<Classification> classification;
  try {
    classification = classify_constraint(b);
    report.label = classification->label;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::unsupported_for_classification) throw;
  }

  if (classification && waa_polynomial(classification->label.language)) {
    WaaCheck check = check_weakly_acyclic(a);
    if (auto* cert = std::get_if<WaaCertificate>(&check)) {
      // role_of[x] = canonical role of letter x; invert to find the letters
      // playing a, b and c.
      std::array<LetterId, 3> letter_of{};
      for (LetterId x = 0; x < 3; ++x) letter_of[classification->role_of[x]] = x;
      switch (classification->label.language) {
        case LanguageId::ab_star_c:
          report.method = "poly/suffix-c";
          report.witness = solve_suffix_c(a, *cert, letter_of[0], letter_of[1], letter_of[2]);
          break;
        case LanguageId::ab_star_c_astar:
          report.method = "poly/c-then-a";
          report.witness = solve_c_then_tail(a, *cert, letter_of[0], letter_of[1], letter_of[2],
                                             letter_of[0]);
          break;
        default:
          report.method = "poly/c-then-c";
          report.witness = solve_c_then_tail(a, *cert, letter_of[0], letter_of[1], letter_of[2],
                                             letter_of[2]);
          break;
      }
      report.decision = report.witness.has_value();
      if (report.witness && !verify_witness(b, a, *report.witness))
        raise(ErrorCode::invalid_witness, "internal: polynomial-route witness rejected");
      return report;
    }
  }

  SolveStats stats;
  report.method = "generic/product-bfs";
  report.witness = solve_generic(b, a, limits, &stats);
  report.decision = report.witness.has_value();
  report.states_explored = stats.states_explored;
  if (report.witness && !verify_witness(b, a, *report.witness))
    raise(ErrorCode::invalid_witness, "internal: generic witness rejected");
  return report;
}

}  // namespace wsync
