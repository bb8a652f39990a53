#include "wsync/classify.hpp"

#include <algorithm>
#include <map>

#include "wsync/error.hpp"

namespace wsync {
namespace {

struct LanguageInfo {
  LanguageId id;
  const char* name;
  // 2-state transition rows: mu[p][x] over letters a,b,c; -1 = undefined.
  std::array<std::array<int, 3>, 2> mu;
};

constexpr int kU = -1;

const LanguageInfo kLanguages[12] = {
    {LanguageId::a_bc_star, "a(b+c)*", {{{1, kU, kU}, {kU, 1, 1}}}},
    {LanguageId::abc_ab_star, "(a+b+c)(a+b)*", {{{1, 1, 1}, {1, 1, kU}}}},
    {LanguageId::ab_ac_star, "(a+b)(a+c)*", {{{1, 1, kU}, {1, kU, 1}}}},
    {LanguageId::ab_star_c, "(a+b)*c", {{{0, 0, 1}, {kU, kU, kU}}}},
    {LanguageId::ab_star_c_astar, "(a+b)*ca*", {{{0, 0, 1}, {1, kU, kU}}}},
    {LanguageId::ab_star_c_ab_star, "(a+b)*c(a+b)*", {{{0, 0, 1}, {1, 1, kU}}}},
    {LanguageId::ab_star_cc_star, "(a+b)*cc*", {{{0, 0, 1}, {kU, kU, 1}}}},
    {LanguageId::astar_b_ac_star, "a*b(a+c)*", {{{0, 1, kU}, {1, kU, 1}}}},
    {LanguageId::astar_bc_ab_star, "a*(b+c)(a+b)*", {{{0, 1, 1}, {1, 1, kU}}}},
    {LanguageId::astar_b_bc_star, "a*b(b+c)*", {{{0, 1, kU}, {kU, 1, 1}}}},
    {LanguageId::ab_star_c_bc_star, "(a+b)*c(b+c)*", {{{0, 0, 1}, {kU, 1, 1}}}},
    {LanguageId::astar_bc_bc_star, "a*(b+c)(b+c)*", {{{0, 1, 1}, {kU, 1, 1}}}},
};

const LanguageInfo* info_for(LanguageId id) {
  for (const auto& info : kLanguages)
    if (info.id == id) return &info;
  return nullptr;
}

Dfa rename_letters(const Dfa& dfa, const std::array<LetterId, 3>& role_of) {
  Dfa out = dfa;
  for (StateId q = 0; q < dfa.state_count(); ++q)
    for (LetterId x = 0; x < 3; ++x)
      out.delta[q * 3 + role_of[x]] = dfa.delta[q * 3 + x];
  return out;
}

bool same_language_dfa(const Dfa& d1, const Dfa& d2) {
  if (d1.letter_count != d2.letter_count) return false;
  std::vector<bool> seen(d1.state_count() * d2.state_count(), false);
  std::vector<std::pair<StateId, StateId>> stack{{d1.initial, d2.initial}};
  seen[d1.initial * d2.state_count() + d2.initial] = true;
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (d1.accepting[p] != d2.accepting[q]) return false;
    for (LetterId x = 0; x < d1.letter_count; ++x) {
      StateId pn = d1.delta[p * d1.letter_count + x];
      StateId qn = d2.delta[q * d2.letter_count + x];
      if (!seen[pn * d2.state_count() + qn]) {
        seen[pn * d2.state_count() + qn] = true;
        stack.push_back({pn, qn});
      }
    }
  }
  return true;
}

}  // namespace

ConstraintLabel label_for(LanguageId id) {
  if (id == LanguageId::other)
    return {LanguageId::other, GeneralComplexity::p, WaaComplexity::p};
  return {id, GeneralComplexity::pspace_complete,
          waa_polynomial(id) ? WaaComplexity::p : WaaComplexity::np_complete};
}

bool waa_polynomial(LanguageId id) {
  return id == LanguageId::ab_star_c || id == LanguageId::ab_star_c_astar ||
         id == LanguageId::ab_star_cc_star;
}

std::string language_name(LanguageId id) {
  if (const auto* info = info_for(id)) return info->name;
  return "other";
}

std::optional<LanguageId> language_from_name(std::string_view name) {
  for (const auto& info : kLanguages)
    if (name == info.name) return info.id;
  return std::nullopt;
}

ConstraintPdfa builtin_constraint(LanguageId id) {
  const auto* info = info_for(id);
  if (!info) raise(ErrorCode::invalid_argument, "no built-in automaton for 'other'");
  Alphabet abc({"a", "b", "c"});
  std::vector<StateId> mu(6, ConstraintPdfa::kUndefined);
  for (StateId p = 0; p < 2; ++p)
    for (LetterId x = 0; x < 3; ++x)
      if (info->mu[p][x] != kU) mu[p * 3 + x] = static_cast<StateId>(info->mu[p][x]);
  return ConstraintPdfa(std::move(abc), {"p0", "p1"}, std::move(mu), 0,
                        StateSet::of(2, {1}));
}

ConstraintPdfa sigma_star_constraint(const Alphabet& alphabet) {
  std::vector<StateId> mu(alphabet.size(), 0);
  return ConstraintPdfa(alphabet, {"p0"}, std::move(mu), 0, StateSet::of(1, {0}));
}

ConstraintPdfa bracket_constraint(const Alphabet& alphabet, LetterId first, LetterId last,
                                  const std::vector<LetterId>& middle) {
  const std::size_t k = alphabet.size();
  std::vector<StateId> mu(3 * k, ConstraintPdfa::kUndefined);
  mu[0 * k + first] = 1;
  for (LetterId x : middle) {
    if (x >= k) raise(ErrorCode::alphabet_mismatch, "middle letter index out of range");
    mu[1 * k + x] = 1;
  }
  mu[1 * k + last] = 2;
  return ConstraintPdfa(alphabet, {"p0", "p1", "p2"}, std::move(mu), 0, StateSet::of(3, {2}));
}

Dfa complete_dfa(const ConstraintPdfa& b) {
  const std::size_t k = b.alphabet().size();
  const std::size_t n = b.state_count();
  bool partial = false;
  for (StateId p = 0; p < n; ++p)
    for (LetterId x = 0; x < k; ++x)
      if (!b.defined(p, x)) partial = true;

  Dfa dfa;
  dfa.letter_count = k;
  dfa.initial = b.initial();
  const std::size_t total = partial ? n + 1 : n;
  dfa.accepting.assign(total, false);
  for (StateId p = 0; p < n; ++p) dfa.accepting[p] = b.accepts_state(p);
  dfa.delta.assign(total * k, static_cast<StateId>(n));  // dead state default
  for (StateId p = 0; p < n; ++p)
    for (LetterId x = 0; x < k; ++x)
      if (b.defined(p, x)) dfa.delta[p * k + x] = b.step(p, x);
  return dfa;
}

Dfa minimize_dfa(const Dfa& dfa) {
  const std::size_t k = dfa.letter_count;

  // Reachable trim.
  std::vector<StateId> reach{dfa.initial};
  std::vector<bool> seen(dfa.state_count(), false);
  seen[dfa.initial] = true;
  for (std::size_t head = 0; head < reach.size(); ++head)
    for (LetterId x = 0; x < k; ++x) {
      StateId t = dfa.delta[reach[head] * k + x];
      if (!seen[t]) {
        seen[t] = true;
        reach.push_back(t);
      }
    }

  // Moore partition refinement on the reachable part.
  std::vector<int> block(dfa.state_count(), -1);
  for (StateId q : reach) block[q] = dfa.accepting[q] ? 1 : 0;
  for (;;) {
    std::map<std::vector<int>, int> next_block;
    std::vector<int> assigned(dfa.state_count(), -1);
    for (StateId q : reach) {
      std::vector<int> signature{block[q]};
      for (LetterId x = 0; x < k; ++x) signature.push_back(block[dfa.delta[q * k + x]]);
      auto [it, _] = next_block.try_emplace(signature, static_cast<int>(next_block.size()));
      assigned[q] = it->second;
    }
    bool changed = false;
    for (StateId q : reach) changed |= assigned[q] != block[q];
    block = std::move(assigned);
    if (!changed) break;
  }

  // Canonical renumbering by BFS from the initial block.
  int block_count = 0;
  for (StateId q : reach) block_count = std::max(block_count, block[q] + 1);
  std::vector<StateId> repr(block_count);
  for (StateId q : reach) repr[block[q]] = q;
  std::vector<int> number(block_count, -1);
  std::vector<int> order{block[dfa.initial]};
  number[block[dfa.initial]] = 0;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (LetterId x = 0; x < k; ++x) {
      int t = block[dfa.delta[repr[order[head]] * k + x]];
      if (number[t] < 0) {
        number[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }

  Dfa out;
  out.letter_count = k;
  out.initial = 0;
  out.accepting.assign(order.size(), false);
  out.delta.assign(order.size() * k, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    StateId q = repr[order[i]];
    out.accepting[i] = dfa.accepting[q];
    for (LetterId x = 0; x < k; ++x)
      out.delta[i * k + x] = static_cast<StateId>(number[block[dfa.delta[q * k + x]]]);
  }
  return out;
}

bool same_language(const ConstraintPdfa& b1, const ConstraintPdfa& b2) {
  if (b1.alphabet().size() != b2.alphabet().size()) return false;
  return same_language_dfa(complete_dfa(b1), complete_dfa(b2));
}

Classification classify_constraint(const ConstraintPdfa& b) {
  if (b.state_count() > 2 || b.alphabet().size() > 3)
    raise(ErrorCode::unsupported_for_classification,
          "classification covers constraints with at most 2 states over at most 3 letters");

  if (b.alphabet().size() == 3) {
    Dfa canonical = minimize_dfa(complete_dfa(b));
    std::array<LetterId, 3> role_of = {0, 1, 2};
    std::sort(role_of.begin(), role_of.end());
    do {
      Dfa renamed = rename_letters(canonical, role_of);
      for (const auto& info : kLanguages) {
        if (same_language_dfa(renamed, complete_dfa(builtin_constraint(info.id))))
          return {label_for(info.id), role_of};
      }
    } while (std::next_permutation(role_of.begin(), role_of.end()));
  }
  return {label_for(LanguageId::other), {0, 1, 2}};
}

}  // namespace wsync
