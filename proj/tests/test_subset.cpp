#include <doctest.h>

#include "wsync/error.hpp"
#include "wsync/random_gen.hpp"
#include "wsync/subset_sync.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace wsync;

namespace {

template <typename F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

SemiAutomaton unary_path() {
  // 0 -a-> 1 -a-> 2 (sink)
  return SemiAutomaton(Alphabet({"a"}), 3, {1, 2, 2});
}

SemiAutomaton two_sink_fork() {
  return SemiAutomaton(Alphabet({"a", "b"}), 3, {1, 2, 1, 1, 2, 2});
}

}  // namespace

TEST_CASE("sync_into_subset decides via reachable maximal states") {
  SemiAutomaton a = fixtures::w1();
  auto cert = require_waa(a);
  StateSet all = a.all_states();

  auto w = sync_into_subset(a, cert, all, StateSet::of(3, {2}));
  REQUIRE(w.has_value());
  CHECK(w->str() == "ab");
  CHECK(image(a, all, *w).is_subset_of(StateSet::of(3, {2})));

  CHECK(sync_into_subset(a, cert, all, all)->empty());
  CHECK_FALSE(sync_into_subset(a, cert, all, StateSet::of(3, {1})).has_value());
}

TEST_CASE("sync_into_subset refuses sources missing their maximal states") {
  SemiAutomaton a = fixtures::w1();
  auto cert = require_waa(a);
  CHECK(code_of([&] {
          sync_into_subset(a, cert, StateSet::of(3, {0}), StateSet::of(3, {2}));
        }) == ErrorCode::precondition_violated);
  // A source already containing its reachable sink is fine.
  CHECK(sync_into_subset(a, cert, StateSet::of(3, {0, 2}), StateSet::of(3, {2})).has_value());
}

TEST_CASE("sync_from_subset_search returns the shortest lex-least merge word") {
  SemiAutomaton a = fixtures::w1();
  auto w = sync_from_subset_search(a, StateSet::of(3, {0, 1}));
  REQUIRE(w.has_value());
  CHECK(w->str() == "aa");

  CHECK(sync_from_subset_search(a, StateSet::of(3, {1}))->empty());

  SemiAutomaton fork = two_sink_fork();
  CHECK_FALSE(sync_from_subset_search(fork, StateSet::of(3, {1, 2})).has_value());
  CHECK(code_of([&] { sync_from_subset_search(a, StateSet(3)); }) == ErrorCode::empty_input);
}

TEST_CASE("set_transporter_search handles the degenerate set cases") {
  SemiAutomaton a = fixtures::w1();
  auto w = set_transporter_search(a, StateSet::of(3, {0}), StateSet::of(3, {2}));
  REQUIRE(w.has_value());
  CHECK(w->str() == "aa");

  CHECK(set_transporter_search(a, StateSet(3), StateSet::of(3, {1}))->empty());
  CHECK_FALSE(set_transporter_search(a, StateSet::of(3, {0}), StateSet(3)).has_value());
}

TEST_CASE("exponential searches are guarded and the guard lifts") {
  std::vector<StateId> delta(21 * 1);
  for (StateId q = 0; q < 21; ++q) delta[q] = std::min<StateId>(q + 1, 20);
  SemiAutomaton big(Alphabet({"a"}), 21, std::move(delta));
  CHECK(code_of([&] { sync_from_subset_search(big, big.all_states()); }) ==
        ErrorCode::instance_too_large);
  SearchLimits lifted{64};
  CHECK(sync_from_subset_search(big, big.all_states(), lifted).has_value());
}

TEST_CASE("unary weakly acyclic transporter stabilizes within n-1 steps") {
  SemiAutomaton a = unary_path();
  auto cert = require_waa(a);
  CHECK(set_transporter_unary_waa(a, cert, StateSet::of(3, {0}), StateSet::of(3, {2}))->str() ==
        "aa");
  CHECK(set_transporter_unary_waa(a, cert, StateSet::of(3, {0}), StateSet::of(3, {1}))->str() ==
        "a");
  CHECK_FALSE(
      set_transporter_unary_waa(a, cert, StateSet::of(3, {2}), StateSet::of(3, {0})).has_value());

  SemiAutomaton binary = fixtures::w1();
  auto binary_cert = require_waa(binary);
  CHECK(code_of([&] {
          set_transporter_unary_waa(binary, binary_cert, binary.all_states(),
                                    binary.all_states());
        }) == ErrorCode::alphabet_mismatch);
}

TEST_CASE("unary transporter agrees with the subset search") {
  Rng rng(29);
  for (int round = 0; round < 150; ++round) {
    std::uniform_int_distribution<std::size_t> nd(1, 10);
    SemiAutomaton a = random_waa(rng, nd(rng), 1);
    auto cert = require_waa(a);
    StateSet from = random_subset(rng, a.state_count(), false);
    StateSet target = random_subset(rng, a.state_count(), false);
    auto fast = set_transporter_unary_waa(a, cert, from, target);
    auto slow = set_transporter_search(a, from, target);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) CHECK(image(a, from, *fast).is_subset_of(target));
  }

  // Exhaustive over every monotone unary transition function up to 4 states
  // and every (from, target) pair. delta[q] ranges over [q, n-1].
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<StateId> delta(n);
    for (StateId q = 0; q < n; ++q) delta[q] = q;
    bool more = true;
    while (more) {
      SemiAutomaton a(Alphabet({"a"}), n, std::vector<StateId>(delta));
      auto cert = require_waa(a);
      for (std::uint32_t from_mask = 0; from_mask < (1u << n); ++from_mask)
        for (std::uint32_t target_mask = 0; target_mask < (1u << n); ++target_mask) {
          StateSet from(n), target(n);
          for (StateId q = 0; q < n; ++q) {
            if (from_mask & (1u << q)) from.set(q);
            if (target_mask & (1u << q)) target.set(q);
          }
          CHECK(set_transporter_unary_waa(a, cert, from, target).has_value() ==
                set_transporter_search(a, from, target).has_value());
        }
      std::size_t pos = 0;
      while (pos < n && delta[pos] == n - 1) {
        delta[pos] = static_cast<StateId>(pos);
        ++pos;
      }
      if (pos == n)
        more = false;
      else
        ++delta[pos];
    }
  }
}

TEST_CASE("into-subset agrees with the transporter from the full set") {
  Rng rng(31);
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<std::size_t> nd(1, 8), kd(1, 3);
    SemiAutomaton a = random_waa(rng, nd(rng), kd(rng));
    auto cert = require_waa(a);
    StateSet target = random_subset(rng, a.state_count(), false);

    auto direct = sync_into_subset(a, cert, a.all_states(), target);
    auto search = set_transporter_search(a, a.all_states(), target);
    CHECK(direct.has_value() == search.has_value());
    if (direct) CHECK(image(a, a.all_states(), *direct).is_subset_of(target));
    if (search) CHECK(image(a, a.all_states(), *search).is_subset_of(target));

    // Monotonicity: enlarging the target preserves solvability.
    if (direct) {
      StateSet larger = target | random_subset(rng, a.state_count(), false);
      CHECK(sync_into_subset(a, cert, a.all_states(), larger).has_value());
    }
  }
}
