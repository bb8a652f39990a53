#include <doctest.h>

#include <functional>
#include <string>

#include "wsync/error.hpp"
#include "wsync/random_gen.hpp"
#include "wsync/text_io.hpp"

#include "fixtures.hpp"

using namespace wsync;

namespace {

std::string error_message(const std::function<void()>& fn, ErrorCode expected) {
  try {
    fn();
  } catch (const Error& e) {
    CHECK(e.code() == expected);
    return e.what();
  }
  FAIL("expected an error");
  return {};
}

}  // namespace

TEST_CASE("semi-automaton files round-trip structurally") {
  Rng rng(61);
  for (int round = 0; round < 50; ++round) {
    std::uniform_int_distribution<std::size_t> nd(1, 9), kd(1, 3);
    SemiAutomaton a = random_waa(rng, nd(rng), kd(rng));
    SemiAutomaton back = parse_semi_automaton(print_semi_automaton(a));
    CHECK(back == a);
  }
}

TEST_CASE("pdfa files round-trip structurally") {
  Rng rng(67);
  for (int round = 0; round < 50; ++round) {
    std::uniform_int_distribution<std::size_t> kd(1, 3), pd(1, 4);
    ConstraintPdfa b = random_constraint(rng, letters_alphabet(kd(rng)), pd(rng));
    CHECK(parse_pdfa(print_pdfa(b)) == b);
  }
  ConstraintPdfa builtin = builtin_constraint(LanguageId::ab_star_c_bc_star);
  CHECK(parse_pdfa(print_pdfa(builtin)) == builtin);
}

TEST_CASE("comments and spacing are tolerated") {
  SemiAutomaton a = parse_semi_automaton(
      "# a tiny machine\n"
      "alphabet: a b   # two letters\n"
      "states: s t\n"
      "\n"
      "s a t  # forward\n"
      "s b s\n"
      "t a t\n"
      "t b t\n");
  CHECK(a.state_count() == 2);
  CHECK(a.next(0, 0) == 1);
}

TEST_CASE("parse errors carry file, line and column") {
  std::string bad =
      "alphabet: a\n"
      "states: s\n"
      "s z s\n";
  std::string message =
      error_message([&] { parse_semi_automaton(bad, "bad.aut"); }, ErrorCode::parse_error);
  CHECK(message.find("bad.aut:3:3") != std::string::npos);
  CHECK(message.find("unknown letter 'z'") != std::string::npos);
}

TEST_CASE("completeness and duplicates are enforced for semi-automata") {
  std::string incomplete =
      "alphabet: a b\n"
      "states: s\n"
      "s a s\n";
  std::string message = error_message([&] { parse_semi_automaton(incomplete); },
                                      ErrorCode::parse_error);
  CHECK(message.find("missing transition") != std::string::npos);

  std::string duplicated =
      "alphabet: a\n"
      "states: s\n"
      "s a s\n"
      "s a s\n";
  error_message([&] { parse_semi_automaton(duplicated); }, ErrorCode::parse_error);

  std::string has_initial =
      "alphabet: a\nstates: s\ninitial: s\ns a s\n";
  error_message([&] { parse_semi_automaton(has_initial); }, ErrorCode::parse_error);
}

TEST_CASE("pdfa files may omit transitions but need initial and accepting") {
  ConstraintPdfa b = parse_pdfa(
      "alphabet: a b c\n"
      "states: p0 p1\n"
      "initial: p0\n"
      "accepting: p1\n"
      "p0 a p0\np0 b p0\np0 c p1\n");
  CHECK_FALSE(b.defined(1, 0));
  CHECK(same_language(b, builtin_constraint(LanguageId::ab_star_c)));

  ConstraintPdfa empty_accepting = parse_pdfa(
      "alphabet: a\nstates: p\ninitial: p\naccepting:\np a p\n");
  CHECK(empty_accepting.accepting().empty());

  error_message([] { parse_pdfa("alphabet: a\nstates: p\naccepting: p\n"); },
                ErrorCode::parse_error);
}

TEST_CASE("dimacs subset reader") {
  CnfFormula phi = parse_dimacs(
      "c example\n"
      "p cnf 2 4\n"
      "1 2 0\n"
      "1 -2 0\n"
      "-1 0\n"
      "1 2 0\n");
  CHECK(phi.num_vars() == 2);
  CHECK(phi.clause_count() == 4);
  CHECK(phi.polarity(2, 1) == -1);

  CnfFormula split = parse_dimacs("p cnf 2 1\n1\n2 0\n");  // clauses may span lines
  CHECK(split.clauses()[0].size() == 2);

  error_message([] { parse_dimacs("1 0\n"); }, ErrorCode::parse_error);
  error_message([] { parse_dimacs("p cnf 1 1\n2 0\n"); }, ErrorCode::parse_error);
  error_message([] { parse_dimacs("p cnf 1 1\n1\n"); }, ErrorCode::parse_error);
  error_message([] { parse_dimacs("p cnf 1 2\n1 0\n"); }, ErrorCode::parse_error);
}
