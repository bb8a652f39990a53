#include <doctest.h>

#include "wsync/constrained.hpp"
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

CnfFormula figure_formula() {
  // (x1 v x2) & (x1 v !x2) & (!x1) & (x1 v x2) -- unsatisfiable
  return CnfFormula(2, {{{1, true}, {2, true}},
                        {{1, true}, {2, false}},
                        {{1, false}},
                        {{1, true}, {2, true}}});
}

CnfFormula random_formula(Rng& rng, std::uint32_t max_vars, std::uint32_t max_clauses) {
  std::uniform_int_distribution<std::uint32_t> nd(1, max_vars), md(1, max_clauses);
  std::uint32_t n = nd(rng), m = md(rng);
  std::uniform_int_distribution<std::uint32_t> vd(1, n);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::vector<Literal>> clauses(m);
  for (auto& clause : clauses) {
    std::uint32_t size = std::uniform_int_distribution<std::uint32_t>(1, n)(rng);
    for (std::uint32_t i = 0; i < size; ++i) {
      Literal lit{vd(rng), coin(rng)};
      bool clashes = false;
      for (const auto& other : clause) clashes |= other.var == lit.var;
      if (!clashes) clause.push_back(lit);
    }
    if (clause.empty()) clause.push_back({vd(rng), coin(rng)});
  }
  return CnfFormula(n, std::move(clauses));
}

}  // namespace

TEST_CASE("formula validation") {
  CHECK(code_of([] { CnfFormula(1, {{{1, true}, {1, false}}}); }) ==
        ErrorCode::degenerate_formula);
  CHECK(code_of([] { CnfFormula(1, {{{2, true}}}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { CnfFormula(1, {{}}); }) == ErrorCode::invalid_argument);
  CnfFormula dedup(1, {{{1, true}, {1, true}}});
  CHECK(dedup.clauses()[0].size() == 1);
}

TEST_CASE("the four-clause no-instance reduces to 13 states") {
  CnfFormula phi = figure_formula();
  CHECK_FALSE(oracles::satisfiable(phi));
  SatReduction red = reduce_sat(phi, reduction_case_for(LanguageId::a_bc_star));
  CHECK(red.automaton.state_count() == 13);  // 4 strands of length 3 plus the sink
  CHECK(is_weakly_acyclic(red.automaton));
  CHECK_FALSE(dispatch_solve(red.constraint, red.automaton).decision);
}

TEST_CASE("single-clause instances have hand-checkable witnesses") {
  CnfFormula pos(1, {{{1, true}}});
  ReductionCase case1 = reduction_case_for(LanguageId::a_bc_star);
  SatReduction red = reduce_sat(pos, case1);
  CHECK(red.automaton.state_count() == 3);
  Word ac = fixtures::word(red.automaton, "ac");
  CHECK(verify_witness(red.constraint, red.automaton, ac));
  CHECK(assignment_to_word(pos, case1, {true}) == ac);

  CnfFormula neg(1, {{{1, false}}});
  CHECK(assignment_to_word(neg, case1, {false}).str() == "ab");
}

TEST_CASE("the (a+b)*c(b+c)* gadget needs its strands flushed before the marker") {
  CnfFormula pos(1, {{{1, true}}});
  ReductionCase case8 = reduction_case_for(LanguageId::ab_star_c_bc_star);
  SatReduction red = reduce_sat(pos, case8);

  Word canonical = assignment_to_word(pos, case8, {true});
  CHECK(canonical.str() == "bacb");
  CHECK(verify_witness(red.constraint, red.automaton, canonical));
  // Reading c directly after the reset letter a advances the live column-1
  // states past their escape position; that word cannot synchronize.
  Word premature = fixtures::word(red.automaton, "acb");
  CHECK(pdfa_accepts(red.constraint, premature));
  CHECK(image(red.automaton, red.automaton.all_states(), premature).count() == 2);
}

TEST_CASE("assignment and word translations invert each other") {
  CnfFormula pos(1, {{{1, true}}});
  ReductionCase case1 = reduction_case_for(LanguageId::a_bc_star);
  CHECK(word_to_assignment(pos, case1, assignment_to_word(pos, case1, {true})) ==
        Assignment{true});

  CnfFormula neg(1, {{{1, false}}});
  CHECK(word_to_assignment(neg, case1, assignment_to_word(neg, case1, {false})) ==
        Assignment{false});

  CHECK(code_of([&] { assignment_to_word(neg, case1, {true}); }) == ErrorCode::not_satisfying);
  CHECK(code_of([&] {
          word_to_assignment(pos, case1, fixtures::word(reduce_sat(pos, case1).automaton, "ab"));
        }) == ErrorCode::invalid_witness);

  // Witnesses need not be canonical: extra reset letters before the strand
  // part are legal in a*(b+c)(b+c)*, and (a+b)*c(b+c)* words may reuse the
  // marker letter c inside the strand.
  ReductionCase case9 = reduction_case_for(LanguageId::astar_bc_bc_star);
  SatReduction red9 = reduce_sat(pos, case9);
  Word padded = fixtures::word(red9.automaton, "aac");
  CHECK(verify_witness(red9.constraint, red9.automaton, padded));
  CHECK(word_to_assignment(pos, case9, padded) == Assignment{true});

  ReductionCase case8 = reduction_case_for(LanguageId::ab_star_c_bc_star);
  SatReduction red8 = reduce_sat(neg, case8);
  Word double_c = fixtures::word(red8.automaton, "acc");
  CHECK(verify_witness(red8.constraint, red8.automaton, double_c));
  CHECK(word_to_assignment(neg, case8, double_c) == Assignment{false});

  Rng rng(43);
  for (int round = 0; round < 60; ++round) {
    CnfFormula phi = random_formula(rng, 4, 4);
    if (!oracles::satisfiable(phi)) continue;
    Assignment satisfying;
    for (std::uint32_t bits = 0;; ++bits) {
      Assignment candidate(phi.num_vars());
      for (std::uint32_t j = 0; j < phi.num_vars(); ++j) candidate[j] = (bits >> j) & 1;
      if (phi.satisfied_by(candidate)) {
        satisfying = candidate;
        break;
      }
    }
    for (LanguageId id : np_hard_languages()) {
      ReductionCase rc = reduction_case_for(id);
      Word w = assignment_to_word(phi, rc, satisfying);
      Assignment back = word_to_assignment(phi, rc, w);
      CHECK(phi.satisfied_by(back));

      // The decoder must handle any valid witness, not just canonical ones.
      SatReduction red = reduce_sat(phi, rc);
      auto shortest = solve_generic(red.constraint, red.automaton, SearchLimits{40});
      REQUIRE(shortest.has_value());
      CHECK(phi.satisfied_by(word_to_assignment(phi, rc, *shortest)));
    }
  }
}

TEST_CASE("reductions preserve weak acyclicity with a unique sink") {
  Rng rng(47);
  for (int round = 0; round < 40; ++round) {
    CnfFormula phi = random_formula(rng, 4, 4);
    for (LanguageId id : np_hard_languages()) {
      SatReduction red = reduce_sat(phi, reduction_case_for(id));
      auto cert = require_waa(red.automaton);
      CHECK(maximal_states(red.automaton, cert).count() == 1);
    }
  }
}

TEST_CASE("satisfiability transfers through every reduction") {
  Rng rng(53);
  for (int round = 0; round < 25; ++round) {
    CnfFormula phi = random_formula(rng, 4, 4);
    bool expected = oracles::satisfiable(phi);
    for (LanguageId id : np_hard_languages()) {
      SatReduction red = reduce_sat(phi, reduction_case_for(id));
      CHECK(solve_generic(red.constraint, red.automaton, SearchLimits{40}).has_value() == expected);
    }
  }

  // Every single-clause formula over up to four variables is satisfiable and
  // must reduce to a yes-instance in all nine cases.
  for (std::uint32_t vars = 1; vars <= 4; ++vars) {
    for (std::uint32_t mask = 1; mask < (1u << vars); ++mask) {
      std::vector<std::uint32_t> members;
      for (std::uint32_t v = 1; v <= vars; ++v)
        if (mask & (1u << (v - 1))) members.push_back(v);
      for (std::uint32_t signs = 0; signs < (1u << members.size()); ++signs) {
        std::vector<Literal> clause;
        for (std::size_t i = 0; i < members.size(); ++i)
          clause.push_back({members[i], (signs >> i & 1) != 0});
        CnfFormula phi(vars, {clause});
        for (LanguageId id : np_hard_languages()) {
          SatReduction red = reduce_sat(phi, reduction_case_for(id));
          CHECK(solve_generic(red.constraint, red.automaton, SearchLimits{40}).has_value());
        }
      }
    }
  }
}

TEST_CASE("transporter reduction mirrors the direct search") {
  SemiAutomaton a = fixtures::w1();
  TransporterReduction red =
      reduce_transporter(a, StateSet::of(3, {0}), StateSet::of(3, {2}));
  CHECK(red.automaton.state_count() == 4);
  CHECK(is_weakly_acyclic(red.automaton));
  auto witness = solve_generic(red.constraint, red.automaton);
  REQUIRE(witness.has_value());
  CHECK(witness->str() == "__alpha a a __beta");

  TransporterReduction all =
      reduce_transporter(a, a.all_states(), a.all_states());
  CHECK(solve_generic(all.constraint, all.automaton)->str() == "__alpha __beta");

  TransporterReduction never =
      reduce_transporter(a, StateSet::of(3, {2}), StateSet::of(3, {0}));
  CHECK_FALSE(solve_generic(never.constraint, never.automaton).has_value());

  CHECK(code_of([&] { reduce_transporter(a, StateSet(3), a.all_states()); }) ==
        ErrorCode::empty_input);
}

TEST_CASE("fresh names dodge collisions") {
  SemiAutomaton weird(Alphabet({"__alpha", "x"}), {"__sink", "s"}, {0, 0, 1, 1});
  TransporterReduction red =
      reduce_transporter(weird, StateSet::of(2, {0}), StateSet::of(2, {1}));
  CHECK(red.automaton.alphabet().contains("__alpha_1"));
  CHECK(red.automaton.find_state("__sink_1").has_value());
}

TEST_CASE("transporter reduction decision equivalence on random inputs") {
  Rng rng(59);
  for (int round = 0; round < 120; ++round) {
    std::uniform_int_distribution<std::size_t> nd(1, 7), kd(1, 3);
    SemiAutomaton a = random_waa(rng, nd(rng), kd(rng));
    StateSet from = random_subset(rng, a.state_count(), true);
    StateSet target = random_subset(rng, a.state_count(), true);
    TransporterReduction red = reduce_transporter(a, from, target);
    CHECK(is_weakly_acyclic(red.automaton));
    bool via_reduction = solve_generic(red.constraint, red.automaton).has_value();
    CHECK(via_reduction == set_transporter_search(a, from, target).has_value());
    CHECK(via_reduction == oracles::transports(a, oracles::mask_of(from),
                                               oracles::mask_of(target)));
  }
}
