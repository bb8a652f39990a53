#include "wsync/hardness.hpp"

#include <algorithm>

#include "wsync/constrained.hpp"
#include "wsync/error.hpp"
#include "wsync/waa.hpp"

namespace wsync {
namespace {

constexpr LetterId kRoleA = 0, kRoleB = 1, kRoleC = 2;

struct CaseShape {
  std::uint32_t first_column;  // 1 for case1, 0 otherwise
  LetterId marker;             // base role whose first occurrence starts the strand part
  LetterId true_letter;        // base role encoding x = 1
  LetterId false_letter;       // base role encoding x = 0
  std::vector<LetterId> reset_prefix;  // base roles read before the strand part
};

CaseShape shape_of(ReductionBase base) {
  switch (base) {
    case ReductionBase::case1:
      return {1, kRoleA, kRoleC, kRoleB, {kRoleA}};
    case ReductionBase::case4:
      return {0, kRoleC, kRoleB, kRoleA, {kRoleC}};
    case ReductionBase::case7:
      return {0, kRoleB, kRoleB, kRoleC, {kRoleA, kRoleB}};
    case ReductionBase::case8:
      // With a self-looping on columns 0 and 1, the marker c must be
      // preceded by b (flush column 1 forward) and a (kill columns >= 2).
      return {0, kRoleC, kRoleB, kRoleC, {kRoleB, kRoleA, kRoleC}};
  }
  raise(ErrorCode::invalid_argument, "unknown reduction base");
}

const ReductionCase kCases[9] = {
    {LanguageId::a_bc_star, ReductionBase::case1, {0, 1, 2}},
    {LanguageId::abc_ab_star, ReductionBase::case1, {2, 1, 0}},  // a and c swapped
    {LanguageId::ab_ac_star, ReductionBase::case1, {1, 0, 2}},   // a and b swapped
    {LanguageId::ab_star_c_ab_star, ReductionBase::case4, {0, 1, 2}},
    {LanguageId::astar_b_ac_star, ReductionBase::case4, {0, 2, 1}},  // b and c swapped
    {LanguageId::astar_bc_ab_star, ReductionBase::case4, {0, 1, 2}},
    {LanguageId::astar_b_bc_star, ReductionBase::case7, {0, 1, 2}},
    {LanguageId::ab_star_c_bc_star, ReductionBase::case8, {0, 1, 2}},
    {LanguageId::astar_bc_bc_star, ReductionBase::case1, {0, 1, 2}},
};

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
  auto in_use = [&](const std::string& name) {
    return std::find(taken.begin(), taken.end(), name) != taken.end();
  };
  if (!in_use(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!in_use(candidate)) return candidate;
  }
}

}  // namespace

CnfFormula::CnfFormula(std::uint32_t num_vars, std::vector<std::vector<Literal>> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ == 0) raise(ErrorCode::invalid_argument, "formula needs at least one variable");
  for (auto& clause : clauses_) {
    if (clause.empty()) raise(ErrorCode::invalid_argument, "empty clause");
    std::sort(clause.begin(), clause.end(), [](const Literal& l, const Literal& r) {
      return l.var != r.var ? l.var < r.var : l.positive < r.positive;
    });
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    for (std::size_t i = 0; i < clause.size(); ++i) {
      if (clause[i].var == 0 || clause[i].var > num_vars_)
        raise(ErrorCode::invalid_argument,
              "variable x" + std::to_string(clause[i].var) + " out of range");
      if (i > 0 && clause[i].var == clause[i - 1].var)
        raise(ErrorCode::degenerate_formula,
              "clause contains x" + std::to_string(clause[i].var) + " with both polarities");
    }
  }
}

int CnfFormula::polarity(std::size_t clause, std::uint32_t var) const {
  for (const Literal& lit : clauses_.at(clause))
    if (lit.var == var) return lit.positive ? 1 : -1;
  return 0;
}

bool CnfFormula::satisfied_by(const Assignment& assignment) const {
  if (assignment.size() != num_vars_)
    raise(ErrorCode::invalid_argument, "assignment size does not match variable count");
  for (const auto& clause : clauses_) {
    bool satisfied = false;
    for (const Literal& lit : clause)
      if (assignment[lit.var - 1] == lit.positive) {
        satisfied = true;
        break;
      }
    if (!satisfied) return false;
  }
  return true;
}

ReductionCase reduction_case_for(LanguageId target) {
  for (const auto& rc : kCases)
    if (rc.target == target) return rc;
  raise(ErrorCode::invalid_argument,
        "no SAT reduction for '" + language_name(target) + "' (not one of the nine NP-hard languages)");
}

const std::array<LanguageId, 9>& np_hard_languages() {
  static const std::array<LanguageId, 9> ids = [] {
    std::array<LanguageId, 9> out{};
    for (std::size_t i = 0; i < 9; ++i) out[i] = kCases[i].target;
    return out;
  }();
  return ids;
}

SatReduction reduce_sat(const CnfFormula& phi, const ReductionCase& rc) {
  const std::uint32_t n = phi.num_vars();
  const std::uint32_t m = static_cast<std::uint32_t>(phi.clause_count());
  const CaseShape shape = shape_of(rc.base);
  const std::uint32_t width = n + 2 - shape.first_column;  // columns first..n+1
  const std::uint32_t total = m * width + 1;
  const StateId sink = total - 1;

  auto state = [&](std::uint32_t i, std::uint32_t j) {  // i in 1..m, j column index
    return static_cast<StateId>((i - 1) * width + (j - shape.first_column));
  };

  std::vector<std::string> names(total);
  for (std::uint32_t i = 1; i <= m; ++i)
    for (std::uint32_t j = shape.first_column; j <= n + 1; ++j)
      names[state(i, j)] = "q" + std::to_string(i) + "_" + std::to_string(j);
  names[sink] = "qf";

  std::vector<StateId> delta(total * 3);
  auto set = [&](StateId q, LetterId role, StateId target) {
    delta[q * 3 + rc.letter_of_role[role]] = target;
  };
  for (LetterId role = 0; role < 3; ++role) set(sink, role, sink);

  // Strand rows: a letter either advances the strand or escapes to the sink
  // at positions whose literal it satisfies.
  auto strand_row = [&](std::uint32_t i, std::uint32_t j, LetterId role, bool kills_positive) {
    int pol = phi.polarity(i - 1, j);
    bool kills = kills_positive ? pol > 0 : pol < 0;
    set(state(i, j), role, kills ? sink : state(i, j + 1));
  };

  for (std::uint32_t i = 1; i <= m; ++i) {
    switch (rc.base) {
      case ReductionBase::case1:
        set(state(i, 1), kRoleA, state(i, 1));
        for (std::uint32_t j = 2; j <= n + 1; ++j) set(state(i, j), kRoleA, sink);
        for (std::uint32_t j = 1; j <= n; ++j) {
          strand_row(i, j, kRoleB, false);  // b escapes where the clause has !x_j
          strand_row(i, j, kRoleC, true);   // c escapes where the clause has x_j
        }
        set(state(i, n + 1), kRoleB, state(i, n + 1));
        set(state(i, n + 1), kRoleC, state(i, n + 1));
        break;
      case ReductionBase::case4:
        set(state(i, 0), kRoleA, state(i, 0));
        set(state(i, 0), kRoleB, state(i, 0));
        set(state(i, 0), kRoleC, state(i, 1));
        set(state(i, 1), kRoleC, state(i, 1));
        for (std::uint32_t j = 2; j <= n + 1; ++j) set(state(i, j), kRoleC, sink);
        for (std::uint32_t j = 1; j <= n; ++j) {
          strand_row(i, j, kRoleA, false);
          strand_row(i, j, kRoleB, true);
        }
        set(state(i, n + 1), kRoleA, state(i, n + 1));
        set(state(i, n + 1), kRoleB, state(i, n + 1));
        break;
      case ReductionBase::case7:
        set(state(i, 0), kRoleA, state(i, 0));
        for (std::uint32_t j = 1; j <= n + 1; ++j) set(state(i, j), kRoleA, sink);
        set(state(i, 0), kRoleB, state(i, 1));
        set(state(i, 0), kRoleC, state(i, 0));
        for (std::uint32_t j = 1; j <= n; ++j) {
          strand_row(i, j, kRoleB, true);
          strand_row(i, j, kRoleC, false);
        }
        set(state(i, n + 1), kRoleB, state(i, n + 1));
        set(state(i, n + 1), kRoleC, state(i, n + 1));
        break;
      case ReductionBase::case8:
        set(state(i, 0), kRoleA, state(i, 0));
        set(state(i, 1), kRoleA, state(i, 1));
        for (std::uint32_t j = 2; j <= n + 1; ++j) set(state(i, j), kRoleA, sink);
        set(state(i, 0), kRoleB, state(i, 0));
        set(state(i, 0), kRoleC, state(i, 1));
        for (std::uint32_t j = 1; j <= n; ++j) {
          strand_row(i, j, kRoleB, true);
          strand_row(i, j, kRoleC, false);
        }
        set(state(i, n + 1), kRoleB, state(i, n + 1));
        set(state(i, n + 1), kRoleC, state(i, n + 1));
        break;
    }
  }

  SemiAutomaton automaton(Alphabet({"a", "b", "c"}), std::move(names), std::move(delta));
  if (!is_weakly_acyclic(automaton))
    raise(ErrorCode::invalid_argument, "internal: SAT reduction broke weak acyclicity");
  for (StateId q = 0; q < automaton.state_count(); ++q)
    if (is_sink(automaton, q) != (q == sink))
      raise(ErrorCode::invalid_argument, "internal: SAT reduction sink is not unique");
  return {std::move(automaton), builtin_constraint(rc.target)};
}

Word assignment_to_word(const CnfFormula& phi, const ReductionCase& rc,
                        const Assignment& assignment) {
  if (!phi.satisfied_by(assignment))
    raise(ErrorCode::not_satisfying, "assignment does not satisfy the formula");
  const CaseShape shape = shape_of(rc.base);

  Word w{Alphabet({"a", "b", "c"}), {}};
  for (LetterId role : shape.reset_prefix) w.push_back(rc.letter_of_role[role]);
  for (std::uint32_t j = 0; j < phi.num_vars(); ++j)
    w.push_back(rc.letter_of_role[assignment[j] ? shape.true_letter : shape.false_letter]);

  SatReduction reduction = reduce_sat(phi, rc);
  if (!verify_witness(reduction.constraint, reduction.automaton, w))
    raise(ErrorCode::invalid_witness, "internal: encoded witness failed verification");
  return w;
}

Assignment word_to_assignment(const CnfFormula& phi, const ReductionCase& rc, const Word& w) {
  SatReduction reduction = reduce_sat(phi, rc);
  if (!verify_witness(reduction.constraint, reduction.automaton, w))
    raise(ErrorCode::invalid_witness,
          "word is not a synchronizing witness inside the constraint language");

  const CaseShape shape = shape_of(rc.base);
  std::array<LetterId, 3> role_of{};  // inverse of letter_of_role
  for (LetterId role = 0; role < 3; ++role) role_of[rc.letter_of_role[role]] = role;

  // In the case-7/8 gadgets the marker letter recurs as a strand letter, so
  // the strand part starts after its first occurrence; in the case-1/4
  // gadgets it appears only in the reset phase, which may repeat it.
  const bool marker_recurs =
      rc.base == ReductionBase::case7 || rc.base == ReductionBase::case8;
  std::size_t marker = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (role_of[w.letters[i]] != shape.marker) continue;
    marker = i;
    if (marker_recurs) break;
  }
  if (marker == w.size())
    raise(ErrorCode::invalid_witness, "witness has no reset marker");

  Assignment assignment(phi.num_vars(), false);
  for (std::uint32_t j = 0; j < phi.num_vars(); ++j) {
    std::size_t pos = marker + 1 + j;
    if (pos >= w.size()) break;  // remaining variables stay false
    LetterId role = role_of[w.letters[pos]];
    if (role == shape.true_letter)
      assignment[j] = true;
    else if (role == shape.false_letter)
      assignment[j] = false;
    else
      raise(ErrorCode::invalid_witness, "unexpected letter in the strand part of the witness");
  }
  if (!phi.satisfied_by(assignment))
    raise(ErrorCode::invalid_witness, "internal: decoded assignment does not satisfy the formula");
  return assignment;
}

TransporterReduction reduce_transporter(const SemiAutomaton& a, const StateSet& from,
                                        const StateSet& target) {
  if (from.universe() != a.state_count() || target.universe() != a.state_count())
    raise(ErrorCode::invalid_argument, "state set universe does not match automaton");
  if (from.empty() || target.empty())
    raise(ErrorCode::empty_input,
          "SetTransporter reduction needs nonempty sets; empty cases are trivial");

  const std::size_t n = a.state_count();
  const std::size_t k = a.letter_count();
  std::vector<std::string> letters = a.alphabet().letters();
  const std::string alpha_name = fresh_name(letters, "__alpha");
  letters.push_back(alpha_name);
  const std::string beta_name = fresh_name(letters, "__beta");
  letters.push_back(beta_name);
  const LetterId alpha = static_cast<LetterId>(k);
  const LetterId beta = static_cast<LetterId>(k + 1);

  std::vector<std::string> names = a.state_names();
  names.push_back(fresh_name(names, "__sink"));
  const StateId sink = static_cast<StateId>(n);

  std::vector<StateId> delta((n + 1) * (k + 2));
  for (StateId q = 0; q < n; ++q) {
    for (LetterId x = 0; x < k; ++x) delta[q * (k + 2) + x] = a.next(q, x);
    delta[q * (k + 2) + alpha] = from.test(q) ? q : sink;
    delta[q * (k + 2) + beta] = target.test(q) ? sink : q;
  }
  for (LetterId x = 0; x < k + 2; ++x) delta[sink * (k + 2) + x] = sink;

  SemiAutomaton reduced(Alphabet(letters), std::move(names), std::move(delta));
  std::vector<LetterId> middle(k);
  for (LetterId x = 0; x < k; ++x) middle[x] = x;
  ConstraintPdfa constraint = bracket_constraint(reduced.alphabet(), alpha, beta, middle);
  return {std::move(reduced), std::move(constraint)};
}

}  // namespace wsync
