#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "wsync/classify.hpp"

namespace wsync {

struct Literal {
  std::uint32_t var;  // 1-based
  bool positive;

  bool operator==(const Literal&) const = default;
};

using Assignment = std::vector<bool>;  // assignment[j] is the value of x_{j+1}

/// CNF formula with 1-based variables. Clauses are literal sets: duplicates
/// are dropped, a clause containing both x and !x is rejected as degenerate
/// (the reduction gadgets assume one polarity per strand position).
class CnfFormula {
 public:
  CnfFormula(std::uint32_t num_vars, std::vector<std::vector<Literal>> clauses);

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t clause_count() const { return clauses_.size(); }
  const std::vector<std::vector<Literal>>& clauses() const { return clauses_; }

  /// +1 if x_var occurs positively in clause i, -1 negatively, 0 not at all.
  int polarity(std::size_t clause, std::uint32_t var) const;
  bool satisfied_by(const Assignment& assignment) const;

 private:
  std::uint32_t num_vars_;
  std::vector<std::vector<Literal>> clauses_;
};

/// The four gadget families behind the nine reductions. Each builds one
/// strand of states per clause whose positions encode the variables, plus a
/// sink; they differ in how the reset/marker letters clear the strands.
enum class ReductionBase { case1, case4, case7, case8 };

struct ReductionCase {
  LanguageId target;
  ReductionBase base;
  /// letter_of_role[r] = output letter carrying base role r (0=a, 1=b, 2=c).
  std::array<LetterId, 3> letter_of_role;
};

/// The reduction recipe for one of the nine NP-hard constraint languages.
ReductionCase reduction_case_for(LanguageId target);
const std::array<LanguageId, 9>& np_hard_languages();

struct SatReduction {
  SemiAutomaton automaton;
  ConstraintPdfa constraint;
};

/// Builds the weakly acyclic instance for the target language: the input
/// formula is satisfiable iff the instance has a synchronizing word in the
/// constraint language. The output always has the sink as its unique
/// maximal state.
SatReduction reduce_sat(const CnfFormula& phi, const ReductionCase& rc);

/// The canonical synchronizing witness encoding a satisfying assignment
/// (reset prefix, then one strand letter per variable). NotSatisfying if the
/// assignment does not satisfy the formula.
Word assignment_to_word(const CnfFormula& phi, const ReductionCase& rc,
                        const Assignment& assignment);

/// Inverse translation: reads the strand letters after the reset marker of a
/// synchronizing in-language word; variables beyond the strand prefix
/// default to false. InvalidWitness if w is not accepted or not
/// synchronizing.
Assignment word_to_assignment(const CnfFormula& phi, const ReductionCase& rc, const Word& w);

struct TransporterReduction {
  SemiAutomaton automaton;
  ConstraintPdfa constraint;
};

/// SetTransporter -> constrained synchronization: adds a fresh sink plus
/// fresh letters alpha (fixes `from`, kills the rest) and beta (kills
/// `target`), with constraint alpha Sigma* beta over the original alphabet.
/// delta(from, w) subset-of target in A iff the reduced instance has a
/// synchronizing word, and weak acyclicity is preserved. Both sets must be
/// nonempty (the trivial cases are decided before reducing).
TransporterReduction reduce_transporter(const SemiAutomaton& a, const StateSet& from,
                                        const StateSet& target);

}  // namespace wsync
