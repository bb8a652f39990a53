#pragma once

#include <array>
#include <optional>
#include <string>

#include "wsync/automaton.hpp"

namespace wsync {

/// The twelve constraint languages (over {a,b,c}, up to letter renaming)
/// whose constrained synchronization problem is PSPACE-complete for general
/// input automata, plus a bucket for everything else.
enum class LanguageId {
  a_bc_star,          // a(b+c)*
  abc_ab_star,        // (a+b+c)(a+b)*
  ab_ac_star,         // (a+b)(a+c)*
  ab_star_c,          // (a+b)*c
  ab_star_c_astar,    // (a+b)*ca*
  ab_star_c_ab_star,  // (a+b)*c(a+b)*
  ab_star_cc_star,    // (a+b)*cc*
  astar_b_ac_star,    // a*b(a+c)*
  astar_bc_ab_star,   // a*(b+c)(a+b)*
  astar_b_bc_star,    // a*b(b+c)*
  ab_star_c_bc_star,  // (a+b)*c(b+c)*
  astar_bc_bc_star,   // a*(b+c)(b+c)*
  other,
};

inline constexpr std::array<LanguageId, 12> kPspaceHardLanguages = {
    LanguageId::a_bc_star,         LanguageId::abc_ab_star,     LanguageId::ab_ac_star,
    LanguageId::ab_star_c,         LanguageId::ab_star_c_astar, LanguageId::ab_star_c_ab_star,
    LanguageId::ab_star_cc_star,   LanguageId::astar_b_ac_star, LanguageId::astar_bc_ab_star,
    LanguageId::astar_b_bc_star,   LanguageId::ab_star_c_bc_star,
    LanguageId::astar_bc_bc_star,
};

enum class GeneralComplexity { p, pspace_complete };
enum class WaaComplexity { p, np_complete };

struct ConstraintLabel {
  LanguageId language = LanguageId::other;
  GeneralComplexity general = GeneralComplexity::p;
  WaaComplexity waa = WaaComplexity::p;

  bool operator==(const ConstraintLabel&) const = default;
};

/// Label a recognized language carries, independent of letter naming.
ConstraintLabel label_for(LanguageId id);

/// True for the three recognized languages whose weakly acyclic problem is
/// polynomial: (a+b)*c, (a+b)*ca*, (a+b)*cc*.
bool waa_polynomial(LanguageId id);

std::string language_name(LanguageId id);
std::optional<LanguageId> language_from_name(std::string_view name);

/// The built-in 2-state PDFA over letters a,b,c for a recognized language.
ConstraintPdfa builtin_constraint(LanguageId id);
/// Sigma* over the given alphabet (one accepting state, all loops).
ConstraintPdfa sigma_star_constraint(const Alphabet& alphabet);
/// first . middle* . last where `middle` are letter indices of `alphabet`.
ConstraintPdfa bracket_constraint(const Alphabet& alphabet, LetterId first, LetterId last,
                                  const std::vector<LetterId>& middle);

struct Classification {
  ConstraintLabel label;
  /// For matched languages over a 3-letter alphabet: role_of[x] in {0,1,2}
  /// says which canonical letter (a, b, c) the constraint's letter x plays.
  std::array<LetterId, 3> role_of{0, 1, 2};
};

/// Exact classification for constraints with at most 2 states over at most
/// 3 letters: language equality (not isomorphism) against the twelve
/// reference languages under all letter permutations. Non-matching small
/// constraints get (other, P, P). Larger constraints raise
/// UnsupportedForClassification; they remain solvable generically.
Classification classify_constraint(const ConstraintPdfa& b);

/// Language equality of two PDFAs whose alphabets have equal size; letters
/// are identified positionally. Decided by product emptiness over the
/// sink-completed automata.
bool same_language(const ConstraintPdfa& b1, const ConstraintPdfa& b2);

/// Complete deterministic automaton used by the classification machinery.
struct Dfa {
  std::size_t letter_count = 0;
  std::vector<StateId> delta;  // delta[q * letter_count + x]
  StateId initial = 0;
  std::vector<bool> accepting;

  std::size_t state_count() const { return accepting.size(); }
  bool operator==(const Dfa&) const = default;
};

/// Sink-completion of a partial automaton (adds a dead state if needed).
Dfa complete_dfa(const ConstraintPdfa& b);
/// Canonical minimal automaton: reachable trim, partition refinement, then
/// breadth-first renumbering. Two DFAs accept the same language iff their
/// minimized forms are identical.
Dfa minimize_dfa(const Dfa& dfa);

}  // namespace wsync
