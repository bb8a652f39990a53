#include "wsync/cli.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsync/constrained.hpp"
#include "wsync/error.hpp"
#include "wsync/random_gen.hpp"
#include "wsync/text_io.hpp"

namespace wsync {
namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const char* name_of(GeneralComplexity c) {
  return c == GeneralComplexity::p ? "P" : "PSPACE-complete";
}
const char* name_of(WaaComplexity c) {
  return c == WaaComplexity::p ? "P" : "NP-complete";
}

ordered_json label_json(const std::optional<ConstraintLabel>& label) {
  if (!label) return nullptr;
  ordered_json j;
  j["language"] = language_name(label->language);
  j["general"] = name_of(label->general);
  j["waa"] = name_of(label->waa);
  return j;
}

std::string label_line(const ConstraintLabel& label) {
  std::ostringstream out;
  out << language_name(label.language) << " [general: " << name_of(label.general)
      << ", waa: " << name_of(label.waa) << "]";
  return out.str();
}

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  bool show_witness = false;
  bool show_stats = false;
};

struct Decision {
  bool yes = false;
  std::optional<Word> witness;
  std::string method;
  std::optional<ConstraintLabel> label;
  std::uint64_t states_explored = 0;
  std::int64_t elapsed_ms = 0;
};

int emit_decision(Output& io, const Decision& d) {
  if (io.json) {
    ordered_json j;
    j["schema"] = 1;
    j["decision"] = d.yes ? "yes" : "no";
    j["witness"] = d.witness ? ordered_json(d.witness->str()) : ordered_json(nullptr);
    j["witness_length"] =
        d.witness ? ordered_json(d.witness->size()) : ordered_json(nullptr);
    j["method"] = d.method;
    j["label"] = label_json(d.label);
    if (io.show_stats) {
      j["stats"]["states_explored"] = d.states_explored;
      j["stats"]["elapsed_ms"] = d.elapsed_ms;
    }
    io.out << j.dump() << '\n';
  } else {
    io.out << (d.yes ? "yes" : "no") << '\n';
    if (io.show_witness && d.witness)
      io.out << "witness: " << (d.witness->empty() ? "(empty word)" : d.witness->str()) << '\n';
    if (!d.method.empty()) io.out << "method: " << d.method << '\n';
    if (d.label) io.out << "label: " << label_line(*d.label) << '\n';
    if (io.show_stats)
      io.out << "states explored: " << d.states_explored << "\nelapsed: " << d.elapsed_ms
             << " ms\n";
  }
  return d.yes ? 0 : 1;
}

/// --constraint accepts the twelve language names, "sigma-star",
/// "a-sigma-star-b", or a PDFA file path.
ConstraintPdfa resolve_constraint(const std::string& source, const Alphabet* input_alphabet) {
  if (auto id = language_from_name(source)) return builtin_constraint(*id);
  static const Alphabet fallback({"a", "b", "c"});
  const Alphabet& sigma = input_alphabet ? *input_alphabet : fallback;
  if (source == "sigma-star") return sigma_star_constraint(sigma);
  if (source == "a-sigma-star-b") {
    auto alpha = sigma.find("__alpha");
    auto beta = sigma.find("__beta");
    if (!alpha) alpha = sigma.find("a");
    if (!beta) beta = sigma.find("b");
    if (!alpha || !beta || *alpha == *beta)
      raise(ErrorCode::alphabet_mismatch,
            "a-sigma-star-b needs letters __alpha/__beta (or a/b) in the input alphabet");
    std::vector<LetterId> middle;
    for (LetterId x = 0; x < sigma.size(); ++x)
      if (x != *alpha && x != *beta) middle.push_back(x);
    return bracket_constraint(sigma, *alpha, *beta, middle);
  }
  return load_pdfa(source);
}

StateSet parse_state_list(const SemiAutomaton& a, const std::string& csv) {
  StateSet set(a.state_count());
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    std::string name = csv.substr(pos, comma - pos);
    if (name.empty()) raise(ErrorCode::invalid_argument, "empty state name in list");
    set.set(a.require_state(name));
    pos = comma + 1;
  }
  return set;
}

void reverify(const SemiAutomaton& a, const StateSet& from, const StateSet& target,
              const std::optional<Word>& witness, bool singleton) {
  if (!witness) return;
  StateSet img = image(a, from, *witness);
  bool ok = singleton ? img.count() == 1 : img.is_subset_of(target);
  if (!ok) raise(ErrorCode::invalid_witness, "internal: witness failed re-verification");
}

// ---- selftest ------------------------------------------------------------
// Small independent oracles over bitmask subsets; desk-scale only.

std::uint32_t mask_image(const SemiAutomaton& a, std::uint32_t mask, LetterId x) {
  std::uint32_t out = 0;
  for (StateId q = 0; q < a.state_count(); ++q)
    if (mask & (1u << q)) out |= 1u << a.next(q, x);
  return out;
}

bool oracle_reaches(const SemiAutomaton& a, std::uint32_t start,
                    const std::function<bool(std::uint32_t)>& goal) {
  if (goal(start)) return true;
  std::vector<bool> seen(std::size_t(1) << a.state_count(), false);
  std::vector<std::uint32_t> queue{start};
  seen[start] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (LetterId x = 0; x < a.letter_count(); ++x) {
      std::uint32_t next = mask_image(a, queue[head], x);
      if (seen[next]) continue;
      if (goal(next)) return true;
      seen[next] = true;
      queue.push_back(next);
    }
  return false;
}

bool oracle_synchronizing(const SemiAutomaton& a) {
  std::uint32_t all = (a.state_count() == 32) ? ~0u : (1u << a.state_count()) - 1;
  return oracle_reaches(a, all, [](std::uint32_t m) { return (m & (m - 1)) == 0; });
}

std::uint32_t to_mask(const StateSet& s) {
  std::uint32_t mask = 0;
  s.for_each([&](StateId q) { mask |= 1u << q; });
  return mask;
}

bool oracle_sat(const CnfFormula& phi) {
  for (std::uint32_t bits = 0; bits < (1u << phi.num_vars()); ++bits) {
    Assignment assignment(phi.num_vars());
    for (std::uint32_t j = 0; j < phi.num_vars(); ++j) assignment[j] = (bits >> j) & 1;
    if (phi.satisfied_by(assignment)) return true;
  }
  return false;
}

CnfFormula random_formula(Rng& rng, std::uint32_t max_vars, std::uint32_t max_clauses) {
  std::uniform_int_distribution<std::uint32_t> nd(1, max_vars), md(1, max_clauses);
  std::uint32_t n = nd(rng), m = md(rng);
  std::vector<std::vector<Literal>> clauses(m);
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<std::uint32_t> vd(1, n);
  for (auto& clause : clauses) {
    std::uint32_t size = std::uniform_int_distribution<std::uint32_t>(1, n)(rng);
    for (std::uint32_t i = 0; i < size; ++i) {
      std::uint32_t var = vd(rng);
      bool positive = coin(rng);
      bool clashes = false;
      for (const auto& lit : clause) clashes |= lit.var == var && lit.positive != positive;
      if (!clashes) clause.push_back({var, positive});
    }
    if (clause.empty()) clause.push_back({vd(rng), coin(rng)});
  }
  return CnfFormula(n, std::move(clauses));
}

int run_selftest(std::uint64_t seed, Output& io) {
  Rng rng(seed);
  auto fail = [&](const std::string& what) {
    io.err << "FAIL: " << what << '\n';
    return 1;
  };

  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<std::size_t> nd(1, 7), kd(1, 3);
    SemiAutomaton a = random_waa(rng, nd(rng), kd(rng));
    auto cert = require_waa(a);
    StateSet sinks(a.state_count());
    for (StateId q = 0; q < a.state_count(); ++q)
      if (is_sink(a, q)) sinks.set(q);
    if (!(maximal_states(a, cert) == sinks)) return fail("maximal_states != sink set");
    if (synchronizing_state(a, cert).has_value() != oracle_synchronizing(a))
      return fail("synchronizing_state disagrees with the subset-BFS oracle");
    auto word = build_synchronizing_word(a, cert);
    if (word && image(a, a.all_states(), *word).count() != 1)
      return fail("built synchronizing word does not synchronize");
  }
  io.out << "ok: sinks are the maximal states; linear sync check (200 automata)\n";

  for (int round = 0; round < 100; ++round) {
    std::uniform_int_distribution<std::size_t> nd(1, 7), kd(1, 3);
    SemiAutomaton a = random_waa(rng, nd(rng), kd(rng));
    auto cert = require_waa(a);
    StateSet target = random_subset(rng, a.state_count(), false);
    std::uint32_t tmask = to_mask(target);
    std::uint32_t all = (1u << a.state_count()) - 1;
    bool expected =
        oracle_reaches(a, all, [&](std::uint32_t m) { return (m & ~tmask) == 0; });
    auto witness = sync_into_subset(a, cert, a.all_states(), target);
    if (witness.has_value() != expected)
      return fail("sync_into_subset disagrees with the subset-BFS oracle");
    if (witness && !image(a, a.all_states(), *witness).is_subset_of(target))
      return fail("sync_into_subset witness leaves the target");
  }
  io.out << "ok: into-subset criterion against subset-BFS oracle (100 instances)\n";

  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<std::size_t> nd(1, 7);
    SemiAutomaton a = random_waa(rng, nd(rng), 3);
    for (LanguageId id : {LanguageId::ab_star_c, LanguageId::ab_star_c_astar,
                          LanguageId::ab_star_cc_star}) {
      ConstraintPdfa b = builtin_constraint(id);
      SolveReport routed = dispatch_solve(b, a);
      bool generic = solve_generic(b, a).has_value();
      if (routed.decision != generic)
        return fail("polynomial solver disagrees with solve_generic on " + language_name(id));
    }
  }
  io.out << "ok: polynomial special cases against the generic solver (60 automata)\n";

  for (int round = 0; round < 40; ++round) {
    CnfFormula phi = random_formula(rng, 3, 3);
    bool satisfiable = oracle_sat(phi);
    for (LanguageId id : np_hard_languages()) {
      SatReduction reduction = reduce_sat(phi, reduction_case_for(id));
      bool yes = dispatch_solve(reduction.constraint, reduction.automaton).decision;
      if (yes != satisfiable)
        return fail("SAT reduction decision mismatch for " + language_name(id));
    }
  }
  io.out << "ok: SAT reductions sound and complete (40 formulas x 9 languages)\n";

  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<std::size_t> nd(2, 6), kd(1, 3);
    SemiAutomaton a = random_waa(rng, nd(rng), kd(rng));
    StateSet from = random_subset(rng, a.state_count(), true);
    StateSet target = random_subset(rng, a.state_count(), true);
    TransporterReduction reduction = reduce_transporter(a, from, target);
    bool reduced = solve_generic(reduction.constraint, reduction.automaton).has_value();
    bool direct = set_transporter_search(a, from, target).has_value();
    if (reduced != direct) return fail("transporter reduction decision mismatch");
  }
  io.out << "ok: SetTransporter reduction against direct search (60 instances)\n";

  for (LanguageId id : kPspaceHardLanguages) {
    Classification c = classify_constraint(builtin_constraint(id));
    if (c.label != label_for(id)) return fail("classifier missed " + language_name(id));
  }
  io.out << "ok: classifier reproduces the 12-language table\n";

  io.out << "selftest passed (seed " << seed << ")\n";
  return 0;
}

// ---- subcommands ----------------------------------------------------------

int cmd_check_waa(const std::string& path, Output& io) {
  SemiAutomaton a = load_semi_automaton(path);
  WaaCheck check = check_weakly_acyclic(a);
  if (auto* cert = std::get_if<WaaCertificate>(&check)) {
    if (io.json) {
      ordered_json j;
      j["schema"] = 1;
      j["decision"] = "yes";
      ordered_json order = ordered_json::array();
      for (StateId q : cert->order) order.push_back(a.state_name(q));
      j["order"] = order;
      j["cycle"] = nullptr;
      io.out << j.dump() << '\n';
    } else {
      io.out << "weakly acyclic\norder:";
      for (StateId q : cert->order) io.out << ' ' << a.state_name(q);
      io.out << '\n';
    }
    return 0;
  }
  const auto& cycle = std::get<NotWaa>(check).cycle;
  if (io.json) {
    ordered_json j;
    j["schema"] = 1;
    j["decision"] = "no";
    j["order"] = nullptr;
    ordered_json names = ordered_json::array();
    for (StateId q : cycle) names.push_back(a.state_name(q));
    j["cycle"] = names;
    io.out << j.dump() << '\n';
  } else {
    io.out << "not weakly acyclic\ncycle:";
    for (StateId q : cycle) io.out << ' ' << a.state_name(q);
    io.out << " -> " << a.state_name(cycle.front()) << '\n';
  }
  return 1;
}

int cmd_sync(const std::string& path, Output& io) {
  SemiAutomaton a = load_semi_automaton(path);
  WaaCertificate cert = require_waa(a);
  Decision d;
  auto start = Clock::now();
  d.witness = build_synchronizing_word(a, cert);
  d.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  d.yes = d.witness.has_value();
  d.method = "waa/sink-bfs";
  reverify(a, a.all_states(), StateSet(a.state_count()), d.witness, /*singleton=*/true);
  if (!d.yes) d.witness.reset();
  return emit_decision(io, d);
}

int cmd_constr_sync(const std::string& path, const std::string& constraint_arg,
                    std::size_t max_states, Output& io) {
  SemiAutomaton a = load_semi_automaton(path);
  ConstraintPdfa b = resolve_constraint(constraint_arg, &a.alphabet());
  Decision d;
  auto start = Clock::now();
  SolveReport report = dispatch_solve(b, a, SearchLimits{max_states});
  d.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  d.yes = report.decision;
  d.witness = report.witness;
  d.method = report.method;
  d.label = report.label;
  d.states_explored = report.states_explored;
  if (d.witness && !verify_witness(b, a, *d.witness))
    raise(ErrorCode::invalid_witness, "internal: witness failed re-verification");
  return emit_decision(io, d);
}

int cmd_into_subset(const std::string& path, const std::string& set_csv,
                    const std::string& target_csv, Output& io) {
  SemiAutomaton a = load_semi_automaton(path);
  WaaCertificate cert = require_waa(a);
  StateSet from = set_csv.empty() ? a.all_states() : parse_state_list(a, set_csv);
  StateSet target = parse_state_list(a, target_csv);
  Decision d;
  d.witness = sync_into_subset(a, cert, from, target);
  d.yes = d.witness.has_value();
  d.method = "subset/reachable-sinks";
  reverify(a, from, target, d.witness, /*singleton=*/false);
  return emit_decision(io, d);
}

int cmd_from_subset(const std::string& path, const std::string& set_csv, std::size_t max_states,
                    Output& io) {
  SemiAutomaton a = load_semi_automaton(path);
  StateSet from = parse_state_list(a, set_csv);
  Decision d;
  d.witness = sync_from_subset_search(a, from, SearchLimits{max_states});
  d.yes = d.witness.has_value();
  d.method = "subset/bfs";
  reverify(a, from, StateSet(a.state_count()), d.witness, /*singleton=*/true);
  return emit_decision(io, d);
}

int cmd_transport(const std::string& path, const std::string& set_csv,
                  const std::string& target_csv, std::size_t max_states, Output& io) {
  SemiAutomaton a = load_semi_automaton(path);
  StateSet from = parse_state_list(a, set_csv);
  StateSet target = parse_state_list(a, target_csv);
  Decision d;
  if (a.letter_count() == 1 && is_weakly_acyclic(a)) {
    WaaCertificate cert = require_waa(a);
    d.witness = set_transporter_unary_waa(a, cert, from, target);
    d.method = "subset/unary-stabilize";
  } else {
    d.witness = set_transporter_search(a, from, target, SearchLimits{max_states});
    d.method = "subset/bfs";
  }
  d.yes = d.witness.has_value();
  reverify(a, from, target, d.witness, /*singleton=*/false);
  return emit_decision(io, d);
}

int cmd_reduce_sat(const std::string& cnf_path, const std::string& case_name,
                   const std::string& out_path, const std::string& constraint_path, Output& io) {
  auto id = language_from_name(case_name);
  if (!id)
    raise(ErrorCode::invalid_argument,
          "unknown constraint language '" + case_name + "' for --case");
  CnfFormula phi = load_dimacs(cnf_path);
  SatReduction reduction = reduce_sat(phi, reduction_case_for(*id));
  write_file(out_path, print_semi_automaton(reduction.automaton));
  if (!constraint_path.empty()) write_file(constraint_path, print_pdfa(reduction.constraint));
  if (io.json) {
    ordered_json j;
    j["schema"] = 1;
    j["automaton"] = out_path;
    j["constraint"] = case_name;
    j["states"] = reduction.automaton.state_count();
    io.out << j.dump() << '\n';
  } else {
    io.out << "wrote " << out_path << " (" << reduction.automaton.state_count()
           << " states); solve with --constraint \"" << case_name << "\"\n";
  }
  return 0;
}

int cmd_reduce_transport(const std::string& path, const std::string& set_csv,
                         const std::string& target_csv, const std::string& out_path,
                         const std::string& constraint_path, Output& io) {
  SemiAutomaton a = load_semi_automaton(path);
  StateSet from = parse_state_list(a, set_csv);
  StateSet target = parse_state_list(a, target_csv);
  TransporterReduction reduction = reduce_transporter(a, from, target);
  write_file(out_path, print_semi_automaton(reduction.automaton));
  if (!constraint_path.empty()) write_file(constraint_path, print_pdfa(reduction.constraint));
  if (io.json) {
    ordered_json j;
    j["schema"] = 1;
    j["automaton"] = out_path;
    j["constraint"] = constraint_path.empty() ? ordered_json(nullptr) : ordered_json(constraint_path);
    j["states"] = reduction.automaton.state_count();
    io.out << j.dump() << '\n';
  } else {
    io.out << "wrote " << out_path << " (" << reduction.automaton.state_count() << " states)";
    if (!constraint_path.empty()) io.out << " and " << constraint_path;
    io.out << "; constraint language is __alpha Sigma* __beta (name: a-sigma-star-b)\n";
  }
  return 0;
}

int cmd_classify(const std::string& constraint_arg, Output& io) {
  ConstraintPdfa b = resolve_constraint(constraint_arg, nullptr);
  std::optional<ConstraintLabel> label;
  try {
    label = classify_constraint(b).label;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::unsupported_for_classification) throw;
  }
  if (io.json) {
    ordered_json j;
    j["schema"] = 1;
    if (label) {
      j["language"] = language_name(label->language);
      j["general"] = name_of(label->general);
      j["waa"] = name_of(label->waa);
    } else {
      j["language"] = nullptr;
      j["general"] = "unknown";
      j["waa"] = "unknown";
    }
    io.out << j.dump() << '\n';
  } else if (label) {
    io.out << "label: " << label_line(*label) << '\n';
  } else {
    io.out << "label: unknown (classification covers constraints with at most 2 states over at "
              "most 3 letters)\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchronizing-word toolkit for weakly acyclic automata"};
  app.require_subcommand(1);

  Output io{out, err};
  std::string aut_path, cnf_path, constraint_arg, set_csv, target_csv, out_path, emit_constraint,
      case_name;
  std::size_t max_states = 20;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd, bool witness = true) {
    cmd->add_flag("--json", io.json, "machine-readable result record on stdout");
    if (witness) cmd->add_flag("--witness", io.show_witness, "print the witness word");
    cmd->add_flag("--stats", io.show_stats, "include search statistics and timings");
  };

  auto* check = app.add_subcommand("check-waa", "test weak acyclicity, print order or cycle");
  check->add_option("automaton", aut_path, "semi-automaton file")->required();
  add_common(check, false);

  auto* sync = app.add_subcommand("sync", "synchronizing word for a weakly acyclic automaton");
  sync->add_option("automaton", aut_path)->required();
  add_common(sync);

  auto* constr = app.add_subcommand("constr-sync", "synchronizing word inside a constraint language");
  constr->add_option("automaton", aut_path)->required();
  constr->add_option("--constraint", constraint_arg, "language name or PDFA file")->required();
  constr->add_option("--max-states", max_states, "guard for the exponential product search");
  add_common(constr);

  auto* into = app.add_subcommand("into-subset", "word driving all states into a target set");
  into->add_option("automaton", aut_path)->required();
  into->add_option("--target", target_csv, "comma-separated state names")->required();
  into->add_option("--set", set_csv, "source set (default: all states)");
  add_common(into);

  auto* from = app.add_subcommand("from-subset", "word merging a subset to one state");
  from->add_option("automaton", aut_path)->required();
  from->add_option("--set", set_csv, "comma-separated state names")->required();
  from->add_option("--max-states", max_states);
  add_common(from);

  auto* transport = app.add_subcommand("transport", "word mapping one subset into another");
  transport->add_option("automaton", aut_path)->required();
  transport->add_option("--set", set_csv)->required();
  transport->add_option("--target", target_csv)->required();
  transport->add_option("--max-states", max_states);
  add_common(transport);

  auto* rsat = app.add_subcommand("reduce-sat", "SAT to constrained-synchronization instance");
  rsat->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  rsat->add_option("--case", case_name, "target constraint language")->required();
  rsat->add_option("-o,--output", out_path, "automaton output file")->required();
  rsat->add_option("--emit-constraint", emit_constraint, "also write the constraint PDFA");
  add_common(rsat, false);

  auto* rtrans = app.add_subcommand("reduce-transport",
                                    "SetTransporter to constrained-synchronization instance");
  rtrans->add_option("automaton", aut_path)->required();
  rtrans->add_option("--set", set_csv)->required();
  rtrans->add_option("--target", target_csv)->required();
  rtrans->add_option("-o,--output", out_path)->required();
  rtrans->add_option("--emit-constraint", emit_constraint, "write the constraint PDFA");
  add_common(rtrans, false);

  auto* classify = app.add_subcommand("classify", "complexity label of a constraint");
  classify->add_option("--constraint", constraint_arg)->required();
  add_common(classify, false);

  auto* selftest = app.add_subcommand("selftest", "run the built-in oracle battery");
  selftest->add_option("--seed", seed, "random seed (default 1)");

  std::vector<const char*> argv{"wsync"};
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check_waa(aut_path, io);
    if (sync->parsed()) return cmd_sync(aut_path, io);
    if (constr->parsed()) return cmd_constr_sync(aut_path, constraint_arg, max_states, io);
    if (into->parsed()) return cmd_into_subset(aut_path, set_csv, target_csv, io);
    if (from->parsed()) return cmd_from_subset(aut_path, set_csv, max_states, io);
    if (transport->parsed()) return cmd_transport(aut_path, set_csv, target_csv, max_states, io);
    if (rsat->parsed()) return cmd_reduce_sat(cnf_path, case_name, out_path, emit_constraint, io);
    if (rtrans->parsed())
      return cmd_reduce_transport(aut_path, set_csv, target_csv, out_path, emit_constraint, io);
    if (classify->parsed()) return cmd_classify(constraint_arg, io);
    if (selftest->parsed()) return run_selftest(seed, io);
  } catch (const Error& e) {
    err << "error (" << error_code_name(e.code()) << "): " << e.what() << '\n';
    if (e.code() == ErrorCode::instance_too_large)
      err << "hint: pass --max-states to lift the guard\n";
    return 2;
  }
  return 2;
}

}  // namespace wsync
