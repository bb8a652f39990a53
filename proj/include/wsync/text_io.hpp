#pragma once

#include <iosfwd>
#include <string>

#include "wsync/automaton.hpp"
#include "wsync/hardness.hpp"

namespace wsync {

/// Text format shared by semi-automata and constraint PDFAs:
///
///   # comment until end of line
///   alphabet: a b c
///   states: q0 q1 q2
///   initial: q0          (PDFA only)
///   accepting: q2        (PDFA only, may list nothing)
///   q0 a q1              (one transition per line)
///
/// Semi-automaton files must define every (state, letter) pair exactly once;
/// PDFA files may omit pairs. Parse errors carry file:line:column.
SemiAutomaton parse_semi_automaton(const std::string& text, const std::string& source = "<input>");
ConstraintPdfa parse_pdfa(const std::string& text, const std::string& source = "<input>");

SemiAutomaton load_semi_automaton(const std::string& path);
ConstraintPdfa load_pdfa(const std::string& path);

std::string print_semi_automaton(const SemiAutomaton& a);
std::string print_pdfa(const ConstraintPdfa& b);

/// DIMACS-CNF subset: optional `c` comment lines, a `p cnf <vars> <clauses>`
/// header, then clauses as integer lists terminated by 0.
CnfFormula parse_dimacs(const std::string& text, const std::string& source = "<input>");
CnfFormula load_dimacs(const std::string& path);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace wsync
