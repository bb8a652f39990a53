#include "wsync/text_io.hpp"

#include <fstream>
#include <sstream>

#include "wsync/error.hpp"

namespace wsync {
namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// One header or transition entry per physical line.
struct Line {
  std::vector<Token> tokens;
};

class LineReader {
 public:
  LineReader(const std::string& text, std::string source) : source_(std::move(source)) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      Line line;
      std::size_t pos = 0;
      while (pos < raw.size()) {
        if (std::isspace(static_cast<unsigned char>(raw[pos]))) {
          ++pos;
          continue;
        }
        std::size_t start = pos;
        while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
        line.tokens.push_back({raw.substr(start, pos - start), lineno, start + 1});
      }
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
    }
  }

  const std::vector<Line>& lines() const { return lines_; }

  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    raise(ErrorCode::parse_error, source_ + ":" + std::to_string(at.line) + ":" +
                                      std::to_string(at.column) + ": " + message);
  }
  [[noreturn]] void fail_eof(const std::string& message) const {
    raise(ErrorCode::parse_error, source_ + ": " + message);
  }

 private:
  std::string source_;
  std::vector<Line> lines_;
};

struct RawAutomaton {
  Alphabet alphabet;
  std::vector<std::string> states;
  std::optional<Token> initial;
  std::optional<std::vector<Token>> accepting;
  std::vector<std::array<Token, 3>> transitions;
};

RawAutomaton scan_automaton(const LineReader& reader) {
  RawAutomaton raw;
  bool saw_alphabet = false, saw_states = false;
  for (const Line& line : reader.lines()) {
    const Token& head = line.tokens.front();
    auto rest = [&] {
      return std::vector<Token>(line.tokens.begin() + 1, line.tokens.end());
    };
    if (head.text == "alphabet:") {
      if (saw_alphabet) reader.fail(head, "duplicate alphabet line");
      saw_alphabet = true;
      std::vector<std::string> letters;
      for (const Token& tok : rest()) letters.push_back(tok.text);
      if (letters.empty()) reader.fail(head, "alphabet line lists no letters");
      raw.alphabet = Alphabet(std::move(letters));
    } else if (head.text == "states:") {
      if (saw_states) reader.fail(head, "duplicate states line");
      saw_states = true;
      for (const Token& tok : rest()) raw.states.push_back(tok.text);
      if (raw.states.empty()) reader.fail(head, "states line lists no states");
    } else if (head.text == "initial:") {
      if (raw.initial) reader.fail(head, "duplicate initial line");
      auto tokens = rest();
      if (tokens.size() != 1) reader.fail(head, "initial line needs exactly one state");
      raw.initial = tokens.front();
    } else if (head.text == "accepting:") {
      if (raw.accepting) reader.fail(head, "duplicate accepting line");
      raw.accepting = rest();
    } else {
      if (line.tokens.size() != 3)
        reader.fail(head, "expected transition '<state> <letter> <state>'");
      raw.transitions.push_back({line.tokens[0], line.tokens[1], line.tokens[2]});
    }
  }
  if (!saw_alphabet) reader.fail_eof("missing 'alphabet:' line");
  if (!saw_states) reader.fail_eof("missing 'states:' line");
  return raw;
}

StateId resolve_state(const LineReader& reader, const RawAutomaton& raw, const Token& tok) {
  for (StateId q = 0; q < raw.states.size(); ++q)
    if (raw.states[q] == tok.text) return q;
  reader.fail(tok, "unknown state '" + tok.text + "'");
}

LetterId resolve_letter(const LineReader& reader, const RawAutomaton& raw, const Token& tok) {
  if (auto x = raw.alphabet.find(tok.text)) return *x;
  reader.fail(tok, "unknown letter '" + tok.text + "'");
}

}  // namespace

SemiAutomaton parse_semi_automaton(const std::string& text, const std::string& source) {
  LineReader reader(text, source);
  RawAutomaton raw = scan_automaton(reader);
  if (raw.initial) reader.fail(*raw.initial, "semi-automaton files have no 'initial:' line");
  if (raw.accepting) reader.fail_eof("semi-automaton files have no 'accepting:' line");

  const std::size_t k = raw.alphabet.size();
  std::vector<StateId> delta(raw.states.size() * k, ConstraintPdfa::kUndefined);
  for (const auto& row : raw.transitions) {
    StateId from = resolve_state(reader, raw, row[0]);
    LetterId letter = resolve_letter(reader, raw, row[1]);
    StateId to = resolve_state(reader, raw, row[2]);
    if (delta[from * k + letter] != ConstraintPdfa::kUndefined)
      reader.fail(row[0], "duplicate transition for state '" + row[0].text + "' letter '" +
                              row[1].text + "'");
    delta[from * k + letter] = to;
  }
  for (StateId q = 0; q < raw.states.size(); ++q)
    for (LetterId x = 0; x < k; ++x)
      if (delta[q * k + x] == ConstraintPdfa::kUndefined)
        reader.fail_eof("missing transition for state '" + raw.states[q] + "' letter '" +
                        raw.alphabet.name(x) + "' (semi-automata must be complete)");
  return SemiAutomaton(std::move(raw.alphabet), std::move(raw.states), std::move(delta));
}

ConstraintPdfa parse_pdfa(const std::string& text, const std::string& source) {
  LineReader reader(text, source);
  RawAutomaton raw = scan_automaton(reader);
  if (!raw.initial) reader.fail_eof("missing 'initial:' line");
  if (!raw.accepting) reader.fail_eof("missing 'accepting:' line");

  const std::size_t k = raw.alphabet.size();
  std::vector<StateId> mu(raw.states.size() * k, ConstraintPdfa::kUndefined);
  for (const auto& row : raw.transitions) {
    StateId from = resolve_state(reader, raw, row[0]);
    LetterId letter = resolve_letter(reader, raw, row[1]);
    StateId to = resolve_state(reader, raw, row[2]);
    if (mu[from * k + letter] != ConstraintPdfa::kUndefined)
      reader.fail(row[0], "duplicate transition for state '" + row[0].text + "' letter '" +
                              row[1].text + "'");
    mu[from * k + letter] = to;
  }
  StateId initial = resolve_state(reader, raw, *raw.initial);
  StateSet accepting(raw.states.size());
  for (const Token& tok : *raw.accepting) accepting.set(resolve_state(reader, raw, tok));
  return ConstraintPdfa(std::move(raw.alphabet), std::move(raw.states), std::move(mu), initial,
                        std::move(accepting));
}

SemiAutomaton load_semi_automaton(const std::string& path) {
  return parse_semi_automaton(read_file(path), path);
}

ConstraintPdfa load_pdfa(const std::string& path) { return parse_pdfa(read_file(path), path); }

std::string print_semi_automaton(const SemiAutomaton& a) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& letter : a.alphabet().letters()) out << ' ' << letter;
  out << "\nstates:";
  for (const auto& name : a.state_names()) out << ' ' << name;
  out << '\n';
  for (StateId q = 0; q < a.state_count(); ++q)
    for (LetterId x = 0; x < a.letter_count(); ++x)
      out << a.state_name(q) << ' ' << a.alphabet().name(x) << ' ' << a.state_name(a.next(q, x))
          << '\n';
  return out.str();
}

std::string print_pdfa(const ConstraintPdfa& b) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& letter : b.alphabet().letters()) out << ' ' << letter;
  out << "\nstates:";
  for (const auto& name : b.state_names()) out << ' ' << name;
  out << "\ninitial: " << b.state_name(b.initial());
  out << "\naccepting:";
  b.accepting().for_each([&](StateId p) { out << ' ' << b.state_name(p); });
  out << '\n';
  for (StateId p = 0; p < b.state_count(); ++p)
    for (LetterId x = 0; x < b.alphabet().size(); ++x)
      if (b.defined(p, x))
        out << b.state_name(p) << ' ' << b.alphabet().name(x) << ' '
            << b.state_name(b.step(p, x)) << '\n';
  return out.str();
}

CnfFormula parse_dimacs(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  long vars = -1, clause_count = -1;
  std::vector<std::vector<Literal>> clauses;
  std::vector<Literal> current;

  auto fail = [&](const std::string& message) {
    raise(ErrorCode::parse_error, source + ":" + std::to_string(lineno) + ": " + message);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first == "c" || first[0] == 'c') continue;
    if (first == "p") {
      std::string kind;
      if (vars >= 0) fail("duplicate 'p cnf' header");
      if (!(tokens >> kind >> vars >> clause_count) || kind != "cnf" || vars <= 0 ||
          clause_count < 0)
        fail("malformed header, expected 'p cnf <vars> <clauses>'");
      continue;
    }
    if (vars < 0) fail("clause before 'p cnf' header");
    tokens.clear();
    tokens.str(line);
    long value;
    while (tokens >> value) {
      if (value == 0) {
        if (current.empty()) fail("empty clause");
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        long var = value < 0 ? -value : value;
        if (var > vars) fail("literal " + std::to_string(value) + " out of range");
        current.push_back({static_cast<std::uint32_t>(var), value > 0});
      }
    }
    if (tokens.fail() && !tokens.eof()) fail("malformed literal");
  }
  if (vars < 0) raise(ErrorCode::parse_error, source + ": missing 'p cnf' header");
  if (!current.empty())
    raise(ErrorCode::parse_error, source + ": last clause is not terminated by 0");
  if (static_cast<long>(clauses.size()) != clause_count)
    raise(ErrorCode::parse_error,
          source + ": header announces " + std::to_string(clause_count) + " clauses but " +
              std::to_string(clauses.size()) + " were given");
  return CnfFormula(static_cast<std::uint32_t>(vars), std::move(clauses));
}

CnfFormula load_dimacs(const std::string& path) { return parse_dimacs(read_file(path), path); }

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::parse_error, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) raise(ErrorCode::parse_error, "failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace wsync
