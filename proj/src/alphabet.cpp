#include "wsync/alphabet.hpp"

#include <sstream>
#include <unordered_set>

#include "wsync/error.hpp"

namespace wsync {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::alphabet_mismatch: return "AlphabetMismatch";
    case ErrorCode::empty_alphabet: return "EmptyAlphabet";
    case ErrorCode::waa_required: return "WaaRequired";
    case ErrorCode::precondition_violated: return "PreconditionViolated";
    case ErrorCode::empty_input: return "EmptyInput";
    case ErrorCode::instance_too_large: return "InstanceTooLarge";
    case ErrorCode::degenerate_formula: return "DegenerateFormula";
    case ErrorCode::not_satisfying: return "NotSatisfying";
    case ErrorCode::invalid_witness: return "InvalidWitness";
    case ErrorCode::unsupported_for_classification: return "UnsupportedForClassification";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) raise(ErrorCode::empty_alphabet, "alphabet must contain at least one letter");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : letters_) {
    if (l.empty()) raise(ErrorCode::invalid_argument, "empty letter token");
    if (!seen.insert(l).second)
      raise(ErrorCode::invalid_argument, "duplicate letter '" + l + "' in alphabet");
  }
}

std::optional<LetterId> Alphabet::find(std::string_view letter) const {
  for (LetterId i = 0; i < letters_.size(); ++i)
    if (letters_[i] == letter) return i;
  return std::nullopt;
}

LetterId Alphabet::require(std::string_view letter) const {
  if (auto id = find(letter)) return *id;
  raise(ErrorCode::alphabet_mismatch, "letter '" + std::string(letter) + "' not in alphabet");
}

bool Alphabet::single_char() const {
  for (const auto& l : letters_)
    if (l.size() != 1) return false;
  return true;
}

Word Word::parse(const Alphabet& a, std::string_view text) {
  Word w{a, {}};
  if (text.find_first_of(" \t") == std::string_view::npos && a.single_char()) {
    for (char c : text) w.letters.push_back(a.require(std::string_view(&c, 1)));
    return w;
  }
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) w.letters.push_back(a.require(tok));
  return w;
}

Word& Word::append(const Word& tail) {
  if (!(tail.alphabet == alphabet))
    raise(ErrorCode::alphabet_mismatch, "concatenating words over different alphabets");
  letters.insert(letters.end(), tail.letters.begin(), tail.letters.end());
  return *this;
}

std::string Word::str() const {
  std::string out;
  const bool compact = alphabet.single_char();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet.name(letters[i]);
  }
  return out;
}

}  // namespace wsync
