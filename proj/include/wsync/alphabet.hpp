#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wsync {

using LetterId = std::uint32_t;
using StateId = std::uint32_t;

/// Ordered set of distinct letter tokens. The construction order is canonical
/// and defines lexicographic order on words everywhere in the library.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::string& name(LetterId x) const { return letters_.at(x); }
  const std::vector<std::string>& letters() const { return letters_; }

  std::optional<LetterId> find(std::string_view letter) const;
  /// Like find(), but throws AlphabetMismatch for unknown letters.
  LetterId require(std::string_view letter) const;
  bool contains(std::string_view letter) const { return find(letter).has_value(); }

  /// True when every letter is a single character; controls word rendering.
  bool single_char() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> letters_;
};

/// A finite word over a fixed alphabet; the empty word is valid.
struct Word {
  Alphabet alphabet;
  std::vector<LetterId> letters;

  static Word epsilon(Alphabet a) { return Word{std::move(a), {}}; }
  /// Splits `text` on whitespace, or letter-by-letter if the alphabet is
  /// single-character and the text contains no spaces.
  static Word parse(const Alphabet& a, std::string_view text);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  void push_back(LetterId x) { letters.push_back(x); }
  Word& append(const Word& tail);

  /// Canonical rendering: concatenated when all letters are single
  /// characters, space-separated otherwise.
  std::string str() const;

  bool operator==(const Word&) const = default;
};

}  // namespace wsync
