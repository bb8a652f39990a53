#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "wsync/alphabet.hpp"

namespace wsync {

/// Subset of the states 0..n-1 of a fixed automaton, stored as a bitset.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe)
      : n_(universe), bits_((universe + 63) / 64, 0) {}

  static StateSet all(std::size_t universe);
  static StateSet of(std::size_t universe, std::initializer_list<StateId> members);

  std::size_t universe() const { return n_; }

  bool test(StateId q) const { return (bits_[q >> 6] >> (q & 63)) & 1u; }
  void set(StateId q) { bits_[q >> 6] |= std::uint64_t(1) << (q & 63); }
  void reset(StateId q) { bits_[q >> 6] &= ~(std::uint64_t(1) << (q & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_subset_of(const StateSet& other) const;
  /// The single member, if count() == 1.
  std::optional<StateId> only() const;

  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }

  std::vector<StateId> members() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t blk = 0; blk < bits_.size(); ++blk) {
      std::uint64_t word = bits_[blk];
      while (word) {
        unsigned bit = static_cast<unsigned>(__builtin_ctzll(word));
        fn(static_cast<StateId>(blk * 64 + bit));
        word &= word - 1;
      }
    }
  }

  bool operator==(const StateSet&) const = default;

  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace wsync
