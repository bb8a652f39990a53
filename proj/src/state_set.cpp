#include "wsync/state_set.hpp"

#include "wsync/error.hpp"

namespace wsync {

StateSet StateSet::all(std::size_t universe) {
  StateSet s(universe);
  if (universe == 0) return s;
  for (auto& blk : s.bits_) blk = ~std::uint64_t(0);
  const unsigned spare = universe & 63;
  if (spare) s.bits_.back() = (std::uint64_t(1) << spare) - 1;
  return s;
}

StateSet StateSet::of(std::size_t universe, std::initializer_list<StateId> members) {
  StateSet s(universe);
  for (StateId q : members) {
    if (q >= universe) raise(ErrorCode::invalid_argument, "state index out of range");
    s.set(q);
  }
  return s;
}

std::size_t StateSet::count() const {
  std::size_t c = 0;
  for (auto blk : bits_) c += static_cast<std::size_t>(__builtin_popcountll(blk));
  return c;
}

bool StateSet::empty() const {
  for (auto blk : bits_)
    if (blk) return false;
  return true;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

std::optional<StateId> StateSet::only() const {
  std::optional<StateId> found;
  for (std::size_t blk = 0; blk < bits_.size(); ++blk) {
    std::uint64_t word = bits_[blk];
    if (!word) continue;
    if (found || (word & (word - 1))) return std::nullopt;
    found = static_cast<StateId>(blk * 64 + __builtin_ctzll(word));
  }
  return found;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
  return *this;
}

std::vector<StateId> StateSet::members() const {
  std::vector<StateId> out;
  out.reserve(count());
  for_each([&](StateId q) { out.push_back(q); });
  return out;
}

std::size_t StateSet::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto blk : bits_) {
    h ^= blk;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h ^ n_);
}

}  // namespace wsync
