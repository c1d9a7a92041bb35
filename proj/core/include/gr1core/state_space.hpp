#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gr1core/ast.hpp"

namespace gr1core {

/// Bit-vector over state indices of some enumerated space. Plain data:
/// freely copyable and transferable between threads.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::uint64_t size, bool value = false);

  std::uint64_t size() const { return size_; }

  bool test(std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::uint64_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::uint64_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  StateSet& operator&=(const StateSet& o);
  StateSet& operator|=(const StateSet& o);
  StateSet& operator-=(const StateSet& o);
  /// Complement with respect to the full space.
  StateSet complement() const;

  bool subset_of(const StateSet& o) const;

  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  friend bool operator==(const StateSet&, const StateSet&) = default;

  /// Calls fn(index) for every set bit, ascending.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
        fn(static_cast<std::uint64_t>(w) * 64 + b);
        bits &= bits - 1;
      }
    }
  }

 private:
  void trim();

  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline constexpr std::uint64_t kDefaultStateCap = std::uint64_t{1} << 22;

/// Enumerated product of variable domains. The index encoding is
/// mixed-radix over the slot order with environment variables in the least
/// significant positions, so a full-state index splits as
/// `env_index + env_states() * sys_index`.
class StateSpace {
 public:
  StateSpace(std::vector<VarDecl> vars, std::vector<VarId> var_ids,
             int env_var_count, std::uint64_t cap = kDefaultStateCap);

  std::uint64_t states() const { return states_; }
  std::uint64_t env_states() const { return env_states_; }
  std::uint64_t sys_states() const { return sys_states_; }

  int slot_count() const { return static_cast<int>(vars_.size()); }
  int env_slot_count() const { return env_slots_; }
  const VarDecl& var(int slot) const { return vars_[slot]; }

  /// Slot of a problem-level variable ID; -1 when the variable was dropped.
  int slot_of(VarId id) const {
    return id < static_cast<VarId>(slot_of_.size()) ? slot_of_[id] : -1;
  }

  /// Decodes a full-state index into per-slot values (actual domain values,
  /// not digits).
  void decode(std::uint64_t index, std::span<int> out) const;
  std::uint64_t encode(std::span<const int> values) const;

  std::uint64_t env_part(std::uint64_t index) const {
    return index % env_states_;
  }

  /// Decodes an env-assignment index into the env slots of `out`.
  void decode_env(std::uint64_t env_index, std::span<int> out) const;

 private:
  std::vector<VarDecl> vars_;
  std::vector<int> slot_of_;
  int env_slots_ = 0;
  std::uint64_t states_ = 1;
  std::uint64_t env_states_ = 1;
  std::uint64_t sys_states_ = 1;
};

}  // namespace gr1core
