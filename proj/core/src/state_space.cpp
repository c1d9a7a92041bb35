#include "gr1core/state_space.hpp"

#include <bit>
#include <string>

#include "gr1core/errors.hpp"

namespace gr1core {

StateSet::StateSet(std::uint64_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  trim();
}

void StateSet::trim() {
  if (size_ % 64 && !words_.empty())
    words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

std::uint64_t StateSet::count() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

bool StateSet::any() const {
  for (std::uint64_t w : words_)
    if (w) return true;
  return false;
}

StateSet& StateSet::operator&=(const StateSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

StateSet& StateSet::operator|=(const StateSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

StateSet& StateSet::operator-=(const StateSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

StateSet StateSet::complement() const {
  StateSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

bool StateSet::subset_of(const StateSet& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

StateSpace::StateSpace(std::vector<VarDecl> vars, std::vector<VarId> var_ids,
                       int env_var_count, std::uint64_t cap)
    : vars_(std::move(vars)), env_slots_(env_var_count) {
  VarId max_id = -1;
  for (VarId id : var_ids) max_id = std::max(max_id, id);
  slot_of_.assign(static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t slot = 0; slot < var_ids.size(); ++slot)
    slot_of_[var_ids[slot]] = static_cast<int>(slot);

  for (int slot = 0; slot < static_cast<int>(vars_.size()); ++slot) {
    std::uint64_t radix = static_cast<std::uint64_t>(vars_[slot].domain_size());
    if (states_ > cap / radix + 1 || states_ * radix > cap) {
      throw StateSpaceCapError("state space exceeds cap of " +
                               std::to_string(cap) + " states");
    }
    states_ *= radix;
    if (slot < env_slots_)
      env_states_ *= radix;
    else
      sys_states_ *= radix;
  }
}

void StateSpace::decode(std::uint64_t index, std::span<int> out) const {
  for (std::size_t slot = 0; slot < vars_.size(); ++slot) {
    const VarDecl& v = vars_[slot];
    std::uint64_t radix = static_cast<std::uint64_t>(v.domain_size());
    int digit = static_cast<int>(index % radix);
    index /= radix;
    out[slot] = v.is_bool ? digit : v.lo + digit;
  }
}

std::uint64_t StateSpace::encode(std::span<const int> values) const {
  std::uint64_t index = 0;
  std::uint64_t mult = 1;
  for (std::size_t slot = 0; slot < vars_.size(); ++slot) {
    const VarDecl& v = vars_[slot];
    int digit = v.is_bool ? values[slot] : values[slot] - v.lo;
    index += mult * static_cast<std::uint64_t>(digit);
    mult *= static_cast<std::uint64_t>(v.domain_size());
  }
  return index;
}

void StateSpace::decode_env(std::uint64_t env_index, std::span<int> out) const {
  for (int slot = 0; slot < env_slots_; ++slot) {
    const VarDecl& v = vars_[slot];
    std::uint64_t radix = static_cast<std::uint64_t>(v.domain_size());
    int digit = static_cast<int>(env_index % radix);
    env_index /= radix;
    out[slot] = v.is_bool ? digit : v.lo + digit;
  }
}

}  // namespace gr1core
