#include "gr1core/game.hpp"

#include "gr1core/eval.hpp"

namespace gr1core {

namespace {

bool all_hold(const std::vector<TracedAssertion>& list,
              const StateSpace& space, std::span<const int> cur,
              std::span<const int> nxt = {}) {
  for (const TracedAssertion& a : list)
    if (!eval(a.expr, space, cur, nxt)) return false;
  return true;
}

}  // namespace

GameStructure::GameStructure(const GameModules& modules,
                             std::uint64_t state_cap,
                             std::uint64_t cache_entry_cap)
    : modules_(modules),
      space_(modules.vars, modules.var_ids, modules.env_var_count, state_cap) {
  const std::uint64_t n = space_.states();
  const std::uint64_t ne = space_.env_states();
  std::vector<int> cur(space_.slot_count());
  std::vector<int> nxt(space_.slot_count());

  theta_e_ = StateSet(ne);
  for (std::uint64_t x = 0; x < ne; ++x) {
    space_.decode_env(x, cur);
    if (all_hold(modules_.env.initial, space_, cur)) theta_e_.set(x);
  }

  theta_s_ = StateSet(n);
  for (std::uint64_t s = 0; s < n; ++s) {
    space_.decode(s, cur);
    if (all_hold(modules_.sys.initial, space_, cur)) theta_s_.set(s);
  }

  auto justice_sets = [&](const std::vector<TracedAssertion>& list) {
    std::vector<StateSet> sets;
    for (const TracedAssertion& a : list) {
      StateSet set(n);
      for (std::uint64_t s = 0; s < n; ++s) {
        space_.decode(s, cur);
        if (eval(a.expr, space_, cur)) set.set(s);
      }
      sets.push_back(std::move(set));
    }
    return sets;
  };
  justice_env_ = justice_sets(modules_.env.justice);
  justice_sys_ = justice_sets(modules_.sys.justice);

  if (n * n <= cache_entry_cap) {
    cached_ = true;
    env_succ_.reserve(n);
    sys_succ_.reserve(n);
    for (std::uint64_t s = 0; s < n; ++s) {
      space_.decode(s, cur);
      StateSet env_row(ne);
      for (std::uint64_t x = 0; x < ne; ++x) {
        space_.decode_env(x, nxt);
        if (all_hold(modules_.env.safety, space_, cur, nxt)) env_row.set(x);
      }
      env_succ_.push_back(std::move(env_row));
      StateSet sys_row(n);
      for (std::uint64_t t = 0; t < n; ++t) {
        space_.decode(t, nxt);
        if (all_hold(modules_.sys.safety, space_, cur, nxt)) sys_row.set(t);
      }
      sys_succ_.push_back(std::move(sys_row));
    }
  }
}

bool GameStructure::env_transition(std::uint64_t state,
                                   std::uint64_t env_succ) const {
  if (cached_) return env_succ_[state].test(env_succ);
  std::vector<int> cur(space_.slot_count());
  std::vector<int> nxt(space_.slot_count());
  space_.decode(state, cur);
  space_.decode_env(env_succ, nxt);
  return all_hold(modules_.env.safety, space_, cur, nxt);
}

bool GameStructure::sys_transition(std::uint64_t state,
                                   std::uint64_t succ) const {
  if (cached_) return sys_succ_[state].test(succ);
  std::vector<int> cur(space_.slot_count());
  std::vector<int> nxt(space_.slot_count());
  space_.decode(state, cur);
  space_.decode(succ, nxt);
  return all_hold(modules_.sys.safety, space_, cur, nxt);
}

StateSet GameStructure::states_where(const ExprPtr& e) const {
  StateSet out(space_.states());
  std::vector<int> cur(space_.slot_count());
  for (std::uint64_t s = 0; s < space_.states(); ++s) {
    space_.decode(s, cur);
    if (eval(e, space_, cur)) out.set(s);
  }
  return out;
}

StateSet cpre(const GameStructure& g, const StateSet& target) {
  const StateSpace& space = g.space();
  const std::uint64_t n = space.states();
  const std::uint64_t ne = space.env_states();
  StateSet result(n);

  std::vector<int> cur(space.slot_count());
  std::vector<int> nxt(space.slot_count());

  for (std::uint64_t s = 0; s < n; ++s) {
    // Environment inputs covered by some legal system response into target.
    StateSet covered(ne);
    if (g.cached_) {
      (g.sys_succ_[s] & target).for_each([&](std::uint64_t t) {
        covered.set(space.env_part(t));
      });
      if (g.env_succ_[s].subset_of(covered)) result.set(s);
    } else {
      space.decode(s, cur);
      for (std::uint64_t t = 0; t < n; ++t) {
        if (!target.test(t)) continue;
        space.decode(t, nxt);
        if (all_hold(g.modules_.sys.safety, space, cur, nxt))
          covered.set(space.env_part(t));
      }
      bool ok = true;
      for (std::uint64_t x = 0; x < ne && ok; ++x) {
        if (covered.test(x)) continue;
        space.decode_env(x, nxt);
        if (all_hold(g.modules_.env.safety, space, cur, nxt)) ok = false;
      }
      if (ok) result.set(s);
    }
  }
  return result;
}

StateSet exists_sys(const StateSpace& space, const StateSet& full) {
  StateSet out(space.env_states());
  full.for_each([&](std::uint64_t s) { out.set(space.env_part(s)); });
  return out;
}

}  // namespace gr1core
