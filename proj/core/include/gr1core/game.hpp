#pragma once

#include <optional>
#include <vector>

#include "gr1core/reduction.hpp"
#include "gr1core/state_space.hpp"

namespace gr1core {

/// The two-player game induced by projected modules:
///   theta_e  initial environment choices (over the env subspace)
///   theta_s  initial full states
///   rho_e    conjunction of safety assumptions, constraining (state, env')
///   rho_s    conjunction of safety guarantees, constraining (state, state')
///   justice_env / justice_sys   states that must recur infinitely often
///
/// Transition relations are evaluated per pair on demand; when
/// states^2 fits the cache budget they are materialized up front.
class GameStructure {
 public:
  explicit GameStructure(const GameModules& modules,
                         std::uint64_t state_cap = kDefaultStateCap,
                         std::uint64_t cache_entry_cap = std::uint64_t{1}
                                                         << 24);

  const StateSpace& space() const { return space_; }
  const StateSet& theta_e() const { return theta_e_; }
  const StateSet& theta_s() const { return theta_s_; }
  const std::vector<StateSet>& justice_env() const { return justice_env_; }
  const std::vector<StateSet>& justice_sys() const { return justice_sys_; }
  const GameModules& modules() const { return modules_; }

  bool env_transition(std::uint64_t state, std::uint64_t env_succ) const;
  bool sys_transition(std::uint64_t state, std::uint64_t succ) const;

  /// Evaluates an unprimed assertion over the whole space.
  StateSet states_where(const ExprPtr& e) const;

 private:
  friend StateSet cpre(const GameStructure& g, const StateSet& target);

  GameModules modules_;
  StateSpace space_;
  StateSet theta_e_;
  StateSet theta_s_;
  std::vector<StateSet> justice_env_;
  std::vector<StateSet> justice_sys_;

  bool cached_ = false;
  std::vector<StateSet> env_succ_;  // per state, over env assignments
  std::vector<StateSet> sys_succ_;  // per state, over full states
};

/// Controllable predecessor: states from which, whatever legal environment
/// input comes next, the system has a legal response into `target`. A state
/// whose environment has no legal input at all counts as controllable
/// (environment safety deadlock loses for the environment).
StateSet cpre(const GameStructure& g, const StateSet& target);

/// Projects a set of full states down to the environment assignments that
/// occur in it.
StateSet exists_sys(const StateSpace& space, const StateSet& full);

}  // namespace gr1core
