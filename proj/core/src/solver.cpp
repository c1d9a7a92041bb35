#include "gr1core/solver.hpp"

namespace gr1core {

StateSet winning_region(const GameStructure& g) {
  const std::uint64_t n = g.space().states();
  const StateSet full(n, true);

  std::vector<StateSet> justice_sys = g.justice_sys();
  if (justice_sys.empty()) justice_sys.push_back(full);
  std::vector<StateSet> justice_env = g.justice_env();
  if (justice_env.empty()) justice_env.push_back(full);

  StateSet z = full;
  while (true) {
    StateSet z_next(n, true);
    const StateSet cpre_z = cpre(g, z);
    for (const StateSet& js : justice_sys) {
      const StateSet reach_goal = js & cpre_z;
      StateSet y(n);
      while (true) {
        const StateSet base = reach_goal | cpre(g, y);
        StateSet y_next = base;
        for (const StateSet& je : justice_env) {
          const StateSet avoid = je.complement();
          StateSet x = full;
          while (true) {
            StateSet x_next = base | (avoid & cpre(g, x));
            if (x_next == x) break;
            x = std::move(x_next);
          }
          y_next |= x;
        }
        if (y_next == y) break;
        y = std::move(y_next);
      }
      z_next &= y;
    }
    if (z_next == z) break;
    z = std::move(z_next);
  }
  return z;
}

bool sys_win(const StateSet& theta_e, const StateSet& theta_s,
             const StateSet& w, const StateSpace& space) {
  const StateSet reachable = exists_sys(space, theta_s & w);
  return theta_e.subset_of(reachable);
}

bool is_realizable(const Gr1Problem& problem, const ElementSet& asm_ids,
                   const ElementSet& gar_ids) {
  GameStructure game(project(problem, asm_ids, gar_ids));
  const StateSet w = winning_region(game);
  return sys_win(game.theta_e(), game.theta_s(), w, game.space());
}

}  // namespace gr1core
