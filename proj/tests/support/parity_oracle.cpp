#include "support/parity_oracle.hpp"

#include <cassert>
#include <cstdint>
#include <vector>

namespace gr1core::testing {

namespace {

// Explicit parity game. Player 0 is the system; a player unable to move
// loses, which the construction guarantees never happens (deadlocked nodes
// get an edge to the sink that loses for their owner).
struct ParityGame {
  std::vector<int> owner;     // 0 = system, 1 = environment
  std::vector<int> priority;  // 0, 1, 2
  std::vector<std::vector<int>> succ;

  int add_node(int own, int prio) {
    owner.push_back(own);
    priority.push_back(prio);
    succ.emplace_back();
    return static_cast<int>(owner.size()) - 1;
  }
};

// Nodes owned by `player` that can force reaching `target` inside `alive`.
std::vector<char> attractor(const ParityGame& game,
                            const std::vector<char>& alive, int player,
                            const std::vector<char>& target) {
  const std::size_t n = game.owner.size();
  std::vector<char> in(n, 0);
  std::vector<int> out_degree(n, 0);
  std::vector<std::vector<int>> pred(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (int w : game.succ[v]) {
      if (!alive[w]) continue;
      ++out_degree[v];
      pred[w].push_back(static_cast<int>(v));
    }
  }
  std::vector<int> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v] && target[v]) {
      in[v] = 1;
      queue.push_back(static_cast<int>(v));
    }
  }
  while (!queue.empty()) {
    int w = queue.back();
    queue.pop_back();
    for (int v : pred[w]) {
      if (in[v]) continue;
      if (game.owner[v] == player) {
        in[v] = 1;
        queue.push_back(v);
      } else if (--out_degree[v] == 0) {
        in[v] = 1;
        queue.push_back(v);
      }
    }
  }
  return in;
}

std::size_t count_alive(const std::vector<char>& alive) {
  std::size_t n = 0;
  for (char c : alive) n += c != 0;
  return n;
}

// Zielonka's recursive algorithm; fills win0/win1 for nodes in `alive`.
void zielonka(const ParityGame& game, std::vector<char> alive,
              std::vector<char>& win0, std::vector<char>& win1) {
  if (count_alive(alive) == 0) return;
  const std::size_t n = game.owner.size();

  int top = -1;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) top = std::max(top, game.priority[v]);
  const int sigma = top % 2;

  std::vector<char> peak(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && game.priority[v] == top) peak[v] = 1;

  std::vector<char> a = attractor(game, alive, sigma, peak);
  std::vector<char> rest = alive;
  for (std::size_t v = 0; v < n; ++v)
    if (a[v]) rest[v] = 0;

  std::vector<char> sub0(n, 0), sub1(n, 0);
  zielonka(game, rest, sub0, sub1);

  const std::vector<char>& opponent_sub = sigma == 0 ? sub1 : sub0;
  bool opponent_empty = true;
  for (std::size_t v = 0; v < n; ++v)
    if (opponent_sub[v]) {
      opponent_empty = false;
      break;
    }

  if (opponent_empty) {
    std::vector<char>& mine = sigma == 0 ? win0 : win1;
    for (std::size_t v = 0; v < n; ++v)
      if (alive[v]) mine[v] = 1;
    return;
  }

  std::vector<char> b = attractor(game, alive, 1 - sigma, opponent_sub);
  std::vector<char> rest2 = alive;
  for (std::size_t v = 0; v < n; ++v)
    if (b[v]) rest2[v] = 0;
  std::vector<char> sub0b(n, 0), sub1b(n, 0);
  zielonka(game, rest2, sub0b, sub1b);

  std::vector<char>& opp_win = sigma == 0 ? win1 : win0;
  std::vector<char>& my_win = sigma == 0 ? win0 : win1;
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (b[v] || (sigma == 0 ? sub1b[v] : sub0b[v]))
      opp_win[v] = 1;
    else if (sigma == 0 ? sub0b[v] : sub1b[v])
      my_win[v] = 1;
  }
}

}  // namespace

StateSet winning_region_oracle(const GameStructure& g) {
  const StateSpace& space = g.space();
  const std::uint64_t n = space.states();
  const std::uint64_t ne = space.env_states();
  const StateSet full(n, true);

  std::vector<StateSet> jsys = g.justice_sys();
  if (jsys.empty()) jsys.push_back(full);
  std::vector<StateSet> jenv = g.justice_env();
  if (jenv.empty()) jenv.push_back(full);
  const int m = static_cast<int>(jsys.size());
  const int k = static_cast<int>(jenv.size());

  ParityGame game;
  // Env-to-move nodes carry the priority event of their arrival:
  // 2 when the system-justice counter wrapped, else 1 when the
  // environment-justice counter wrapped, else 0.
  auto env_node = [&](std::uint64_t s, int c, int d, int f) {
    return static_cast<int>(((s * m + c) * k + d) * 3 + f);
  };
  auto sys_node_base = static_cast<std::uint64_t>(n) * m * k * 3;
  auto sys_node = [&](std::uint64_t s, std::uint64_t x, int c, int d) {
    return static_cast<int>(sys_node_base +
                            ((s * ne + x) * m + c) * k + d);
  };

  for (std::uint64_t s = 0; s < n; ++s)
    for (int c = 0; c < m; ++c)
      for (int d = 0; d < k; ++d)
        for (int f = 0; f < 3; ++f) {
          int id = game.add_node(1, f);
          assert(id == env_node(s, c, d, f));
          (void)id;
        }
  for (std::uint64_t s = 0; s < n; ++s)
    for (std::uint64_t x = 0; x < ne; ++x)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < k; ++d) {
          int id = game.add_node(0, 0);
          assert(id == sys_node(s, x, c, d));
          (void)id;
        }
  // Sinks: a deadlocked player keeps losing there forever.
  const int sink_env_loses = game.add_node(1, 0);
  game.succ[sink_env_loses].push_back(sink_env_loses);
  const int sink_sys_loses = game.add_node(0, 1);
  game.succ[sink_sys_loses].push_back(sink_sys_loses);

  for (std::uint64_t s = 0; s < n; ++s) {
    for (int c = 0; c < m; ++c)
      for (int d = 0; d < k; ++d) {
        for (int f = 0; f < 3; ++f) {
          int v = env_node(s, c, d, f);
          for (std::uint64_t x = 0; x < ne; ++x)
            if (g.env_transition(s, x))
              game.succ[v].push_back(sys_node(s, x, c, d));
          if (game.succ[v].empty())
            game.succ[v].push_back(sink_env_loses);
        }
        for (std::uint64_t x = 0; x < ne; ++x) {
          int v = sys_node(s, x, c, d);
          for (std::uint64_t t = 0; t < n; ++t) {
            if (space.env_part(t) != x) continue;
            if (!g.sys_transition(s, t)) continue;
            int c2 = c, d2 = d;
            bool sys_wrap = false, env_wrap = false;
            if (jsys[c].test(t)) {
              sys_wrap = c == m - 1;
              c2 = (c + 1) % m;
            }
            if (jenv[d].test(t)) {
              env_wrap = d == k - 1;
              d2 = (d + 1) % k;
            }
            int f2 = sys_wrap ? 2 : env_wrap ? 1 : 0;
            game.succ[v].push_back(env_node(t, c2, d2, f2));
          }
          if (game.succ[v].empty())
            game.succ[v].push_back(sink_sys_loses);
        }
      }
  }

  std::vector<char> alive(game.owner.size(), 1);
  std::vector<char> win0(game.owner.size(), 0), win1(game.owner.size(), 0);
  zielonka(game, std::move(alive), win0, win1);

  StateSet result(n);
  for (std::uint64_t s = 0; s < n; ++s)
    if (win0[env_node(s, 0, 0, 0)]) result.set(s);
  return result;
}

}  // namespace gr1core::testing
