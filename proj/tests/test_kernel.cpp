#include <doctest.h>

#include <random>

#include "gr1core/errors.hpp"
#include "gr1core/eval.hpp"
#include "gr1core/game.hpp"
#include "gr1core/parser.hpp"
#include "gr1core/solver.hpp"
#include "support/fixtures.hpp"
#include "support/random_spec.hpp"

using namespace gr1core;
using gr1core::testing::load_fixture;

namespace {

GameStructure game_of(const std::string& text) {
  Gr1Problem p = reduce(parse_spec(text));
  return GameStructure(project(p, p.assumption_universe, p.guarantee_universe));
}

// Direct reformulation of the controllable-predecessor definition: for
// every legal environment input there is a legal full successor with that
// input inside the target. Kept deliberately naive.
StateSet naive_cpre(const GameStructure& g, const StateSet& target) {
  const StateSpace& space = g.space();
  StateSet out(space.states());
  for (std::uint64_t s = 0; s < space.states(); ++s) {
    bool controllable = true;
    for (std::uint64_t x = 0; x < space.env_states() && controllable; ++x) {
      if (!g.env_transition(s, x)) continue;
      bool answered = false;
      for (std::uint64_t t = 0; t < space.states() && !answered; ++t)
        answered = space.env_part(t) == x && g.sys_transition(s, t) &&
                   target.test(t);
      controllable = answered;
    }
    if (controllable) out.set(s);
  }
  return out;
}

}  // namespace

TEST_CASE("eval handles constants, comparisons and primes") {
  Gr1Problem p = load_fixture("lift.spc");
  GameModules m = project(p, p.assumption_universe, p.guarantee_universe);
  StateSpace space(m.vars, m.var_ids, m.env_var_count);

  // Slots: b1, b2, b3, f.
  SpecAst helper = parse_spec(
      "env boolean b1; env boolean b2; env boolean b3; sys Int(1..3) f;"
      "gar ini f=1;");
  ExprPtr f_is_1 = helper.elements[0].expr;
  std::vector<int> state = {0, 0, 0, 1};
  CHECK(eval(f_is_1, space, state));
  state[3] = 2;
  CHECK(!eval(f_is_1, space, state));

  SpecAst helper2 = parse_spec(
      "env boolean b1; sys boolean y; gar alw next(b1) -> b1;");
  StateSpace space2({{"b1", Owner::env}, {"y", Owner::sys}}, {0, 1}, 1);
  std::vector<int> cur = {0, 0}, nxt = {1, 0};
  CHECK(!eval(helper2.elements[0].expr, space2, cur, nxt));
}

TEST_CASE("lift release assumption agrees with a truth-table oracle") {
  Gr1Problem p = load_fixture("lift.spc");
  GameModules m = project(p, p.assumption_universe, p.guarantee_universe);
  StateSpace space(m.vars, m.var_ids, m.env_var_count);
  ExprPtr release = p.env.safety[0].expr;  // b1 & f=1 -> !next(b1)

  for (int b1 = 0; b1 <= 1; ++b1)
    for (int f1 = 0; f1 <= 1; ++f1)
      for (int b1p = 0; b1p <= 1; ++b1p) {
        std::vector<int> cur = {b1, 0, 0, f1 ? 1 : 2};
        std::vector<int> nxt = {b1p, 0, 0, 1};
        bool expect = !(b1 && f1) || !b1p;
        CHECK(eval(release, space, cur, nxt) == expect);
      }

  // The frozen instance: pressed, granted, still pressed next step.
  std::vector<int> cur = {1, 0, 0, 1};
  std::vector<int> nxt = {1, 0, 0, 1};
  CHECK(!eval(release, space, cur, nxt));
}

TEST_CASE("primed expressions require a successor") {
  SpecAst helper = parse_spec("env boolean p; asm alw next(p);");
  StateSpace space({{"p", Owner::env}}, {0}, 1);
  std::vector<int> cur = {0};
  CHECK_THROWS_AS(eval(helper.elements[0].expr, space, cur), Error);
}

TEST_CASE("cpre of the full space collapses to the one-step condition") {
  GameStructure g = game_of(
      "env boolean x; sys boolean y; gar alw next(y) = next(x);");
  StateSet full(g.space().states(), true);
  CHECK(cpre(g, full) == full);
}

TEST_CASE("copy game: cpre of the diagonal is the full space") {
  GameStructure g = game_of(
      "env boolean x; sys boolean y; gar alw next(y) = next(x);");
  SpecAst helper =
      parse_spec("env boolean x; sys boolean y; gar ini y = x;");
  StateSet diagonal = g.states_where(helper.elements[0].expr);
  CHECK(diagonal.count() == 2);
  StateSet result = cpre(g, diagonal);
  CHECK(result == StateSet(4, true));
}

TEST_CASE("mismatch game: cpre of the diagonal is empty") {
  GameStructure g = game_of(
      "env boolean x; sys boolean y; gar alw next(y) != next(x);");
  SpecAst helper =
      parse_spec("env boolean x; sys boolean y; gar ini y = x;");
  StateSet diagonal = g.states_where(helper.elements[0].expr);
  StateSet result = cpre(g, diagonal);
  CHECK(result.none());
}

TEST_CASE("environment safety deadlock counts as controllable") {
  // No environment input ever satisfies the assumption.
  GameStructure g = game_of(
      "env boolean x; sys boolean y; asm alw next(x) & !next(x);");
  StateSet empty(g.space().states());
  CHECK(cpre(g, empty) == StateSet(g.space().states(), true));
}

TEST_CASE("cpre is monotone and matches the naive oracle on random games") {
  std::mt19937 rng(1234);
  for (int round = 0; round < 60; ++round) {
    SpecAst spec = testing::random_spec(rng);
    Gr1Problem p = reduce(spec);
    GameStructure g(project(p, p.assumption_universe, p.guarantee_universe));
    const std::uint64_t n = g.space().states();

    StateSet small(n), large(n);
    for (std::uint64_t s = 0; s < n; ++s) {
      if (rng() % 2) {
        large.set(s);
        if (rng() % 2) small.set(s);
      }
    }
    StateSet cpre_small = cpre(g, small);
    StateSet cpre_large = cpre(g, large);
    CHECK(cpre_small.subset_of(cpre_large));
    CHECK(cpre_small == naive_cpre(g, small));
    CHECK(cpre_large == naive_cpre(g, large));
  }
}

TEST_CASE("state space cap is enforced") {
  std::vector<VarDecl> vars;
  std::vector<VarId> ids;
  for (int i = 0; i < 30; ++i) {
    VarDecl v;
    v.name = "v" + std::to_string(i);
    v.owner = i == 0 ? Owner::env : Owner::sys;
    vars.push_back(v);
    ids.push_back(i);
  }
  CHECK_THROWS_AS(StateSpace(vars, ids, 1), StateSpaceCapError);
}

TEST_CASE("state index encoding round-trips") {
  Gr1Problem p = load_fixture("lift.spc");
  GameModules m = project(p, p.assumption_universe, p.guarantee_universe);
  StateSpace space(m.vars, m.var_ids, m.env_var_count);
  CHECK(space.states() == 24);
  CHECK(space.env_states() == 8);
  std::vector<int> values(space.slot_count());
  for (std::uint64_t s = 0; s < space.states(); ++s) {
    space.decode(s, values);
    CHECK(space.encode(values) == s);
    CHECK(space.env_part(s) < space.env_states());
  }
}
