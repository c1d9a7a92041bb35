#include "gr1core/quickcore.hpp"

#include <map>

#include "gr1core/errors.hpp"
#include "gr1core/game.hpp"
#include "gr1core/solver.hpp"

namespace gr1core {

namespace {

struct AssumptionRestore {
  RealizabilityContext& ctx;
  ElementSet saved;
  explicit AssumptionRestore(RealizabilityContext& c)
      : ctx(c), saved(c.assumption_ids) {}
  ~AssumptionRestore() { ctx.assumption_ids = std::move(saved); }
};

bool is_justice_kind(const ElementInfo& info) {
  // A pattern ID bundles initial, safety and justice assertions; its
  // removable payload includes a justice, so it is staged with the justices.
  return info.kind == ElementKind::alw_ev || info.kind == ElementKind::pattern;
}

}  // namespace

ElementSet quickcore_with_base(const Gr1Problem& problem,
                               const ElementSet& base, const ElementSet& a,
                               Criterion& check, RealizabilityContext& ctx) {
  if (!base.intersect(a).empty())
    throw PreconditionError("quickcore: base and A overlap");
  if (!check.check(base.unioned(a)))
    throw PreconditionError("quickcore: base ∪ A is realizable");

  ElementSet a_ini, a_safety, a_justice;
  for (ElementId id : a) {
    const ElementInfo& info = problem.elements[id];
    if (is_justice_kind(info))
      a_justice.insert(id);
    else if (info.kind == ElementKind::alw)
      a_safety.insert(id);
    else
      a_ini.insert(id);
  }

  AssumptionRestore restore(ctx);
  const ElementSet universe = base.unioned(a);
  const ElementSet without_justices = base.unioned(a_ini).unioned(a_safety);

  // Stage 1: justice guarantees. If the specification is realizable without
  // them, at least one is required and the set is minimized with the rest
  // as base. Otherwise none is needed, and once the kept IDs project to a
  // system module with no justice assertions, all justice assumptions can
  // be removed: they only appear in the winning condition, which is then a
  // tautology, so every remaining check and winning region is unchanged.
  ElementSet j_core;
  if (!check.check(without_justices)) {
    j_core = min_with_base(MinAlg::ddmin, universe, without_justices,
                           a_justice, check);
  } else {
    GameModules kept_modules =
        project(problem, ctx.assumption_ids, without_justices);
    if (kept_modules.sys.justice.empty()) {
      ElementSet trimmed;
      for (ElementId id : ctx.assumption_ids) {
        if (!is_justice_kind(problem.elements[id])) trimmed.insert(id);
      }
      ctx.assumption_ids = std::move(trimmed);
    }
  }

  // Stage 2: safety guarantees.
  ElementSet t_core =
      min_with_base(MinAlg::ddmin, universe,
                    base.unioned(a_ini).unioned(j_core), a_safety, check);

  // Stage 3: initial guarantees. The winning region depends only on
  // safeties and justices, which are now fixed, so it is computed once and
  // each candidate is decided by a constant number of set operations.
  ElementSet kept = base.unioned(a_ini).unioned(t_core).unioned(j_core);
  GameModules modules = project(problem, ctx.assumption_ids, kept);
  GameStructure game(modules);
  const StateSet w = winning_region(game);

  std::vector<std::pair<ElementId, StateSet>> initial_sets;
  initial_sets.reserve(modules.sys.initial.size());
  for (const TracedAssertion& asrt : modules.sys.initial)
    initial_sets.emplace_back(asrt.origin, game.states_where(asrt.expr));

  auto theta_for = [&](const ElementSet& selected) {
    StateSet theta(game.space().states(), true);
    for (const auto& [origin, set] : initial_sets)
      if (selected.contains(origin)) theta &= set;
    return theta;
  };

  ElementSet i_core = a_ini;
  for (ElementId id : a_ini) {
    ElementSet trial = i_core.minus(id);
    StateSet theta =
        theta_for(base.unioned(trial).unioned(t_core).unioned(j_core));
    // The guarantee stays iff the system wins without it: removing it
    // would make the specification realizable. Otherwise it is redundant.
    if (!sys_win(game.theta_e(), theta, w, game.space())) i_core = trial;
  }

  return i_core.unioned(t_core).unioned(j_core);
}

CoreResult quickcore(const Gr1Problem& problem,
                     const QuickCoreOptions& options) {
  auto ctx = std::make_shared<RealizabilityContext>();
  ctx->problem = &problem;
  ctx->assumption_ids = problem.assumption_universe;
  Criterion check = make_unrealizability_criterion(ctx);
  if (options.use_memo) check = memoize(check);

  if (!check.check(problem.guarantee_universe))
    throw RealizableInputError(
        "specification is realizable; there is no unrealizable core");

  ElementSet core = quickcore_with_base(problem, {}, problem.guarantee_universe,
                                        check, *ctx);
  return CoreResult{std::move(core), check.stats()};
}

}  // namespace gr1core
