#include "gr1core/punch.hpp"

#include <set>

#include "gr1core/errors.hpp"

namespace gr1core {

namespace {

using Clock = std::chrono::steady_clock;

struct PunchEngine {
  Criterion& check;
  const ComputeCoreFn& compute_core;
  const PunchOptions& options;
  Clock::time_point deadline;
  bool expired = false;

  std::vector<ElementSet> found = {};    // discovery order
  std::set<ElementSet> found_keys = {};  // dedup
  std::uint64_t core_computations = 0;

  bool out_of_time() {
    if (!expired && Clock::now() >= deadline) expired = true;
    return expired;
  }

  ElementSet core_of(const ElementSet& e, const ElementSet& k) {
    if (options.reuse_known_cores) {
      for (const ElementSet& c : found)
        if (c.subset_of(e)) return c;
    }
    ++core_computations;
    return compute_core(e, k);
  }

  void record(const ElementSet& core) {
    if (found_keys.insert(core).second) found.push_back(core);
  }

  // Returns the split of the first core's fresh elements into elements
  // common to every core of `e` (the negative ones).
  void run(const ElementSet& e, const ElementSet& k, ElementSet* top_ci) {
    if (options.on_enter) options.on_enter(e, k);
    if (out_of_time()) return;

    ElementSet first = core_of(e, k);
    record(first);

    ElementSet in_all_cores;  // CI
    std::vector<ElementId> survivors;
    for (ElementId x : first.minus(k)) {
      if (out_of_time()) return;
      if (check.check(e.minus(x)))
        survivors.push_back(x);
      else
        in_all_cores.insert(x);
    }
    if (top_ci) *top_ci = in_all_cores;

    const ElementSet deeper_known = k.unioned(in_all_cores);
    for (ElementId x : survivors) {
      if (out_of_time()) return;
      run(e.minus(x), deeper_known, nullptr);
    }
  }
};

ElementSet intersection_of(const std::vector<ElementSet>& cores) {
  if (cores.empty()) return {};
  ElementSet acc = cores.front();
  for (std::size_t i = 1; i < cores.size(); ++i)
    acc = acc.intersect(cores[i]);
  return acc;
}

AllCoresResult run_punch(const ElementSet& universe, const ElementSet& known,
                         Criterion& check, const ComputeCoreFn& compute_core,
                         const PunchOptions& options) {
  const auto start = Clock::now();
  const CheckStats before = check.stats();

  if (!check.check(universe))
    throw PreconditionError("punch: criterion fails on the universe");

  PunchEngine engine{.check = check,
                     .compute_core = compute_core,
                     .options = options,
                     .deadline = start + options.timeout};
  ElementSet top_ci;
  engine.run(universe, known, &top_ci);

  AllCoresResult result;
  result.cores = std::move(engine.found);
  result.complete = !engine.expired;
  // On a complete run the top-level split already is the intersection of
  // all cores; a partial run falls back to intersecting what was found.
  result.intersection =
      result.complete ? top_ci : intersection_of(result.cores);
  const CheckStats after = check.stats();
  result.stats.actual_checks = after.actual_checks - before.actual_checks;
  result.stats.memo_hits = after.memo_hits - before.memo_hits;
  result.stats.core_computations = engine.core_computations;
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

struct RealizabilitySetup {
  std::shared_ptr<RealizabilityContext> ctx;
  Criterion check;
};

RealizabilitySetup make_setup(const Gr1Problem& problem, bool use_memo) {
  auto ctx = std::make_shared<RealizabilityContext>();
  ctx->problem = &problem;
  ctx->assumption_ids = problem.assumption_universe;
  Criterion check = make_unrealizability_criterion(ctx);
  if (use_memo) check = memoize(check);
  return {std::move(ctx), std::move(check)};
}

AllCoresResult punch_unrealizable(const Gr1Problem& problem,
                                  const PunchOptions& options, bool use_memo,
                                  bool use_quickcore) {
  RealizabilitySetup setup = make_setup(problem, use_memo);
  if (!setup.check.check(problem.guarantee_universe))
    throw RealizableInputError(
        "specification is realizable; there are no unrealizable cores");

  Criterion& check = setup.check;
  RealizabilityContext& ctx = *setup.ctx;
  ComputeCoreFn compute = [&problem, &check, &ctx, use_quickcore](
                              const ElementSet& e, const ElementSet& k) {
    ElementSet fresh =
        use_quickcore
            ? quickcore_with_base(problem, k, e.minus(k), check, ctx)
            : min_with_base(MinAlg::ddmin, e, k, e.minus(k), check);
    ElementSet core = k.unioned(fresh);
    if (MemoCache* cache = check.cache()) cache->add_positive(core);
    return core;
  };
  PunchOptions opts = options;
  if (!use_memo) opts.reuse_known_cores = false;
  return run_punch(problem.guarantee_universe, {}, check, compute, opts);
}

}  // namespace

AllCoresResult punch(const ElementSet& universe, const ElementSet& known,
                     Criterion& check, const ComputeCoreFn& compute_core,
                     const PunchOptions& options) {
  ComputeCoreFn registering = [&](const ElementSet& e, const ElementSet& k) {
    ElementSet core = compute_core(e, k);
    if (MemoCache* cache = check.cache()) cache->add_positive(core);
    return core;
  };
  return run_punch(universe, known, check, registering, options);
}

AllCoresResult punch_ud(const Gr1Problem& problem, const PunchOptions& options,
                        bool use_memo) {
  return punch_unrealizable(problem, options, use_memo, false);
}

AllCoresResult punch_qc(const Gr1Problem& problem, const PunchOptions& options,
                        bool use_memo) {
  return punch_unrealizable(problem, options, use_memo, true);
}

ElementSet core_intersection(const ElementSet& universe, Criterion& check,
                             const ComputeCoreFn& compute_core) {
  if (!check.check(universe))
    throw PreconditionError("core_intersection: criterion fails on universe");
  const ElementSet first = compute_core(universe, {});
  ElementSet result;
  for (ElementId x : first) {
    if (!check.check(universe.minus(x))) result.insert(x);
  }
  return result;
}

AllCoresResult td_all_cores(const ElementSet& universe, Criterion& check,
                            const PunchOptions& options) {
  const auto start = Clock::now();
  const auto deadline = start + options.timeout;
  const CheckStats before = check.stats();

  if (!check.check(universe))
    throw PreconditionError("td: criterion fails on the universe");

  std::set<ElementSet> done;
  std::set<ElementSet> core_keys;
  std::vector<ElementSet> cores;
  bool expired = false;

  auto out_of_time = [&] {
    if (!expired && Clock::now() >= deadline) expired = true;
    return expired;
  };

  // Descends only into satisfying subsets; a set is a core iff every
  // single-element removal fails.
  auto descend = [&](auto&& self, const ElementSet& s) -> void {
    if (out_of_time()) return;
    if (done.count(s)) return;
    bool is_core = true;
    for (ElementId x : s) {
      if (out_of_time()) return;
      ElementSet child = s.minus(x);
      if (check.check(child)) {
        is_core = false;
        self(self, child);
      }
    }
    if (out_of_time()) return;
    if (is_core && core_keys.insert(s).second) cores.push_back(s);
    done.insert(s);
  };
  descend(descend, universe);

  AllCoresResult result;
  result.cores = std::move(cores);
  result.complete = !expired;
  result.intersection = intersection_of(result.cores);
  const CheckStats after = check.stats();
  result.stats.actual_checks = after.actual_checks - before.actual_checks;
  result.stats.memo_hits = after.memo_hits - before.memo_hits;
  result.stats.core_computations = 0;
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

std::vector<ElementSet> brute_force_all_cores(
    const ElementSet& universe,
    const std::function<bool(const ElementSet&)>& check) {
  const std::size_t n = universe.size();
  if (n > 16)
    throw PreconditionError("brute force oracle limited to 16 elements");
  const auto& ids = universe.ids();

  const std::size_t total = std::size_t{1} << n;
  std::vector<char> sat(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<ElementId> members;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) members.push_back(ids[b]);
    sat[mask] = check(ElementSet(std::move(members))) ? 1 : 0;
  }

  std::vector<ElementSet> cores;
  for (std::size_t mask = 0; mask < total; ++mask) {
    if (!sat[mask]) continue;
    bool minimal = true;
    for (std::size_t b = 0; b < n && minimal; ++b) {
      if (mask & (std::size_t{1} << b))
        minimal = !sat[mask & ~(std::size_t{1} << b)];
    }
    if (!minimal) continue;
    std::vector<ElementId> members;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) members.push_back(ids[b]);
    cores.emplace_back(std::move(members));
  }
  return cores;
}

}  // namespace gr1core
