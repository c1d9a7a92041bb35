#pragma once

#include <chrono>
#include <functional>
#include <vector>

#include "gr1core/quickcore.hpp"

namespace gr1core {

struct AllCoresStats {
  std::uint64_t actual_checks = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t core_computations = 0;
  double elapsed_ms = 0.0;
};

/// Result of an all-cores enumeration. When the run is complete the
/// intersection equals the intersection of all cores; on timeout it is the
/// best information gathered so far and `complete` is false.
struct AllCoresResult {
  std::vector<ElementSet> cores;  // discovery order, deduplicated
  ElementSet intersection;
  bool complete = true;
  AllCoresStats stats;
};

struct PunchOptions {
  std::chrono::milliseconds timeout{600'000};
  /// Serve computeCore from previously found cores when one is a subset of
  /// the queried set; with this on, the number of actual core computations
  /// equals the number of cores.
  bool reuse_known_cores = true;
  /// Test hook: called at every recursive entry with (E, K).
  std::function<void(const ElementSet& e, const ElementSet& k)> on_enter;
};

/// computeCore(E', K'): returns a core of E', assuming E' satisfies the
/// criterion and K' is a subset of all cores in E'.
using ComputeCoreFn =
    std::function<ElementSet(const ElementSet& e, const ElementSet& k)>;

/// Finds all cores of `universe` under a monotonic criterion. Requires
/// check(universe) to hold and `known` to be a subset of all cores. Finds a
/// first core, splits its fresh elements by whether the criterion survives
/// their removal from the universe (the failing ones belong to every core
/// — at top level exactly the intersection of all cores, available before
/// any recursion), and recurses on the universe punched by each surviving
/// element. Worst case is exponential in |universe|; the timeout is
/// checked cooperatively before every check and core computation.
AllCoresResult punch(const ElementSet& universe, const ElementSet& known,
                     Criterion& check, const ComputeCoreFn& compute_core,
                     const PunchOptions& options = {});

/// All unrealizable cores with computeCore = ddmin with a base.
AllCoresResult punch_ud(const Gr1Problem& problem,
                        const PunchOptions& options = {},
                        bool use_memo = true);

/// All unrealizable cores with computeCore = quickcore with a base. Both
/// instantiations share one memoization between the splitting checks and
/// the core computations.
AllCoresResult punch_qc(const Gr1Problem& problem,
                        const PunchOptions& options = {},
                        bool use_memo = true);

/// Intersection of all cores from one core computation plus |core| checks:
/// the elements of the first core whose removal from the universe breaks
/// the criterion.
ElementSet core_intersection(const ElementSet& universe, Criterion& check,
                             const ComputeCoreFn& compute_core);

/// Naive top-down search over all criterion-satisfying subsets: a set is a
/// core iff every single-element removal fails the criterion. Fully
/// explored subsets are memoized to avoid repeated descents.
AllCoresResult td_all_cores(const ElementSet& universe, Criterion& check,
                            const PunchOptions& options = {});

/// Exhaustive oracle: enumerates every subset of `universe` (at most 16
/// elements) and returns the satisfying subsets with no satisfying proper
/// subset. Independent of the search algorithms above.
std::vector<ElementSet> brute_force_all_cores(
    const ElementSet& universe,
    const std::function<bool(const ElementSet&)>& check);

}  // namespace gr1core
