#pragma once

#include <functional>
#include <memory>

#include "gr1core/minimize.hpp"
#include "gr1core/reduction.hpp"

namespace gr1core {

/// Shared context behind an unrealizability criterion over guarantee-ID
/// subsets. The assumption side is part of the context rather than of each
/// query: QuickCore temporarily drops justice assumptions when it has
/// established that no justice guarantee is needed, which leaves the result
/// of every remaining query unchanged.
struct RealizabilityContext {
  const Gr1Problem* problem = nullptr;
  ElementSet assumption_ids;

  /// Test hook: observes every actual (non-memoized) realizability check,
  /// with the assumption set in force at the time.
  std::function<void(const ElementSet& asm_ids, const ElementSet& gar_ids,
                     bool unrealizable)>
      on_actual_check;
};

/// Criterion "the specification restricted to these guarantee IDs is
/// unrealizable" — monotonic over guarantee subsets: adding guarantees
/// keeps an unrealizable specification unrealizable.
Criterion make_unrealizability_criterion(
    std::shared_ptr<RealizabilityContext> ctx);

}  // namespace gr1core
