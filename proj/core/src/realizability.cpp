#include "gr1core/realizability.hpp"

#include "gr1core/solver.hpp"

namespace gr1core {

Criterion make_unrealizability_criterion(
    std::shared_ptr<RealizabilityContext> ctx) {
  return Criterion([ctx](const ElementSet& gar_ids) {
    bool unrealizable =
        !is_realizable(*ctx->problem, ctx->assumption_ids, gar_ids);
    if (ctx->on_actual_check)
      ctx->on_actual_check(ctx->assumption_ids, gar_ids, unrealizable);
    return unrealizable;
  });
}

}  // namespace gr1core
