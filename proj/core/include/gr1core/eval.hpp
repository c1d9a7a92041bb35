#pragma once

#include <span>

#include "gr1core/ast.hpp"
#include "gr1core/state_space.hpp"

namespace gr1core {

/// Evaluates a boolean assertion on a state, or on a transition when a
/// successor is supplied. `next(v)` reads from the successor; evaluating a
/// primed expression without one is a logic error. Values are indexed by
/// space slot; variable IDs are resolved through `space.slot_of`.
bool eval(const ExprPtr& e, const StateSpace& space, std::span<const int> state,
          std::span<const int> successor = {});

}  // namespace gr1core
