#pragma once

#include <random>

#include "gr1core/ast.hpp"

namespace gr1core::testing {

/// Small random GR(1) specification over boolean variables: at most six
/// variables, four assumptions and eight guarantees, with prime placement
/// respecting each assertion kind. Deterministic for a given generator
/// state.
SpecAst random_spec(std::mt19937& rng);

}  // namespace gr1core::testing
