#pragma once

#include "gr1core/realizability.hpp"

namespace gr1core {

struct CoreResult {
  ElementSet core;
  CheckStats stats;
};

struct QuickCoreOptions {
  bool use_memo = true;
};

/// Staged core computation for an unrealizable specification: minimize
/// justice guarantees first (dropping all justice assumptions when none are
/// needed), then safety guarantees, and finally scan initial guarantees
/// against a single winning-region computation. Throws RealizableInputError
/// on realizable input.
CoreResult quickcore(const Gr1Problem& problem,
                     const QuickCoreOptions& options = {});

/// Base-augmented variant used inside all-cores enumeration: minimizes only
/// the IDs in `a`, includes `base` in every stage's check, and shares the
/// caller's criterion (and therefore its memoization). Returns A' such that
/// base ∪ A' satisfies the criterion; when base is a subset of all cores,
/// base ∪ A' is a core. The justice-assumption drop is applied only when
/// the retained non-justice IDs project to a system module without justice
/// assertions; the context's assumption set is restored before returning.
ElementSet quickcore_with_base(const Gr1Problem& problem,
                               const ElementSet& base, const ElementSet& a,
                               Criterion& check, RealizabilityContext& ctx);

}  // namespace gr1core
