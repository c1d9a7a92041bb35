#pragma once

#include <vector>

#include "gr1core/ast.hpp"
#include "gr1core/element_set.hpp"

namespace gr1core {

/// A reduced assertion together with the high-level element it came from.
struct TracedAssertion {
  ExprPtr expr;
  ElementId origin;
};

struct ModuleAssertions {
  std::vector<TracedAssertion> initial;
  std::vector<TracedAssertion> safety;
  std::vector<TracedAssertion> justice;
};

/// Auxiliary variables live and die with a group of element IDs: a monitor
/// variable with the monitor's internal assertions, a pattern variable with
/// its single pattern ID.
struct AuxGroup {
  VarId var;
  ElementSet member_ids;
};

/// Pure-GR(1) form of a specification with two-way traceability. Auxiliary
/// variables and the assertions they induce are treated as system variables
/// and guarantees.
struct Gr1Problem {
  std::vector<VarDecl> vars;  // declared vars plus pattern auxiliaries
  ModuleAssertions env;
  ModuleAssertions sys;
  std::vector<AuxGroup> aux_groups;
  std::vector<ElementInfo> elements;  // indexed by ElementId

  /// Universe the core algorithms minimize: declared guarantees,
  /// monitor-internal assertion IDs and guarantee-pattern IDs, in ID order.
  ElementSet guarantee_universe;
  ElementSet assumption_universe;
};

/// Game modules projected to a subset of element IDs. Variables are listed
/// environment-first; `var_ids` maps each slot back to the problem's table.
struct GameModules {
  std::vector<VarDecl> vars;
  std::vector<VarId> var_ids;
  int env_var_count = 0;
  ModuleAssertions env;
  ModuleAssertions sys;
};

Gr1Problem reduce(const SpecAst& spec);

/// Builds env/sys modules containing exactly the assertions traced to the
/// given IDs. An auxiliary variable is kept iff one of its owning IDs is
/// included or a retained assertion still references it; otherwise it is
/// dropped from the state space.
GameModules project(const Gr1Problem& problem, const ElementSet& asm_ids,
                    const ElementSet& gar_ids);

namespace detail {
/// Projection variant that never drops auxiliary variables; used to check
/// that dropping unconstrained auxiliaries preserves realizability.
GameModules project_keep_all_aux(const Gr1Problem& problem,
                                 const ElementSet& asm_ids,
                                 const ElementSet& gar_ids);
}  // namespace detail

}  // namespace gr1core
