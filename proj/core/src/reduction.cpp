#include "gr1core/reduction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gr1core/errors.hpp"

namespace gr1core {

namespace {

std::string fresh_name(const std::vector<VarDecl>& vars,
                       const std::string& base) {
  auto taken = [&](const std::string& n) {
    return std::any_of(vars.begin(), vars.end(),
                       [&](const VarDecl& v) { return v.name == n; });
  };
  if (!taken(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + "_" + std::to_string(i);
    if (!taken(cand)) return cand;
  }
}

void append(ModuleAssertions& mod, ElementKind kind, ExprPtr e,
            ElementId origin) {
  TracedAssertion a{std::move(e), origin};
  switch (kind) {
    case ElementKind::ini:
      mod.initial.push_back(std::move(a));
      break;
    case ElementKind::alw:
      mod.safety.push_back(std::move(a));
      break;
    default:
      mod.justice.push_back(std::move(a));
      break;
  }
}

}  // namespace

Gr1Problem reduce(const SpecAst& spec) {
  Gr1Problem p;
  p.vars = spec.vars;
  p.elements = spec.element_table;

  for (const DeclaredElement& e : spec.elements) {
    ModuleAssertions& mod = e.side == Side::assumption ? p.env : p.sys;
    append(mod, e.kind, e.expr, e.id);
  }

  // Monitors: the auxiliary variable is already in the table; each internal
  // assertion becomes a system guarantee under its own ID.
  for (const MonitorDecl& m : spec.monitors) {
    AuxGroup group;
    group.var = m.var;
    for (const MonitorAssertion& a : m.assertions) {
      append(p.sys, a.kind, a.expr, a.id);
      group.member_ids.insert(a.id);
    }
    p.aux_groups.push_back(std::move(group));
  }

  // respondsTo(p, q) tracks an unanswered trigger in one pending bit:
  //
  //   ini  !pend
  //   alw  next(pend) = (p | pend) & !q
  //   alwEv !pend
  //
  // The update reads the current step, so a trigger at the very first step
  // is already pending one step later unless the response fired with it.
  for (const PatternDecl& pat : spec.patterns) {
    VarDecl aux;
    aux.name = fresh_name(p.vars, "pend");
    aux.owner = Owner::aux;
    aux.is_bool = true;
    VarId aux_id = static_cast<VarId>(p.vars.size());
    p.vars.push_back(aux);

    ExprPtr pend = expr::var_ref(aux_id, aux.name, false);
    ExprPtr pend_next = expr::var_ref(aux_id, aux.name, true);

    append(p.sys, ElementKind::ini, expr::negate(pend), pat.id);
    append(p.sys, ElementKind::alw,
           expr::binary(ExprOp::eq, pend_next,
                        expr::binary(ExprOp::and_,
                                     expr::binary(ExprOp::or_, pat.trigger,
                                                  pend),
                                     expr::negate(pat.response))),
           pat.id);
    append(p.sys, ElementKind::alw_ev, expr::negate(pend), pat.id);

    AuxGroup group;
    group.var = aux_id;
    group.member_ids.insert(pat.id);
    p.aux_groups.push_back(std::move(group));
  }

  for (const ElementInfo& info : p.elements) {
    if (info.side == Side::assumption)
      p.assumption_universe.insert(info.id);
    else
      p.guarantee_universe.insert(info.id);
  }
  return p;
}

namespace {

GameModules project_impl(const Gr1Problem& problem, const ElementSet& asm_ids,
                         const ElementSet& gar_ids, bool keep_all_aux) {
  for (ElementId id : asm_ids) {
    if (!problem.assumption_universe.contains(id))
      throw UnknownElementError("unknown assumption ID " + std::to_string(id));
  }
  for (ElementId id : gar_ids) {
    if (!problem.guarantee_universe.contains(id))
      throw UnknownElementError("unknown guarantee ID " + std::to_string(id));
  }

  GameModules out;
  auto keep = [&](const TracedAssertion& a, const ElementSet& ids) {
    return ids.contains(a.origin);
  };
  auto filter = [&](const std::vector<TracedAssertion>& in,
                    const ElementSet& ids) {
    std::vector<TracedAssertion> kept;
    for (const TracedAssertion& a : in)
      if (keep(a, ids)) kept.push_back(a);
    return kept;
  };
  out.env.initial = filter(problem.env.initial, asm_ids);
  out.env.safety = filter(problem.env.safety, asm_ids);
  out.env.justice = filter(problem.env.justice, asm_ids);
  out.sys.initial = filter(problem.sys.initial, gar_ids);
  out.sys.safety = filter(problem.sys.safety, gar_ids);
  out.sys.justice = filter(problem.sys.justice, gar_ids);

  // An auxiliary variable stays in the state space when one of its owning
  // IDs is selected, or when some retained assertion still mentions it
  // (a declared guarantee may read a monitor variable).
  std::set<VarId> live_aux;
  ElementSet selected = asm_ids.unioned(gar_ids);
  for (const AuxGroup& g : problem.aux_groups) {
    if (keep_all_aux || !g.member_ids.intersect(selected).empty())
      live_aux.insert(g.var);
  }
  if (!keep_all_aux) {
    auto note_refs = [&](const std::vector<TracedAssertion>& list) {
      for (const TracedAssertion& a : list)
        for (VarId v : expr::referenced_vars(a.expr))
          if (problem.vars[v].owner == Owner::aux) live_aux.insert(v);
    };
    for (const ModuleAssertions* mod : {&out.env, &out.sys}) {
      note_refs(mod->initial);
      note_refs(mod->safety);
      note_refs(mod->justice);
    }
  }

  // Environment variables first, then system, then live auxiliaries, each
  // in declaration order.
  auto push_vars = [&](Owner owner) {
    for (VarId v = 0; v < static_cast<VarId>(problem.vars.size()); ++v) {
      const VarDecl& decl = problem.vars[v];
      if (decl.owner != owner) continue;
      if (owner == Owner::aux && !live_aux.count(v)) continue;
      out.vars.push_back(decl);
      out.var_ids.push_back(v);
    }
  };
  push_vars(Owner::env);
  out.env_var_count = static_cast<int>(out.vars.size());
  push_vars(Owner::sys);
  push_vars(Owner::aux);
  return out;
}

}  // namespace

GameModules project(const Gr1Problem& problem, const ElementSet& asm_ids,
                    const ElementSet& gar_ids) {
  return project_impl(problem, asm_ids, gar_ids, false);
}

namespace detail {
GameModules project_keep_all_aux(const Gr1Problem& problem,
                                 const ElementSet& asm_ids,
                                 const ElementSet& gar_ids) {
  return project_impl(problem, asm_ids, gar_ids, true);
}
}  // namespace detail

}  // namespace gr1core
