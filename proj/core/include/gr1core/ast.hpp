#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gr1core/element_set.hpp"

namespace gr1core {

using VarId = int;

enum class Owner { env, sys, aux };

/// A variable with a finite domain: boolean, or an inclusive integer range.
struct VarDecl {
  std::string name;
  Owner owner = Owner::sys;
  bool is_bool = true;
  int lo = 0;  // integer range, unused for booleans
  int hi = 1;

  int domain_size() const { return is_bool ? 2 : hi - lo + 1; }
};

enum class ExprOp {
  bool_const,
  int_const,
  var_ref,
  not_,
  and_,
  or_,
  implies,
  iff,
  eq,
  ne,
  lt,
  le,
  gt,
  ge,
  add,
  sub,
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

/// Immutable expression tree node. Variable references carry both the table
/// index (for evaluation) and the name (for printing).
struct ExprNode {
  ExprOp op;
  bool bval = false;        // bool_const
  long ival = 0;            // int_const
  VarId var = -1;           // var_ref
  bool primed = false;      // var_ref: written next(name)
  std::string var_name;     // var_ref
  ExprPtr lhs;
  ExprPtr rhs;
  int line = 0;
  int column = 0;
};

namespace expr {

ExprPtr bool_const(bool v);
ExprPtr int_const(long v);
ExprPtr var_ref(VarId var, std::string name, bool primed);
ExprPtr negate(ExprPtr x);
ExprPtr binary(ExprOp op, ExprPtr lhs, ExprPtr rhs);

/// Replaces every unprimed variable reference with its primed counterpart.
/// The input must not contain primed references already.
ExprPtr prime_all(const ExprPtr& e);

bool mentions_prime(const ExprPtr& e);

/// Variable IDs referenced by the expression (deduplicated, ascending).
std::vector<VarId> referenced_vars(const ExprPtr& e);
/// Variable IDs that occur primed.
std::vector<VarId> primed_vars(const ExprPtr& e);

}  // namespace expr

/// Renders an expression with minimal parentheses; parsing the result again
/// yields a structurally identical tree.
std::string to_string(const ExprPtr& e);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

enum class Side { assumption, guarantee };

/// Kind of a specification element. `ini`, `alw` and `alw_ev` follow the
/// concrete syntax; `pattern` marks a declaration that reduces to a bundle
/// of GR(1) assertions under a single ID.
enum class ElementKind { ini, alw, alw_ev, pattern };

enum class ElementOrigin { declared, monitor_internal, pattern };

/// Per-ID metadata used for traceability and reporting.
struct ElementInfo {
  ElementId id = -1;
  Side side = Side::guarantee;
  ElementKind kind = ElementKind::ini;
  ElementOrigin origin = ElementOrigin::declared;
  int source_line = 0;
  std::string text;
};

struct DeclaredElement {
  ElementId id;
  Side side;
  ElementKind kind;  // ini | alw | alw_ev
  ExprPtr expr;
  int source_line;
};

struct MonitorAssertion {
  ElementId id;
  ElementKind kind;  // ini | alw
  ExprPtr expr;
  int source_line;
};

/// A monitor declares one boolean auxiliary variable plus internal
/// assertions about it; every internal assertion carries its own ID.
struct MonitorDecl {
  VarId var;
  std::string var_name;
  std::vector<MonitorAssertion> assertions;
  int source_line;
};

/// `gar respondsTo(p, q)`: the whole construct owns a single ID covering
/// everything the reduction derives from it.
struct PatternDecl {
  ElementId id;
  ExprPtr trigger;
  ExprPtr response;
  int source_line;
};

/// Parsed specification. Immutable after construction; element IDs are
/// ordinals in source order and stable across runs for the same input.
struct SpecAst {
  /// Declared env/sys variables followed by monitor variables (owner aux).
  std::vector<VarDecl> vars;
  std::vector<DeclaredElement> elements;
  std::vector<MonitorDecl> monitors;
  std::vector<PatternDecl> patterns;
  /// Indexed by ElementId.
  std::vector<ElementInfo> element_table;

  std::size_t element_count() const { return element_table.size(); }
};

/// Canonical text form; reparsing yields a structurally identical SpecAst.
std::string pretty_print(const SpecAst& spec);

/// Structural identity modulo source positions.
bool structurally_equal(const SpecAst& a, const SpecAst& b);

}  // namespace gr1core
