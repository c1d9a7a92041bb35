#include "gr1core/ast.hpp"

#include <algorithm>
#include <sstream>

namespace gr1core {

namespace expr {

ExprPtr bool_const(bool v) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::bool_const;
  n->bval = v;
  return n;
}

ExprPtr int_const(long v) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::int_const;
  n->ival = v;
  return n;
}

ExprPtr var_ref(VarId var, std::string name, bool primed) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::var_ref;
  n->var = var;
  n->var_name = std::move(name);
  n->primed = primed;
  return n;
}

ExprPtr negate(ExprPtr x) {
  auto n = std::make_shared<ExprNode>();
  n->op = ExprOp::not_;
  n->lhs = std::move(x);
  return n;
}

ExprPtr binary(ExprOp op, ExprPtr lhs, ExprPtr rhs) {
  auto n = std::make_shared<ExprNode>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

ExprPtr prime_all(const ExprPtr& e) {
  if (!e) return e;
  if (e->op == ExprOp::var_ref) {
    return var_ref(e->var, e->var_name, true);
  }
  if (!e->lhs && !e->rhs) return e;
  auto n = std::make_shared<ExprNode>(*e);
  n->lhs = prime_all(e->lhs);
  n->rhs = prime_all(e->rhs);
  return n;
}

bool mentions_prime(const ExprPtr& e) {
  if (!e) return false;
  if (e->op == ExprOp::var_ref) return e->primed;
  return mentions_prime(e->lhs) || mentions_prime(e->rhs);
}

namespace {

void collect(const ExprPtr& e, bool primed_only, std::vector<VarId>& out) {
  if (!e) return;
  if (e->op == ExprOp::var_ref) {
    if (!primed_only || e->primed) out.push_back(e->var);
    return;
  }
  collect(e->lhs, primed_only, out);
  collect(e->rhs, primed_only, out);
}

std::vector<VarId> sorted_unique(std::vector<VarId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<VarId> referenced_vars(const ExprPtr& e) {
  std::vector<VarId> out;
  collect(e, false, out);
  return sorted_unique(std::move(out));
}

std::vector<VarId> primed_vars(const ExprPtr& e) {
  std::vector<VarId> out;
  collect(e, true, out);
  return sorted_unique(std::move(out));
}

}  // namespace expr

namespace {

// Binding strength, loosest first. Mirrors the parser's precedence table.
int precedence(ExprOp op) {
  switch (op) {
    case ExprOp::iff:
      return 1;
    case ExprOp::implies:
      return 2;
    case ExprOp::or_:
      return 3;
    case ExprOp::and_:
      return 4;
    case ExprOp::eq:
    case ExprOp::ne:
    case ExprOp::lt:
    case ExprOp::le:
    case ExprOp::gt:
    case ExprOp::ge:
      return 5;
    case ExprOp::add:
    case ExprOp::sub:
      return 6;
    case ExprOp::not_:
      return 7;
    default:
      return 8;
  }
}

const char* op_token(ExprOp op) {
  switch (op) {
    case ExprOp::and_:
      return "&";
    case ExprOp::or_:
      return "|";
    case ExprOp::implies:
      return "->";
    case ExprOp::iff:
      return "<->";
    case ExprOp::eq:
      return "=";
    case ExprOp::ne:
      return "!=";
    case ExprOp::lt:
      return "<";
    case ExprOp::le:
      return "<=";
    case ExprOp::gt:
      return ">";
    case ExprOp::ge:
      return ">=";
    case ExprOp::add:
      return "+";
    case ExprOp::sub:
      return "-";
    default:
      return "?";
  }
}

void print(const ExprPtr& e, int parent_prec, std::ostream& os) {
  switch (e->op) {
    case ExprOp::bool_const:
      os << (e->bval ? "true" : "false");
      return;
    case ExprOp::int_const:
      os << e->ival;
      return;
    case ExprOp::var_ref:
      if (e->primed)
        os << "next(" << e->var_name << ")";
      else
        os << e->var_name;
      return;
    case ExprOp::not_: {
      os << "!";
      print(e->lhs, precedence(ExprOp::not_), os);
      return;
    }
    default: {
      int prec = precedence(e->op);
      bool paren = prec < parent_prec;
      if (paren) os << "(";
      // -> is right associative, every other binary operator groups left.
      bool right_assoc = e->op == ExprOp::implies;
      print(e->lhs, right_assoc ? prec + 1 : prec, os);
      os << " " << op_token(e->op) << " ";
      print(e->rhs, right_assoc ? prec : prec + 1, os);
      if (paren) os << ")";
      return;
    }
  }
}

const char* kind_keyword(ElementKind k) {
  switch (k) {
    case ElementKind::ini:
      return "ini";
    case ElementKind::alw:
      return "alw";
    case ElementKind::alw_ev:
      return "alwEv";
    default:
      return "pattern";
  }
}

}  // namespace

std::string to_string(const ExprPtr& e) {
  std::ostringstream os;
  print(e, 0, os);
  return os.str();
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  if (a->op != b->op) return false;
  switch (a->op) {
    case ExprOp::bool_const:
      return a->bval == b->bval;
    case ExprOp::int_const:
      return a->ival == b->ival;
    case ExprOp::var_ref:
      return a->var == b->var && a->primed == b->primed &&
             a->var_name == b->var_name;
    default:
      return structurally_equal(a->lhs, b->lhs) &&
             structurally_equal(a->rhs, b->rhs);
  }
}

std::string pretty_print(const SpecAst& spec) {
  std::ostringstream os;
  for (const VarDecl& v : spec.vars) {
    if (v.owner == Owner::aux) continue;  // monitor vars print with the block
    os << (v.owner == Owner::env ? "env " : "sys ");
    if (v.is_bool)
      os << "boolean ";
    else
      os << "Int(" << v.lo << ".." << v.hi << ") ";
    os << v.name << ";\n";
  }

  // Interleave elements, monitors and patterns back into ID order.
  std::size_t di = 0, mi = 0, pi = 0;
  auto next_declared_id = [&]() -> ElementId {
    return di < spec.elements.size() ? spec.elements[di].id : -1;
  };
  auto next_monitor_id = [&]() -> ElementId {
    return mi < spec.monitors.size() ? spec.monitors[mi].assertions.front().id
                                     : -1;
  };
  auto next_pattern_id = [&]() -> ElementId {
    return pi < spec.patterns.size() ? spec.patterns[pi].id : -1;
  };
  for (ElementId id = 0; id < static_cast<ElementId>(spec.element_count());) {
    if (id == next_declared_id()) {
      const DeclaredElement& e = spec.elements[di++];
      os << (e.side == Side::assumption ? "asm " : "gar ")
         << kind_keyword(e.kind) << " " << to_string(e.expr) << ";\n";
      ++id;
    } else if (id == next_monitor_id()) {
      const MonitorDecl& m = spec.monitors[mi++];
      os << "monitor boolean " << m.var_name << " {\n";
      for (const MonitorAssertion& a : m.assertions) {
        os << "  " << kind_keyword(a.kind) << " " << to_string(a.expr)
           << ";\n";
      }
      os << "}\n";
      id += static_cast<ElementId>(m.assertions.size());
    } else if (id == next_pattern_id()) {
      const PatternDecl& p = spec.patterns[pi++];
      os << "gar respondsTo(" << to_string(p.trigger) << ", "
         << to_string(p.response) << ");\n";
      ++id;
    } else {
      break;  // unreachable for well-formed tables
    }
  }
  return os.str();
}

bool structurally_equal(const SpecAst& a, const SpecAst& b) {
  if (a.vars.size() != b.vars.size()) return false;
  for (std::size_t i = 0; i < a.vars.size(); ++i) {
    const VarDecl &va = a.vars[i], &vb = b.vars[i];
    if (va.name != vb.name || va.owner != vb.owner ||
        va.is_bool != vb.is_bool)
      return false;
    if (!va.is_bool && (va.lo != vb.lo || va.hi != vb.hi)) return false;
  }
  if (a.elements.size() != b.elements.size() ||
      a.monitors.size() != b.monitors.size() ||
      a.patterns.size() != b.patterns.size())
    return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    const DeclaredElement &ea = a.elements[i], &eb = b.elements[i];
    if (ea.id != eb.id || ea.side != eb.side || ea.kind != eb.kind ||
        !structurally_equal(ea.expr, eb.expr))
      return false;
  }
  for (std::size_t i = 0; i < a.monitors.size(); ++i) {
    const MonitorDecl &ma = a.monitors[i], &mb = b.monitors[i];
    if (ma.var_name != mb.var_name ||
        ma.assertions.size() != mb.assertions.size())
      return false;
    for (std::size_t j = 0; j < ma.assertions.size(); ++j) {
      const MonitorAssertion &xa = ma.assertions[j], &xb = mb.assertions[j];
      if (xa.id != xb.id || xa.kind != xb.kind ||
          !structurally_equal(xa.expr, xb.expr))
        return false;
    }
  }
  for (std::size_t i = 0; i < a.patterns.size(); ++i) {
    const PatternDecl &pa = a.patterns[i], &pb = b.patterns[i];
    if (pa.id != pb.id || !structurally_equal(pa.trigger, pb.trigger) ||
        !structurally_equal(pa.response, pb.response))
      return false;
  }
  return true;
}

}  // namespace gr1core
