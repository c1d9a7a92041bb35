#include "gr1core/eval.hpp"

#include "gr1core/errors.hpp"

namespace gr1core {

namespace {

struct Evaluator {
  const StateSpace& space;
  std::span<const int> cur;
  std::span<const int> nxt;

  bool is_bool_expr(const ExprPtr& e) const {
    switch (e->op) {
      case ExprOp::int_const:
      case ExprOp::add:
      case ExprOp::sub:
        return false;
      case ExprOp::var_ref: {
        int slot = slot_of(e);
        return space.var(slot).is_bool;
      }
      default:
        return true;
    }
  }

  int slot_of(const ExprPtr& ref) const {
    int slot = space.slot_of(ref->var);
    if (slot < 0)
      throw Error("expression references variable '" + ref->var_name +
                  "' outside the state space");
    return slot;
  }

  long read_var(const ExprPtr& e) const {
    int slot = slot_of(e);
    if (e->primed) {
      if (nxt.empty())
        throw Error("primed expression evaluated without a successor");
      return nxt[slot];
    }
    return cur[slot];
  }

  long as_int(const ExprPtr& e) const {
    switch (e->op) {
      case ExprOp::int_const:
        return e->ival;
      case ExprOp::var_ref:
        return read_var(e);
      case ExprOp::add:
        return as_int(e->lhs) + as_int(e->rhs);
      case ExprOp::sub:
        return as_int(e->lhs) - as_int(e->rhs);
      default:
        throw Error("expression is not an integer");
    }
  }

  bool as_bool(const ExprPtr& e) const {
    switch (e->op) {
      case ExprOp::bool_const:
        return e->bval;
      case ExprOp::var_ref:
        return read_var(e) != 0;
      case ExprOp::not_:
        return !as_bool(e->lhs);
      case ExprOp::and_:
        return as_bool(e->lhs) && as_bool(e->rhs);
      case ExprOp::or_:
        return as_bool(e->lhs) || as_bool(e->rhs);
      case ExprOp::implies:
        return !as_bool(e->lhs) || as_bool(e->rhs);
      case ExprOp::iff:
        return as_bool(e->lhs) == as_bool(e->rhs);
      case ExprOp::eq:
      case ExprOp::ne: {
        long l, r;
        if (is_bool_expr(e->lhs)) {
          l = as_bool(e->lhs) ? 1 : 0;
          r = as_bool(e->rhs) ? 1 : 0;
        } else {
          l = as_int(e->lhs);
          r = as_int(e->rhs);
        }
        return e->op == ExprOp::eq ? l == r : l != r;
      }
      case ExprOp::lt:
        return as_int(e->lhs) < as_int(e->rhs);
      case ExprOp::le:
        return as_int(e->lhs) <= as_int(e->rhs);
      case ExprOp::gt:
        return as_int(e->lhs) > as_int(e->rhs);
      case ExprOp::ge:
        return as_int(e->lhs) >= as_int(e->rhs);
      default:
        throw Error("expression is not boolean");
    }
  }
};

}  // namespace

bool eval(const ExprPtr& e, const StateSpace& space, std::span<const int> state,
          std::span<const int> successor) {
  return Evaluator{space, state, successor}.as_bool(e);
}

}  // namespace gr1core
