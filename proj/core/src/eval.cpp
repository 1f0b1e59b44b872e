#include "hasm/eval.hpp"

namespace hasm {

static Value eval_impl(const Term& t, const State& state, const EvalOptions& opts) {
  if (opts.probe) (*opts.probe)(t);

  if (const auto* r = t.real_lit()) return Value::real(r->v);
  if (const auto* b = t.bool_lit()) return Value::boolean(b->v);

  if (const auto* d = t.dyn()) {
    Location loc;
    loc.sym = d->sym;
    loc.args.reserve(d->args.size());
    for (const auto& a : d->args) loc.args.push_back(eval_impl(*a, state, opts));
    return state.read(loc);
  }

  const auto& s = *t.static_app();
  if (opts.override_atom && t.is_comparison_atom() &&
      structural_equal(t, *opts.override_atom->atom)) {
    return Value::boolean(opts.override_atom->truth);
  }

  switch (s.op) {
    case Op::And: {
      // Both operands evaluate (no short circuit): evaluation errors in
      // either operand must not depend on operand order.
      bool a = eval_impl(*s.args[0], state, opts).as_bool();
      bool b = eval_impl(*s.args[1], state, opts).as_bool();
      return Value::boolean(a && b);
    }
    case Op::Or: {
      bool a = eval_impl(*s.args[0], state, opts).as_bool();
      bool b = eval_impl(*s.args[1], state, opts).as_bool();
      return Value::boolean(a || b);
    }
    case Op::Not:
      return Value::boolean(!eval_impl(*s.args[0], state, opts).as_bool());
    case Op::Eq: {
      Value a = eval_impl(*s.args[0], state, opts);
      Value b = eval_impl(*s.args[1], state, opts);
      return Value::boolean(a == b);
    }
    case Op::Lt: {
      double a = eval_impl(*s.args[0], state, opts).as_real();
      double b = eval_impl(*s.args[1], state, opts).as_real();
      return Value::boolean(a < b);
    }
    case Op::Le: {
      double a = eval_impl(*s.args[0], state, opts).as_real();
      double b = eval_impl(*s.args[1], state, opts).as_real();
      return Value::boolean(a <= b);
    }
    case Op::Neg:
      return Value::real(-eval_impl(*s.args[0], state, opts).as_real());
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      double a = eval_impl(*s.args[0], state, opts).as_real();
      double b = eval_impl(*s.args[1], state, opts).as_real();
      double r = 0.0;
      switch (s.op) {
        case Op::Add: r = a + b; break;
        case Op::Sub: r = a - b; break;
        case Op::Mul: r = a * b; break;
        case Op::Div:
          if (b == 0.0) throw DomainError("division by zero");
          r = a / b;
          break;
        default: break;
      }
      return Value::real(r);  // rejects overflow to infinity
    }
  }
  throw SortError("unreachable operator");
}

Value eval_term(const Term& t, const State& state) {
  EvalOptions opts;
  return eval_impl(t, state, opts);
}

Value eval_term(const Term& t, const State& state, const EvalOptions& opts) {
  return eval_impl(t, state, opts);
}

bool coincide(const State& a, const State& b, const std::vector<TermPtr>& terms) {
  for (const auto& t : terms) {
    if (!(eval_term(*t, a) == eval_term(*t, b))) return false;
  }
  return true;
}

}  // namespace hasm
