#pragma once

#include <functional>

#include "hasm/state.hpp"
#include "hasm/term.hpp"

namespace hasm {

/// Forces one comparison atom (matched structurally) to a fixed truth
/// value. Used by the engine to take the crossed side of an event surface
/// while all values still come from the pre-crossing state.
struct AtomOverride {
  const Term* atom = nullptr;
  bool truth = false;
};

struct EvalOptions {
  const AtomOverride* override_atom = nullptr;
  /// Test hook: observes every subterm the evaluator visits.
  const std::function<void(const Term&)>* probe = nullptr;
};

Value eval_term(const Term& t, const State& state);
Value eval_term(const Term& t, const State& state, const EvalOptions& opts);

inline Value eval_term(const TermPtr& t, const State& state) {
  return eval_term(*t, state);
}

/// True iff every term of `terms` evaluates to the same value in both states.
bool coincide(const State& a, const State& b, const std::vector<TermPtr>& terms);

}  // namespace hasm
