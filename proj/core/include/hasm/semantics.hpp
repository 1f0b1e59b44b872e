#pragma once

#include <map>
#include <string>

#include "hasm/ast.hpp"
#include "hasm/eval.hpp"
#include "hasm/state.hpp"

namespace hasm {

/// Two rules assigned different values (or derivatives) to one location.
struct ClashReport {
  Location loc;
  Value first;
  Value second;
  std::string first_path;
  std::string second_path;
};

class ClashError : public Error {
public:
  explicit ClashError(ClashReport report);
  const ClashReport& report() const { return report_; }

private:
  ClashReport report_;
};

/// Either a discrete update set (jump) or a derivative assignment (flow).
/// Clash-free by construction; value comparisons are bitwise.
struct TaggedGenerator {
  enum class Tag { Jump, Flow };

  Tag tag = Tag::Jump;
  std::map<Location, Value> updates;   // Tag::Jump
  std::map<Location, double> derivs;   // Tag::Flow

  bool is_jump() const { return tag == Tag::Jump; }
  friend bool operator==(const TaggedGenerator& a, const TaggedGenerator& b);
};

enum class StateClass { JumpState, FlowState };

/// Denotation of a rule in a state. All argument and right-hand-side terms
/// are evaluated in the given state; conditionals recurse into the branch
/// selected by the guard.
TaggedGenerator evaluate_rule(const Rule& rule, const State& state);
TaggedGenerator evaluate_rule(const Rule& rule, const State& state,
                              const EvalOptions& opts);
inline TaggedGenerator evaluate_rule(const Program& p, const State& state) {
  return evaluate_rule(*p.body, state);
}

StateClass classify(const Program& p, const State& state);
StateClass classify(const Program& p, const State& state, const EvalOptions& opts);

}  // namespace hasm
