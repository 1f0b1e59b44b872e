#pragma once

<system-warning>Context low. Current usage: 174,872 tokens (87.4%). Files: /root/proj/core/include/hasm/errors.hpp (76 lines), /root/proj/core/include/hasm/value.hpp (87 lines)</system-warning>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hasm/hybrid_time.hpp"
#include "hasm/semantics.hpp"

namespace hasm {

struct EngineConfig {
  double step_h = 1e-3;
  double t_max = 10.0;
  double event_tol = 1e-9;
  int max_jumps_per_instant = 1000;
  int sample_stride = 10;
  long long max_steps = 100000000;

  void validate() const;  // all positive, event_tol < step_h
};

struct FlowSegment {
  HybridTime start;
  std::vector<std::pair<double, State>> samples;  // strictly increasing t
};

struct JumpEvent {
  HybridTime at;  // moment after the jump: (t, k+1)
  State before;
  State after;
  std::map<Location, Value> updates;
};

enum class TerminalKind { Quiescent, ReachedTMax, Error };
enum class RunError { None, Zeno, Clash, Domain, EventLocalization, StepBudget };

struct Terminal {
  TerminalKind kind = TerminalKind::Quiescent;
  RunError error = RunError::None;
  std::string message;
  HybridTime at;
};

struct Trajectory {
  State initial;
  std::vector<std::variant<FlowSegment, JumpEvent>> segments;
  Terminal terminal;
  State final_state;

  Trajectory(State init)
      : initial(init), final_state(std::move(init)) {}
  std::vector<const JumpEvent*> jumps() const;
};

class FlowExpected : public Error {
public:
  using Error::Error;
};

class EventLocalizationFailed : public Error {
public:
  using Error::Error;
};

class ZenoError : public Error {
public:
  using Error::Error;
};

/// One discrete transition: applies the jump generator of `state`.
/// Returns the successor and the applied update set.
std::pair<State, std::map<Location, Value>> step_jump(const Program& p, const State& state);

/// The flow generator read as a derivative assignment; locations not
/// listed are held constant (derivative 0).
std::map<Location, double> vector_field(const Program& p, const State& state);

struct StepResult {
  bool event = false;  // crossing or mid-step mode flip inside the step
  State end;
};

/// One fixed-width RK4 step over the evolving real locations. Reports an
/// event if a guard atom changes sign between the endpoints or any stage
/// state classifies as a jump state.
StepResult integrate_step(const Program& p, const State& state, double h);

struct LocatedEvent {
  double offset;              // crossing offset from the step start
  State before;               // last pre-crossing state
  TermPtr atom;               // crossed atom, null for a pure mode flip
  bool post_truth = false;    // atom truth on the crossed side
};

/// Bisection on step width from the step-start state; the returned bracket
/// is far tighter than event_tol. Fails if the surface is recrossed within
/// event_tol without an intervening jump.
LocatedEvent locate_event(const Program& p, const State& state, double h);

/// Full hybrid run: exact jumps while the state classifies as a jump
/// state, RK4 flow with event localization otherwise.
Trajectory run(const Program& p, const State& init, const EngineConfig& config);

}  // namespace hasm
