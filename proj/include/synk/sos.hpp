#pragma once

#include <cstddef>

#include "synk/ast.hpp"
#include "synk/signal_env.hpp"
#include "synk/trace.hpp"
#include "synk/validate.hpp"

namespace synk {

/// Remainder of a program still to execute; a null statement is the
/// terminated program.
struct Residual {
  StmtPtr stmt;

  bool terminated() const { return stmt == nullptr; }
  static Residual terminated_value() { return Residual{}; }
};

struct StepOutcome {
  SignalEnv env;
  Residual residual;
  bool ticked = false;
};

/// Applies one rewrite of the structural operational semantics.
///
/// Instantaneous statements (nothing, emit, declarations, if dispatch, loop
/// unrolling) never tick; `pause` always ticks, leaving `nothing` behind.
/// The arms of a parallel and the body of an abort are each run until they
/// pause or terminate before the parallel/abort rule is applied. An abort
/// only checks its condition when its body resumes after a pause.
/// Precondition: `stmt` is not terminated.
StepOutcome sos_step(SignalEnv env, const Residual& stmt);

struct Reaction {
  SignalEnv env;
  Residual residual;
  bool ticked = false;
};

/// Steps until the program pauses or terminates. Throws DivergenceGuard
/// after 10 x (node count of `stmt`) steps. A terminated input is returned
/// unchanged.
Reaction react(SignalEnv env, const Residual& stmt);

/// Reference execution of a trace: for each tick, inject the present inputs,
/// react, collect the emitted outputs, then do the end-of-tick copy. Runs for
/// max(1, inputs.size()) ticks or until the program terminates.
/// Throws UnknownInputSignal for names that are not declared inputs.
TraceResult run_trace_sos(const CheckedAst& program, const TickTrace& inputs);

/// Environment with every declared signal bound and both statuses false.
SignalEnv initial_env(const std::vector<SignalInfo>& signals);

/// Sets the current status of each input in `present`, checking kinds.
void inject_inputs(SignalEnv& env, const SignalSet& present);

}  // namespace synk
