#pragma once

#include <cstddef>
#include <vector>

#include "synk/rewrite.hpp"
#include "synk/signal_env.hpp"
#include "synk/trace.hpp"

namespace synk {

struct ThreadStatus {
  enum class Kind { Inactive, AtState, Done };
  Kind kind = Kind::Inactive;
  NodeId node = kNoNode;  // AtState only

  static ThreadStatus inactive() { return {}; }
  static ThreadStatus at(NodeId n) { return {Kind::AtState, n}; }
  static ThreadStatus done() { return {Kind::Done, kNoNode}; }
  friend bool operator==(const ThreadStatus&, const ThreadStatus&) = default;
};

struct SimState {
  std::vector<ThreadStatus> threads;  // indexed by ThreadId
  SignalEnv env;
  bool terminated = false;
  std::size_t tick = 0;  // ticks completed
};

struct SimStep {
  SimState state;
  SignalSet outputs;
};

/// Tick 1: inject `inputs`, run the root thread from its init node until
/// every active thread rests at a state or the program ends, then do the
/// end-of-tick copy. Works on raw and eliminated graphs.
SimStep sim_init(const Fsm& fsm, const SignalSet& inputs = {});

/// One later tick. A thread resting at the join state of a group first tries
/// that state's non-join edges (the enclosing aborts); if none fires, the
/// group's members advance in arm order, then the join edges are tried. A
/// thread at any other state takes its first edge whose guard holds.
/// Leaving a join state deactivates the group's threads.
/// Throws StuckState if no edge applies. The state must not be terminated.
SimStep sim_tick(const Fsm& fsm, SimState state, const SignalSet& inputs);

/// As run_trace_sos, over the graph.
TraceResult run_trace_fsm(const Fsm& fsm, const TickTrace& inputs);

}  // namespace synk
