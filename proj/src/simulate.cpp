#include "synk/simulate.hpp"

#include <algorithm>

#include "synk/error.hpp"
#include "synk/sos.hpp"

namespace synk {

namespace {

class Machine {
 public:
  Machine(const Fsm& fsm, SimState& state)
      : g_(fsm.graph), tt_(fsm.threads), s_(state), budget_(visit_budget(fsm.graph)) {}

  void start(NodeId init) { traverse(0, init); }

  void advance(ThreadId t) {
    const ThreadStatus st = s_.threads[t];
    if (st.kind != ThreadStatus::Kind::AtState) return;
    const Node& n = g_.node(st.node);
    if (auto gid = tt_.group_of_nd(n.id)) {
      advance_join(t, n, *gid);
      return;
    }
    for (EdgeId e : n.out) {
      const Edge& edge = g_.edge(e);
      if (edge.guard.join == JoinKind::None && holds(edge)) {
        fire(t, edge);
        return;
      }
    }
    stuck(n);
  }

 private:
  static std::size_t visit_budget(const FsmGraph& g) {
    std::size_t exits = 0;
    for (const Node& n : g.nodes()) {
      if (n.live && n.is_dummy() && n.role == DummyRole::AbortExit) ++exits;
    }
    return g.live_node_count() * (2 + exits) + 16;
  }

  bool holds(const Edge& e) const { return !e.guard.sig || evaluate_prev(*e.guard.sig, s_.env); }

  [[noreturn]] void stuck(const Node& n) const {
    throw Error(ErrorCode::StuckState, "no edge applies at node " + std::to_string(n.id) + " (" +
                                           display_name(n) + ")");
  }

  void run_actions(const Edge& e) {
    for (const auto& a : e.actions) {
      if (a.kind == Action::Kind::Emit) {
        s_.env.set_curr(a.name);
      } else {
        s_.env.declare(a.name, a.signal_kind);
      }
    }
  }

  void fire(ThreadId t, const Edge& e) {
    run_actions(e);
    traverse(t, e.dst);
  }

  void deactivate_group(GroupId gid) {
    for (ThreadId m : tt_.group(gid).members) {
      for (GroupId owned : tt_.groups_owned_by(m)) deactivate_group(owned);
      s_.threads[m] = ThreadStatus::inactive();
    }
  }

  bool all_done(GroupId gid) const {
    const auto& members = tt_.group(gid).members;
    return std::all_of(members.begin(), members.end(), [&](ThreadId m) {
      return s_.threads[m].kind == ThreadStatus::Kind::Done;
    });
  }

  void advance_join(ThreadId t, const Node& nd, GroupId gid) {
    for (EdgeId e : nd.out) {
      const Edge& edge = g_.edge(e);
      if (edge.guard.join == JoinKind::None && holds(edge)) {
        deactivate_group(gid);
        fire(t, edge);
        return;
      }
    }
    for (ThreadId m : tt_.group(gid).members) advance(m);
    const bool done = all_done(gid);
    for (EdgeId e : nd.out) {
      const Edge& edge = g_.edge(e);
      if (edge.guard.join == JoinKind::None) continue;
      if ((edge.guard.join == JoinKind::AllDone) != done || !holds(edge)) continue;
      if (edge.dst == nd.id && edge.actions.empty()) return;  // keep waiting
      deactivate_group(gid);
      fire(t, edge);
      return;
    }
    stuck(nd);
  }

  void fork(GroupId gid) {
    const ParGroup& grp = tt_.group(gid);
    deactivate_group(gid);
    const Node& f = g_.node(grp.fork);
    for (ThreadId m : grp.members) {
      const Edge* taken = nullptr;
      for (EdgeId e : f.out) {
        const Edge& edge = g_.edge(e);
        if (g_.node(edge.dst).thread == m && holds(edge)) {
          taken = &edge;
          break;
        }
      }
      if (!taken) stuck(f);
      fire(m, *taken);
    }
  }

  void traverse(ThreadId t, NodeId at) {
    for (;;) {
      if (++visits_ > budget_) {
        throw Error(ErrorCode::InternalError, "instantaneous traversal exceeded its visit budget");
      }
      const Node& n = g_.node(at);
      if (n.thread != t) {
        throw Error(ErrorCode::InternalError, "thread " + std::to_string(t) +
                                                  " reached node " + std::to_string(at) +
                                                  " of thread " + std::to_string(n.thread));
      }
      if (at == tt_.thread(t).end) {
        s_.threads[t] = ThreadStatus::done();
        return;
      }
      if (n.is_state()) {
        s_.threads[t] = ThreadStatus::at(at);
        return;
      }
      if (n.role == DummyRole::Fork) {
        if (auto gid = tt_.group_of_fork(at)) {
          fork(*gid);
          const Node& nd = g_.node(tt_.group(*gid).nd);
          if (!all_done(*gid)) {
            s_.threads[t] = ThreadStatus::at(nd.id);
            return;
          }
          // Every arm finished on entry: leave through the join at once.
          const Edge* exit = nullptr;
          for (EdgeId e : nd.out) {
            if (g_.edge(e).guard.join == JoinKind::AllDone) {
              exit = &g_.edge(e);
              break;
            }
          }
          if (!exit) stuck(nd);
          deactivate_group(*gid);
          run_actions(*exit);
          at = exit->dst;
          continue;
        }
      }
      const Edge* next = nullptr;
      for (EdgeId e : n.out) {
        const Edge& edge = g_.edge(e);
        if (edge.guard.join == JoinKind::None && holds(edge)) {
          next = &edge;
          break;
        }
      }
      if (!next) stuck(n);
      run_actions(*next);
      at = next->dst;
    }
  }

  const FsmGraph& g_;
  const ThreadTable& tt_;
  SimState& s_;
  std::size_t budget_;
  std::size_t visits_ = 0;
};

SimStep finish_tick(SimState state) {
  SimStep out;
  out.outputs = state.env.present(SignalKind::Output);
  state.env.end_of_tick();
  state.terminated = state.threads[0].kind == ThreadStatus::Kind::Done;
  ++state.tick;
  out.state = std::move(state);
  return out;
}

}  // namespace

SimStep sim_init(const Fsm& fsm, const SignalSet& inputs) {
  SimState state;
  state.threads.assign(fsm.threads.threads().size(), ThreadStatus::inactive());
  state.env = initial_env(fsm.signals);
  inject_inputs(state.env, inputs);
  Machine(fsm, state).start(fsm.init());
  return finish_tick(std::move(state));
}

SimStep sim_tick(const Fsm& fsm, SimState state, const SignalSet& inputs) {
  if (state.terminated) throw Error(ErrorCode::InternalError, "tick after termination");
  inject_inputs(state.env, inputs);
  Machine(fsm, state).advance(0);
  return finish_tick(std::move(state));
}

TraceResult run_trace_fsm(const Fsm& fsm, const TickTrace& inputs) {
  TraceResult result;
  const std::size_t ticks = std::max<std::size_t>(1, inputs.size());
  auto input_at = [&](std::size_t t) { return t < inputs.size() ? inputs.ticks[t] : SignalSet{}; };
  SimStep step = sim_init(fsm, input_at(0));
  result.outputs.ticks.push_back(step.outputs);
  for (std::size_t t = 1; t < ticks && !step.state.terminated; ++t) {
    step = sim_tick(fsm, std::move(step.state), input_at(t));
    result.outputs.ticks.push_back(step.outputs);
  }
  if (step.state.terminated) result.terminated_at = step.state.tick;
  return result;
}

}  // namespace synk
