#include "synk/optimize.hpp"

#include <deque>
#include <map>
#include <random>
#include <set>

#include "synk/error.hpp"
#include "synk/printer.hpp"

namespace synk {

namespace {

bool fusible_role(const Node& n) {
  return n.is_dummy() && (n.role == DummyRole::Plain || n.role == DummyRole::ParJoinExit);
}

class Eliminator {
 public:
  explicit Eliminator(Fsm& fsm) : g_(fsm.graph), threads_(fsm.threads) {}

  // Tries to fuse `d`; returns the nodes whose degree changed.
  std::optional<std::vector<NodeId>> try_fuse(NodeId d) {
    const Node& n = g_.node(d);
    if (!n.live || !fusible_role(n) || n.out.empty() || n.in.empty() || g_.has_self_loop(d)) {
      return std::nullopt;
    }
    if (n.in.size() == 1 && fuse_into_predecessor(d)) return touched_;
    if (n.out.size() == 1 && bypass(d)) return touched_;
    return std::nullopt;
  }

 private:
  bool fuse_into_predecessor(NodeId d) {
    const EdgeId in_id = g_.node(d).in.front();
    const Edge in = g_.edge(in_id);
    const std::vector<EdgeId> outs = g_.node(d).out;
    bool guarded = false;
    for (EdgeId o : outs) {
      if (in.guard.join != JoinKind::None && g_.edge(o).guard.join != JoinKind::None) {
        throw Error(ErrorCode::JoinGuardCollision,
                    "join conditions meet when fusing node " + std::to_string(d));
      }
      guarded = guarded || g_.edge(o).guard.sig != nullptr;
    }
    if (guarded && (in.guard.join != JoinKind::None || join_fed(in.src))) return false;
    touched_ = {in.src};
    g_.remove_edge(in_id);
    std::size_t pos = in.priority;
    for (EdgeId o : outs) {
      const Edge out = g_.edge(o);
      Guard guard;
      guard.sig = conj_sig(in.guard.sig, out.guard.sig);
      guard.join = in.guard.join != JoinKind::None ? in.guard.join : out.guard.join;
      guard.group = in.guard.join != JoinKind::None ? in.guard.group : out.guard.group;
      std::vector<Action> actions = in.actions;
      actions.insert(actions.end(), out.actions.begin(), out.actions.end());
      g_.insert_edge(in.src, pos++, out.dst, std::move(guard), std::move(actions));
      touched_.push_back(out.dst);
    }
    const NodeId successor = g_.edge(outs.front()).dst;
    for (EdgeId o : outs) g_.remove_edge(o);
    g_.kill_node(d);
    threads_.remap(d, successor);
    return true;
  }

  // True for a dummy reached from a join state through single-entry,
  // unguarded edges: it will end up fused into the join edge, which must
  // not collect guards.
  bool join_fed(NodeId n) const {
    for (;;) {
      const Node& node = g_.node(n);
      if (!fusible_role(node) || node.in.size() != 1) return false;
      // a guarded split never folds into the join edge, so it shields what follows
      for (EdgeId o : node.out) {
        if (g_.edge(o).guard.sig) return false;
      }
      const Edge& in = g_.edge(node.in.front());
      if (in.guard.join != JoinKind::None) return true;
      if (in.guard.sig || in.src == n) return false;
      n = in.src;
    }
  }

  bool bypass(NodeId d) {
    const EdgeId out_id = g_.node(d).out.front();
    const Edge& out = g_.edge(out_id);
    if (!out.guard.is_true() || !out.actions.empty()) return false;
    const NodeId target = out.dst;
    touched_ = {target};
    const std::vector<EdgeId> ins = g_.node(d).in;
    for (EdgeId e : ins) {
      touched_.push_back(g_.edge(e).src);
      g_.retarget_edge(e, target);
    }
    g_.remove_edge(out_id);
    g_.kill_node(d);
    threads_.remap(d, target);
    return true;
  }

  FsmGraph& g_;
  ThreadTable& threads_;
  std::vector<NodeId> touched_;
};

}  // namespace

Fsm eliminate_dummies(Fsm fsm, const EliminationOptions& options) {
  Eliminator elim(fsm);
  std::deque<NodeId> work;
  std::vector<char> queued(fsm.graph.node_count(), 1);
  for (NodeId n = 0; n < fsm.graph.node_count(); ++n) work.push_back(n);
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) rng.emplace(*options.shuffle_seed);

  while (!work.empty()) {
    if (rng) {
      std::uniform_int_distribution<std::size_t> pick(0, work.size() - 1);
      std::swap(work[pick(*rng)], work.front());
    }
    NodeId n = work.front();
    work.pop_front();
    queued[n] = 0;
    auto touched = elim.try_fuse(n);
    if (!touched) continue;
    for (NodeId t : *touched) {
      if (!queued[t] && fsm.graph.node(t).live) {
        queued[t] = 1;
        work.push_back(t);
      }
    }
  }
  // Whichever dummy the all-done edge now enters is the join exit, however
  // the fusions were ordered.
  for (const auto& grp : fsm.threads.groups()) {
    for (EdgeId e : fsm.graph.node(grp.nd).out) {
      const Edge& edge = fsm.graph.edge(e);
      if (edge.guard.join != JoinKind::AllDone) continue;
      Node& target = fsm.graph.node(edge.dst);
      if (target.is_dummy() && target.role == DummyRole::Plain) target.role = DummyRole::ParJoinExit;
    }
  }
  return fsm;
}

namespace {

std::string valuation_text(const std::vector<std::string>& names, std::uint64_t bits,
                           std::optional<bool> all_done) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!out.empty()) out += ", ";
    out += names[i] + ((bits >> i) & 1U ? "=1" : "=0");
  }
  if (all_done) out += std::string(out.empty() ? "" : ", ") + "alldone=" + (*all_done ? "1" : "0");
  return out.empty() ? "(no signals)" : out;
}

bool join_matches(JoinKind join, std::optional<bool> all_done) {
  switch (join) {
    case JoinKind::None: return true;
    case JoinKind::AllDone: return all_done.value_or(false);
    case JoinKind::NotAllDone: return !all_done.value_or(false);
  }
  return false;
}

}  // namespace

std::vector<Diagnostic> check_determinism(const FsmGraph& g) {
  std::vector<Diagnostic> diags;
  for (const Node& n : g.nodes()) {
    if (!n.live || !n.is_state()) continue;
    std::set<std::string> signal_set;
    bool has_join = false;
    for (EdgeId e : n.out) {
      const Edge& edge = g.edge(e);
      if (edge.guard.sig) collect_signals(*edge.guard.sig, signal_set);
      has_join = has_join || edge.guard.join != JoinKind::None;
    }
    std::vector<std::string> names(signal_set.begin(), signal_set.end());
    if (names.size() > 16) {
      diags.push_back({Severity::Warning, DiagCode::NotChecked,
                       "state " + n.label + " reads " + std::to_string(names.size()) +
                           " signals; determinism not checked",
                       {}});
      continue;
    }
    std::vector<std::optional<bool>> joins = {std::nullopt};
    if (has_join) joins = {false, true};
    bool stuck_reported = false;
    bool ambiguous_reported = false;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size()); ++bits) {
      auto status = [&](const std::string& name) {
        auto it = std::lower_bound(names.begin(), names.end(), name);
        return ((bits >> static_cast<std::size_t>(it - names.begin())) & 1U) != 0;
      };
      for (auto all_done : joins) {
        std::vector<EdgeId> matches;
        for (EdgeId e : n.out) {
          const Edge& edge = g.edge(e);
          if (!join_matches(edge.guard.join, all_done)) continue;
          if (edge.guard.sig && !evaluate(*edge.guard.sig, status)) continue;
          matches.push_back(e);
        }
        if (matches.empty() && !stuck_reported) {
          stuck_reported = true;
          diags.push_back({Severity::Error, DiagCode::StuckState,
                           "state " + n.label + " has no applicable edge when " +
                               valuation_text(names, bits, all_done),
                           {}});
        }
        if (matches.size() > 1 && !ambiguous_reported) {
          const Edge& first = g.edge(matches.front());
          for (std::size_t i = 1; i < matches.size(); ++i) {
            const Edge& other = g.edge(matches[i]);
            if (other.dst != first.dst || other.actions != first.actions) {
              ambiguous_reported = true;
              diags.push_back({Severity::Note, DiagCode::AmbiguousState,
                               "state " + n.label + " has overlapping edges when " +
                                   valuation_text(names, bits, all_done) +
                                   "; the first by priority is taken",
                               {}});
              break;
            }
          }
        }
      }
    }
  }
  return diags;
}

namespace {

void flatten_and(const SigExpr& e, std::vector<const SigExpr*>& out) {
  if (e.op == SigExpr::Op::And) {
    flatten_and(*e.lhs, out);
    flatten_and(*e.rhs, out);
  } else {
    out.push_back(&e);
  }
}

// Conjunction chains print flat, so fusion order does not show.
std::string canon_expr(const SigExpr& e) {
  switch (e.op) {
    case SigExpr::Op::Ref: return e.name;
    case SigExpr::Op::Not: return "!" + canon_expr(*e.lhs);
    case SigExpr::Op::Or: return "(" + canon_expr(*e.lhs) + " | " + canon_expr(*e.rhs) + ")";
    case SigExpr::Op::And: {
      std::vector<const SigExpr*> parts;
      flatten_and(e, parts);
      std::string out = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " & " : "") + canon_expr(*parts[i]);
      return out + ")";
    }
  }
  return "?";
}

}  // namespace

std::string canonical_form(const Fsm& fsm) {
  const FsmGraph& g = fsm.graph;
  std::vector<NodeId> order;
  std::vector<char> seen(g.node_count(), 0);
  auto visit = [&](NodeId n) {
    if (n == kNoNode || !g.node(n).live || seen[n]) return;
    seen[n] = 1;
    order.push_back(n);
  };
  std::size_t expanded = 0;
  auto expand = [&] {
    for (; expanded < order.size(); ++expanded) {
      for (EdgeId e : g.node(order[expanded]).out) visit(g.edge(e).dst);
    }
  };
  visit(fsm.init());
  expand();
  // Unreachable parts: threads in order of their first reached node.
  std::vector<std::size_t> first_seen(fsm.threads.threads().size(), order.size());
  for (std::size_t i = order.size(); i-- > 0;) first_seen[g.node(order[i]).thread] = i;
  std::vector<ThreadId> thread_order;
  for (const auto& t : fsm.threads.threads()) thread_order.push_back(t.id);
  std::stable_sort(thread_order.begin(), thread_order.end(),
                   [&](ThreadId a, ThreadId b) { return first_seen[a] < first_seen[b]; });
  for (ThreadId t : thread_order) {
    visit(fsm.threads.thread(t).init);
    visit(fsm.threads.thread(t).end);
    expand();
  }
  for (const auto& grp : fsm.threads.groups()) {
    visit(grp.fork);
    visit(grp.nd);
    visit(grp.exit);
    expand();
  }
  for (const auto& n : g.nodes()) {
    if (n.live) visit(n.id);
    expand();
  }

  std::map<NodeId, std::size_t> node_index;
  std::map<ThreadId, std::size_t> thread_index;
  for (NodeId n : order) {
    node_index.emplace(n, node_index.size());
    thread_index.emplace(g.node(n).thread, thread_index.size());
  }
  std::map<GroupId, std::size_t> group_index;
  std::vector<const ParGroup*> groups;
  for (const auto& grp : fsm.threads.groups()) groups.push_back(&grp);
  std::sort(groups.begin(), groups.end(), [&](const ParGroup* a, const ParGroup* b) {
    auto ia = node_index.count(a->nd) ? node_index.at(a->nd) : order.size() + a->id;
    auto ib = node_index.count(b->nd) ? node_index.at(b->nd) : order.size() + b->id;
    return ia < ib;
  });
  for (const ParGroup* grp : groups) group_index.emplace(grp->id, group_index.size());

  auto node_ref = [&](NodeId n) {
    auto it = node_index.find(n);
    return it == node_index.end() ? std::string("-") : "n" + std::to_string(it->second);
  };
  auto thread_ref = [&](ThreadId t) {
    auto it = thread_index.find(t);
    return it == thread_index.end() ? std::string("t?") : "t" + std::to_string(it->second);
  };

  std::string out;
  for (NodeId id : order) {
    const Node& n = g.node(id);
    out += node_ref(id) + " " + (n.is_state() ? "state " + n.label : std::string(to_string(n.role))) +
           " " + thread_ref(n.thread) + "\n";
    for (EdgeId e : n.out) {
      const Edge& edge = g.edge(e);
      std::string guard = edge.guard.sig ? canon_expr(*edge.guard.sig) : "True";
      if (edge.guard.join != JoinKind::None) {
        guard += edge.guard.join == JoinKind::AllDone ? " alldone g" : " notalldone g";
        guard += std::to_string(group_index.at(edge.guard.group));
      }
      out += "  -> " + node_ref(edge.dst) + " [" + guard + " / " + format_actions(edge.actions) + "]\n";
    }
  }
  std::vector<const ThreadInfo*> threads;
  for (const auto& t : fsm.threads.threads()) threads.push_back(&t);
  std::sort(threads.begin(), threads.end(), [&](const ThreadInfo* a, const ThreadInfo* b) {
    auto ia = thread_index.count(a->id) ? thread_index.at(a->id) : thread_index.size() + a->id;
    auto ib = thread_index.count(b->id) ? thread_index.at(b->id) : thread_index.size() + b->id;
    return ia < ib;
  });
  for (const ThreadInfo* tp : threads) {
    const ThreadInfo& t = *tp;
    out += "thread " + thread_ref(t.id) + " init " + node_ref(t.init) + " end " + node_ref(t.end) +
           "\n";
  }
  for (const ParGroup* grp : groups) {
    out += "group g" + std::to_string(group_index.at(grp->id)) + " owner " + thread_ref(grp->owner) +
           " fork " + node_ref(grp->fork) + " nd " + node_ref(grp->nd) + " exit " +
           node_ref(grp->exit) + " members";
    for (ThreadId m : grp->members) out += " " + thread_ref(m);
    out += "\n";
  }
  return out;
}

}  // namespace synk
