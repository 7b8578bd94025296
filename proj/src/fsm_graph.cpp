#include "synk/fsm_graph.hpp"

#include <algorithm>

#include "synk/error.hpp"
#include "synk/printer.hpp"

namespace synk {

std::string_view to_string(DummyRole role) {
  switch (role) {
    case DummyRole::Plain: return "Plain";
    case DummyRole::Init: return "Init";
    case DummyRole::Fork: return "Fork";
    case DummyRole::ParEnd: return "ParEnd";
    case DummyRole::AbortExit: return "AbortExit";
    case DummyRole::ParJoinExit: return "ParJoinExit";
  }
  return "?";
}

SigExprPtr conj_sig(const SigExprPtr& a, const SigExprPtr& b) {
  if (!a) return b;
  if (!b) return a;
  return SigExpr::conj(a, b);
}

NodeId FsmGraph::add_node(NodeKind kind, DummyRole role, std::string label, ThreadId thread) {
  Node n;
  n.id = nodes_.size();
  n.kind = kind;
  n.role = role;
  n.label = std::move(label);
  n.thread = thread;
  nodes_.push_back(std::move(n));
  return nodes_.back().id;
}

void FsmGraph::check_node(NodeId n) const {
  if (n >= nodes_.size() || !nodes_[n].live) {
    throw Error(ErrorCode::UnknownNode, "no node " + std::to_string(n));
  }
}

void FsmGraph::renumber(NodeId n) {
  auto& out = nodes_[n].out;
  for (std::size_t i = 0; i < out.size(); ++i) edges_[out[i]].priority = i;
}

EdgeId FsmGraph::add_edge(NodeId src, NodeId dst, Guard guard, std::vector<Action> actions) {
  check_node(src);
  return insert_edge(src, nodes_[src].out.size(), dst, std::move(guard), std::move(actions));
}

EdgeId FsmGraph::insert_edge(NodeId src, std::size_t pos, NodeId dst, Guard guard,
                             std::vector<Action> actions) {
  check_node(src);
  check_node(dst);
  Edge e;
  e.id = edges_.size();
  e.src = src;
  e.dst = dst;
  e.guard = std::move(guard);
  e.actions = std::move(actions);
  edges_.push_back(std::move(e));
  auto& out = nodes_[src].out;
  pos = std::min(pos, out.size());
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(pos), edges_.back().id);
  nodes_[dst].in.push_back(edges_.back().id);
  renumber(src);
  return edges_.back().id;
}

void FsmGraph::remove_edge(EdgeId id) {
  Edge& e = edge(id);
  if (!e.live) return;
  e.live = false;
  auto& out = nodes_[e.src].out;
  out.erase(std::find(out.begin(), out.end(), id));
  auto& in = nodes_[e.dst].in;
  in.erase(std::find(in.begin(), in.end(), id));
  renumber(e.src);
}

void FsmGraph::retarget_edge(EdgeId id, NodeId dst) {
  check_node(dst);
  Edge& e = edge(id);
  auto& in = nodes_[e.dst].in;
  in.erase(std::find(in.begin(), in.end(), id));
  e.dst = dst;
  nodes_[dst].in.push_back(id);
}

void FsmGraph::kill_node(NodeId n) {
  check_node(n);
  if (!nodes_[n].out.empty() || !nodes_[n].in.empty()) {
    throw Error(ErrorCode::InternalError, "killing node " + std::to_string(n) + " with live edges");
  }
  nodes_[n].live = false;
}

const Node& FsmGraph::node(NodeId n) const {
  if (n >= nodes_.size()) throw Error(ErrorCode::UnknownNode, "no node " + std::to_string(n));
  return nodes_[n];
}

Node& FsmGraph::node(NodeId n) {
  if (n >= nodes_.size()) throw Error(ErrorCode::UnknownNode, "no node " + std::to_string(n));
  return nodes_[n];
}

const Edge& FsmGraph::edge(EdgeId e) const {
  if (e >= edges_.size()) throw Error(ErrorCode::InternalError, "no edge " + std::to_string(e));
  return edges_[e];
}

Edge& FsmGraph::edge(EdgeId e) {
  if (e >= edges_.size()) throw Error(ErrorCode::InternalError, "no edge " + std::to_string(e));
  return edges_[e];
}

std::size_t FsmGraph::live_node_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.live; }));
}

std::size_t FsmGraph::live_state_count() const {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(), [](const Node& n) { return n.live && n.is_state(); }));
}

std::size_t FsmGraph::live_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.live; }));
}

bool FsmGraph::has_self_loop(NodeId n) const {
  const auto& out = node(n).out;
  return std::any_of(out.begin(), out.end(), [&](EdgeId e) { return edges_[e].dst == n; });
}

ThreadTable::ThreadTable() { threads_.push_back(ThreadInfo{}); }

ThreadId ThreadTable::add_thread(ThreadId parent) {
  ThreadInfo t;
  t.id = threads_.size();
  t.parent = parent;
  threads_.push_back(t);
  return t.id;
}

GroupId ThreadTable::add_group(ParGroup group) {
  group.id = groups_.size();
  for (ThreadId m : group.members) threads_.at(m).group = group.id;
  groups_.push_back(std::move(group));
  return groups_.back().id;
}

std::optional<GroupId> ThreadTable::group_of_fork(NodeId n) const {
  for (const auto& g : groups_) {
    if (g.fork == n) return g.id;
  }
  return std::nullopt;
}

std::optional<GroupId> ThreadTable::group_of_nd(NodeId n) const {
  for (const auto& g : groups_) {
    if (g.nd == n) return g.id;
  }
  return std::nullopt;
}

std::vector<GroupId> ThreadTable::groups_owned_by(ThreadId t) const {
  std::vector<GroupId> out;
  for (const auto& g : groups_) {
    if (g.owner == t) out.push_back(g.id);
  }
  return out;
}

void ThreadTable::remap(NodeId from, NodeId to) {
  auto fix = [&](NodeId& n) {
    if (n == from) n = to;
  };
  for (auto& t : threads_) {
    fix(t.init);
    fix(t.end);
  }
  for (auto& g : groups_) {
    fix(g.fork);
    fix(g.nd);
    fix(g.exit);
  }
}

std::string format_guard(const Guard& guard) {
  std::string out;
  if (guard.sig) out = print_expr(*guard.sig);
  if (guard.join != JoinKind::None) {
    std::string j = (guard.join == JoinKind::AllDone ? "alldone(g" : "not alldone(g") +
                    std::to_string(guard.group) + ")";
    if (out.empty()) {
      out = j;
    } else {
      if (guard.sig->op == SigExpr::Op::Or) out = "(" + out + ")";
      out += " and " + j;
    }
  }
  return out.empty() ? "True" : out;
}

std::string format_actions(const std::vector<Action>& actions) {
  std::string out;
  for (const auto& a : actions) {
    if (!out.empty()) out += "; ";
    if (a.kind == Action::Kind::Emit) {
      out += "emit " + a.name;
    } else {
      out += std::string(to_string(a.signal_kind)) + " " + a.name;
    }
  }
  return out.empty() ? "{}" : out;
}

std::string display_name(const Node& node) {
  if (node.is_state()) return node.label;
  switch (node.role) {
    case DummyRole::Plain: return "D";
    case DummyRole::Init: return "I";
    case DummyRole::Fork: return "Fork";
    case DummyRole::ParEnd: return "E";
    case DummyRole::AbortExit: return "AE";
    case DummyRole::ParJoinExit: return "PJ";
  }
  return "?";
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const FsmGraph& g, std::string_view name) {
  std::string out = "digraph " + std::string(name) + " {\n";
  for (const auto& n : g.nodes()) {
    if (!n.live) continue;
    out += "  n" + std::to_string(n.id) + " [shape=" + (n.is_state() ? "circle" : "box") +
           ", label=\"" + dot_escape(display_name(n)) + "\", thread=" + std::to_string(n.thread) +
           "];\n";
  }
  for (const auto& n : g.nodes()) {
    if (!n.live) continue;
    for (EdgeId id : n.out) {
      const Edge& e = g.edge(id);
      out += "  n" + std::to_string(e.src) + " -> n" + std::to_string(e.dst) + " [label=\"" +
             dot_escape(format_guard(e.guard) + " / " + format_actions(e.actions)) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace synk
