#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "synk/ast.hpp"

namespace synk {

using NodeId = std::size_t;
using EdgeId = std::size_t;
using ThreadId = std::size_t;
using GroupId = std::size_t;

inline constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);

enum class NodeKind { Dummy, State };
enum class DummyRole { Plain, Init, Fork, ParEnd, AbortExit, ParJoinExit };

std::string_view to_string(DummyRole role);

struct Node {
  NodeId id = 0;
  NodeKind kind = NodeKind::Dummy;
  DummyRole role = DummyRole::Plain;  // meaningful for dummies only
  std::string label;                  // pause label, or ND label of a join state
  ThreadId thread = 0;
  bool live = true;
  std::vector<EdgeId> out;  // priority order
  std::vector<EdgeId> in;   // unordered

  bool is_state() const { return kind == NodeKind::State; }
  bool is_dummy() const { return kind == NodeKind::Dummy; }
};

enum class JoinKind { None, AllDone, NotAllDone };

struct Guard {
  SigExprPtr sig;  // null means True
  JoinKind join = JoinKind::None;
  GroupId group = 0;

  static Guard always() { return Guard{}; }
  static Guard when(SigExprPtr sig) { return Guard{std::move(sig), JoinKind::None, 0}; }
  bool is_true() const { return sig == nullptr && join == JoinKind::None; }
};

struct Action {
  enum class Kind { Declare, Emit };
  Kind kind = Kind::Emit;
  std::string name;
  SignalKind signal_kind = SignalKind::Local;  // Declare only

  static Action emit(std::string name) { return Action{Kind::Emit, std::move(name), SignalKind::Output}; }
  static Action declare(std::string name, SignalKind kind) {
    return Action{Kind::Declare, std::move(name), kind};
  }
  friend bool operator==(const Action&, const Action&) = default;
};

struct Edge {
  EdgeId id = 0;
  NodeId src = 0;
  NodeId dst = 0;
  Guard guard;
  std::vector<Action> actions;
  std::size_t priority = 0;  // index in src's out list
  bool live = true;
};

/// Conjunction of two guard signal parts; null is True.
SigExprPtr conj_sig(const SigExprPtr& a, const SigExprPtr& b);

/// Append-only arena of nodes and edges. Removal marks records dead; ids are
/// never reused.
class FsmGraph {
 public:
  NodeId add_node(NodeKind kind, DummyRole role, std::string label, ThreadId thread);
  NodeId add_dummy(DummyRole role, ThreadId thread) { return add_node(NodeKind::Dummy, role, {}, thread); }
  NodeId add_state(std::string label, ThreadId thread) {
    return add_node(NodeKind::State, DummyRole::Plain, std::move(label), thread);
  }

  /// Appends an edge with the next free priority of `src`.
  EdgeId add_edge(NodeId src, NodeId dst, Guard guard, std::vector<Action> actions = {});
  /// Inserts an edge at priority `pos` of `src`, shifting later edges down.
  EdgeId insert_edge(NodeId src, std::size_t pos, NodeId dst, Guard guard,
                     std::vector<Action> actions = {});
  void remove_edge(EdgeId e);
  /// Moves the destination of `e` to `dst`, keeping its priority.
  void retarget_edge(EdgeId e, NodeId dst);
  /// Marks a node dead. The node must have no live edges.
  void kill_node(NodeId n);

  const Node& node(NodeId n) const;
  Node& node(NodeId n);
  const Edge& edge(EdgeId e) const;
  Edge& edge(EdgeId e);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t live_node_count() const;
  std::size_t live_state_count() const;
  std::size_t live_edge_count() const;
  bool has_self_loop(NodeId n) const;

 private:
  void check_node(NodeId n) const;
  void renumber(NodeId n);

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
};

struct ThreadInfo {
  ThreadId id = 0;
  std::optional<ThreadId> parent;
  NodeId init = kNoNode;
  NodeId end = kNoNode;
  std::optional<GroupId> group;  // group this thread is an arm of
};

struct ParGroup {
  GroupId id = 0;
  ThreadId owner = 0;
  std::vector<ThreadId> members;  // arm order
  NodeId fork = kNoNode;
  NodeId nd = kNoNode;
  NodeId exit = kNoNode;
};

/// Threads and parallel groups. Thread 0 is the root and always exists.
class ThreadTable {
 public:
  ThreadTable();

  ThreadId add_thread(ThreadId parent);
  GroupId add_group(ParGroup group);

  const ThreadInfo& thread(ThreadId t) const { return threads_.at(t); }
  ThreadInfo& thread(ThreadId t) { return threads_.at(t); }
  const ParGroup& group(GroupId g) const { return groups_.at(g); }
  const std::vector<ThreadInfo>& threads() const { return threads_; }
  const std::vector<ParGroup>& groups() const { return groups_; }

  std::optional<GroupId> group_of_fork(NodeId n) const;
  std::optional<GroupId> group_of_nd(NodeId n) const;
  std::vector<GroupId> groups_owned_by(ThreadId t) const;

  /// Replaces every node reference `from` with `to`.
  void remap(NodeId from, NodeId to);

 private:
  std::vector<ThreadInfo> threads_;
  std::vector<ParGroup> groups_;
};

std::string format_guard(const Guard& guard);
std::string format_actions(const std::vector<Action>& actions);
/// Short display name: the state label, or the dummy role.
std::string display_name(const Node& node);

/// Graphviz text of the live nodes: boxes for dummies, circles for states,
/// edges labelled `guard / actions`, ordered by node id then priority.
std::string to_dot(const FsmGraph& g, std::string_view name = "fsm");

}  // namespace synk
