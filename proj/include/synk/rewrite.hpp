#pragma once

#include <cstddef>
#include <vector>

#include "synk/fsm_graph.hpp"
#include "synk/validate.hpp"

namespace synk {

struct Fragment {
  NodeId init = kNoNode;
  NodeId end = kNoNode;
};

struct RewriteStats {
  std::size_t ast_nodes = 0;
  std::size_t par_count = 0;
  std::size_t visits = 0;  // rewrite calls, one per AST node
};

/// A compiled program: the graph, its threads and the signals it declares.
struct Fsm {
  FsmGraph graph;
  ThreadTable threads;
  std::vector<SignalInfo> signals;
  RewriteStats stats;

  NodeId init() const { return threads.thread(0).init; }
  NodeId end() const { return threads.thread(0).end; }
};

struct RewriteOptions {
  // Build the second operand of `;` before the first. The resulting graph is
  // the same up to node numbering.
  bool seq_right_first = false;
};

/// Builds the graph of a checked program in one pass over the AST.
///
/// Each construct yields a fragment (init, end):
///  - nothing/emit/declarations: two dummies and one action edge
///  - pause: I -> state -> E
///  - `;`: a.end -> b.init
///  - loop: back edge body.end -> body.init
///  - if: I branches on cond (first) and not cond, both ends join at E
///  - abort: every state built inside the body gets `cond -> E'` as its first
///    edge and `not cond` conjoined onto its other edges
///  - `||`: a Fork dummy, one child thread per arm, a join state ND owned by
///    the current thread, and an exit dummy taken when all arms are done
///
/// The root thread's init node gets role Init.
Fsm build_fsm(const CheckedAst& program, const RewriteOptions& options = {});

/// Upper bound on live nodes: 3 per AST node plus 3 per parallel.
inline std::size_t linear_node_bound(std::size_t ast_nodes, std::size_t pars) {
  return 3 * ast_nodes + 3 * pars;
}

}  // namespace synk
