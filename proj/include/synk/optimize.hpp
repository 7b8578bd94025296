#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synk/diagnostics.hpp"
#include "synk/rewrite.hpp"

namespace synk {

struct EliminationOptions {
  // Fuse in a random order drawn from this seed instead of node order.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Removes Plain dummies (and join exits) that only pass control along.
///
/// A live, non-sink dummy D without a self loop is fused when
///  - it has exactly one incoming edge s -> D: that edge is replaced, at its
///    priority, by s -> x for every D -> x, guards conjoined and actions
///    concatenated; or
///  - its single outgoing edge is True with no actions: incoming edges are
///    redirected past it.
/// An edge leaving a join state keeps a guard that is only the negated abort
/// conditions, so D is not fused through such an edge when its own edges are
/// guarded. Roles Init, Fork, ParEnd and AbortExit are never fused. Thread
/// table references to fused nodes move to their successor. Dead records
/// stay in the arena.
/// Throws JoinGuardCollision if two join conditions would meet on one edge.
Fsm eliminate_dummies(Fsm fsm, const EliminationOptions& options = {});

/// Checks that every live state has exactly one applicable edge for each
/// valuation of the previous statuses its guards read (and of the join
/// status, where a join edge leaves it). Unmatched valuations are StuckState
/// errors. Overlapping edges with different effects get an AmbiguousState
/// note, as priority picks the first. More than 16 signals on one state
/// gives a NotChecked warning.
std::vector<Diagnostic> check_determinism(const FsmGraph& g);

/// Text form of the live graph independent of node, thread and group
/// numbering: nodes are numbered breadth-first from the root init following
/// priority order, then by thread table order, then by id.
std::string canonical_form(const Fsm& fsm);

}  // namespace synk
