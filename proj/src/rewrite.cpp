#include "synk/rewrite.hpp"

#include <map>
#include <set>

#include "synk/error.hpp"

namespace synk {

namespace {

template <class F>
void preorder(const Stmt& s, F&& visit) {
  visit(s);
  if (auto* seq = s.as<ast::Seq>()) {
    preorder(*seq->first, visit);
    preorder(*seq->second, visit);
  } else if (auto* loop = s.as<ast::Loop>()) {
    preorder(*loop->body, visit);
  } else if (auto* ite = s.as<ast::IfElse>()) {
    preorder(*ite->then_branch, visit);
    preorder(*ite->else_branch, visit);
  } else if (auto* ab = s.as<ast::Abort>()) {
    preorder(*ab->body, visit);
  } else if (auto* par = s.as<ast::Par>()) {
    for (const auto& arm : par->arms) preorder(*arm, visit);
  }
}

// ND labels follow source order, so they do not depend on build order.
std::map<const Stmt*, std::string> join_labels(const Stmt& root) {
  std::set<std::string> taken;
  preorder(root, [&](const Stmt& s) {
    if (auto* p = s.as<ast::Pause>()) taken.insert(p->label);
  });
  std::map<const Stmt*, std::string> out;
  std::size_t k = 0;
  preorder(root, [&](const Stmt& s) {
    if (!s.is<ast::Par>()) return;
    std::string label;
    do {
      label = k == 0 ? "ND" : "ND" + std::to_string(k);
      ++k;
    } while (taken.count(label) != 0);
    out.emplace(&s, label);
  });
  return out;
}

class Rewriter {
 public:
  Rewriter(Fsm& fsm, const RewriteOptions& options, std::map<const Stmt*, std::string> nd_labels)
      : fsm_(fsm), g_(fsm.graph), threads_(fsm.threads), options_(options),
        nd_labels_(std::move(nd_labels)) {}

  Fragment rewrite(const Stmt& s, ThreadId t) {
    ++fsm_.stats.visits;
    if (s.is<ast::Nothing>()) return instantaneous({}, t);
    if (auto* e = s.as<ast::Emit>()) return instantaneous({Action::emit(e->signal)}, t);
    if (auto* d = s.as<ast::SignalDecl>()) {
      return instantaneous({Action::declare(d->name, d->kind)}, t);
    }
    if (auto* p = s.as<ast::Pause>()) return pause(p->label, t);
    if (auto* seq = s.as<ast::Seq>()) {
      Fragment a, b;
      if (options_.seq_right_first) {
        b = rewrite(*seq->second, t);
        a = rewrite(*seq->first, t);
      } else {
        a = rewrite(*seq->first, t);
        b = rewrite(*seq->second, t);
      }
      g_.add_edge(a.end, b.init, Guard::always());
      return {a.init, b.end};
    }
    if (auto* loop = s.as<ast::Loop>()) {
      Fragment body = rewrite(*loop->body, t);
      g_.add_edge(body.end, body.init, Guard::always());
      return body;
    }
    if (auto* ite = s.as<ast::IfElse>()) return if_else(*ite, t);
    if (auto* ab = s.as<ast::Abort>()) return abort(*ab, t);
    if (auto* par = s.as<ast::Par>()) return parallel(*par, nd_labels_.at(&s), t);
    throw Error(ErrorCode::InternalError, "unknown statement kind");
  }

 private:
  Fragment instantaneous(std::vector<Action> actions, ThreadId t) {
    NodeId i = g_.add_dummy(DummyRole::Plain, t);
    NodeId e = g_.add_dummy(DummyRole::Plain, t);
    g_.add_edge(i, e, Guard::always(), std::move(actions));
    return {i, e};
  }

  Fragment pause(const std::string& label, ThreadId t) {
    NodeId i = g_.add_dummy(DummyRole::Plain, t);
    NodeId s = g_.add_state(label, t);
    NodeId e = g_.add_dummy(DummyRole::Plain, t);
    g_.add_edge(i, s, Guard::always());
    g_.add_edge(s, e, Guard::always());
    return {i, e};
  }

  Fragment if_else(const ast::IfElse& ite, ThreadId t) {
    Fragment then_f = rewrite(*ite.then_branch, t);
    Fragment else_f = rewrite(*ite.else_branch, t);
    NodeId i = g_.add_dummy(DummyRole::Plain, t);
    NodeId e = g_.add_dummy(DummyRole::Plain, t);
    g_.add_edge(i, then_f.init, Guard::when(ite.cond));
    g_.add_edge(i, else_f.init, Guard::when(SigExpr::negate(ite.cond)));
    g_.add_edge(then_f.end, e, Guard::always());
    g_.add_edge(else_f.end, e, Guard::always());
    return {i, e};
  }

  Fragment abort(const ast::Abort& ab, ThreadId t) {
    const NodeId first = g_.node_count();
    Fragment body = rewrite(*ab.body, t);
    const NodeId last = g_.node_count();
    NodeId i = g_.add_dummy(DummyRole::Plain, t);
    NodeId exit = g_.add_dummy(DummyRole::AbortExit, t);
    g_.add_edge(i, body.init, Guard::always());
    SigExprPtr negated = SigExpr::negate(ab.cond);
    for (NodeId n = first; n < last; ++n) {
      if (!g_.node(n).is_state()) continue;
      for (EdgeId e : g_.node(n).out) {
        Guard& guard = g_.edge(e).guard;
        guard.sig = conj_sig(negated, guard.sig);
      }
      g_.insert_edge(n, 0, exit, Guard::when(ab.cond));
    }
    // A body that ends in a loop never finishes normally.
    if (g_.node(body.end).out.empty()) g_.add_edge(body.end, exit, Guard::always());
    return {i, exit};
  }

  Fragment parallel(const ast::Par& par, const std::string& nd_label, ThreadId t) {
    ParGroup group;
    group.owner = t;
    std::vector<Fragment> arms;
    for (const auto& arm : par.arms) {
      ThreadId child = threads_.add_thread(t);
      Fragment f = rewrite(*arm, child);
      NodeId end = f.end;
      if (g_.node(end).out.empty()) {
        g_.node(end).role = DummyRole::ParEnd;
      } else {
        end = g_.add_dummy(DummyRole::ParEnd, child);
      }
      threads_.thread(child).init = f.init;
      threads_.thread(child).end = end;
      group.members.push_back(child);
      arms.push_back({f.init, end});
    }
    const GroupId gid = threads_.groups().size();
    group.fork = g_.add_dummy(DummyRole::Fork, t);
    group.nd = g_.add_state(nd_label, t);
    group.exit = g_.add_dummy(DummyRole::ParJoinExit, t);
    for (const auto& f : arms) g_.add_edge(group.fork, f.init, Guard::always());
    for (const auto& f : arms) g_.add_edge(f.end, group.nd, Guard::always());
    g_.add_edge(group.nd, group.exit, Guard{nullptr, JoinKind::AllDone, gid});
    g_.add_edge(group.nd, group.nd, Guard{nullptr, JoinKind::NotAllDone, gid});
    Fragment out{group.fork, group.exit};
    threads_.add_group(std::move(group));
    return out;
  }

  Fsm& fsm_;
  FsmGraph& g_;
  ThreadTable& threads_;
  const RewriteOptions& options_;
  std::map<const Stmt*, std::string> nd_labels_;
};

}  // namespace

Fsm build_fsm(const CheckedAst& program, const RewriteOptions& options) {
  Fsm fsm;
  fsm.signals = program.signals;
  fsm.stats.ast_nodes = program.node_count;
  fsm.stats.par_count = program.par_count;
  Rewriter rw(fsm, options, join_labels(*program.root));
  Fragment root = rw.rewrite(*program.root, 0);

  FsmGraph& g = fsm.graph;
  NodeId init = root.init;
  if (g.node(init).is_dummy() && g.node(init).role == DummyRole::Plain) {
    g.node(init).role = DummyRole::Init;
  } else {
    init = g.add_dummy(DummyRole::Init, 0);
    g.add_edge(init, root.init, Guard::always());
  }
  NodeId end = root.end;
  if (!g.node(end).out.empty()) end = g.add_dummy(DummyRole::Plain, 0);
  fsm.threads.thread(0).init = init;
  fsm.threads.thread(0).end = end;
  return fsm;
}

}  // namespace synk
