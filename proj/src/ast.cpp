#include "synk/ast.hpp"

namespace synk {

std::string_view to_string(SignalKind kind) {
  switch (kind) {
    case SignalKind::Input:
      return "input";
    case SignalKind::Output:
      return "output";
    case SignalKind::Local:
      return "local";
  }
  return "?";
}

SigExprPtr SigExpr::ref(std::string name, SourceSpan span) {
  auto e = std::make_shared<SigExpr>();
  e->op = Op::Ref;
  e->name = std::move(name);
  e->span = span;
  return e;
}

SigExprPtr SigExpr::negate(SigExprPtr operand) {
  auto e = std::make_shared<SigExpr>();
  e->op = Op::Not;
  e->span = operand->span;
  e->lhs = std::move(operand);
  return e;
}

SigExprPtr SigExpr::conj(SigExprPtr a, SigExprPtr b) {
  auto e = std::make_shared<SigExpr>();
  e->op = Op::And;
  e->span = a->span;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

SigExprPtr SigExpr::disj(SigExprPtr a, SigExprPtr b) {
  auto e = std::make_shared<SigExpr>();
  e->op = Op::Or;
  e->span = a->span;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

bool structurally_equal(const SigExpr& a, const SigExpr& b) {
  if (a.op != b.op) return false;
  switch (a.op) {
    case SigExpr::Op::Ref:
      return a.name == b.name;
    case SigExpr::Op::Not:
      return structurally_equal(*a.lhs, *b.lhs);
    case SigExpr::Op::And:
    case SigExpr::Op::Or:
      return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
  return false;
}

void collect_signals(const SigExpr& expr, std::set<std::string>& out) {
  if (expr.op == SigExpr::Op::Ref) {
    out.insert(expr.name);
    return;
  }
  if (expr.lhs) collect_signals(*expr.lhs, out);
  if (expr.rhs) collect_signals(*expr.rhs, out);
}

StmtPtr make_stmt(Stmt::Node node, SourceSpan span) {
  return std::make_shared<const Stmt>(Stmt{std::move(node), span});
}

namespace {

template <class F>
void for_each_child(const Stmt& s, F&& f) {
  if (auto* seq = s.as<ast::Seq>()) {
    f(*seq->first);
    f(*seq->second);
  } else if (auto* loop = s.as<ast::Loop>()) {
    f(*loop->body);
  } else if (auto* ite = s.as<ast::IfElse>()) {
    f(*ite->then_branch);
    f(*ite->else_branch);
  } else if (auto* ab = s.as<ast::Abort>()) {
    f(*ab->body);
  } else if (auto* par = s.as<ast::Par>()) {
    for (const auto& arm : par->arms) f(*arm);
  }
}

}  // namespace

std::size_t node_count(const Stmt& stmt) {
  std::size_t n = 1;
  for_each_child(stmt, [&](const Stmt& c) { n += node_count(c); });
  return n;
}

std::size_t par_count(const Stmt& stmt) {
  std::size_t n = stmt.is<ast::Par>() ? 1 : 0;
  for_each_child(stmt, [&](const Stmt& c) { n += par_count(c); });
  return n;
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, ast::SignalDecl>) {
          return x.kind == y.kind && x.name == y.name;
        } else if constexpr (std::is_same_v<T, ast::Nothing>) {
          return true;
        } else if constexpr (std::is_same_v<T, ast::Pause>) {
          return x.label == y.label;
        } else if constexpr (std::is_same_v<T, ast::Emit>) {
          return x.signal == y.signal;
        } else if constexpr (std::is_same_v<T, ast::Seq>) {
          return structurally_equal(*x.first, *y.first) &&
                 structurally_equal(*x.second, *y.second);
        } else if constexpr (std::is_same_v<T, ast::Loop>) {
          return structurally_equal(*x.body, *y.body);
        } else if constexpr (std::is_same_v<T, ast::IfElse>) {
          return structurally_equal(*x.cond, *y.cond) &&
                 structurally_equal(*x.then_branch, *y.then_branch) &&
                 structurally_equal(*x.else_branch, *y.else_branch);
        } else if constexpr (std::is_same_v<T, ast::Abort>) {
          return x.resumed == y.resumed && structurally_equal(*x.cond, *y.cond) &&
                 structurally_equal(*x.body, *y.body);
        } else {
          if (x.arms.size() != y.arms.size()) return false;
          for (std::size_t i = 0; i < x.arms.size(); ++i) {
            if (!structurally_equal(*x.arms[i], *y.arms[i])) return false;
          }
          return true;
        }
      },
      a.node);
}

}  // namespace synk
