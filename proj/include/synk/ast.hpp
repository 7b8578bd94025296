#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace synk {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class SignalKind { Input, Output, Local };

std::string_view to_string(SignalKind kind);

// Boolean expression over signal statuses. Nodes are immutable and shared.
struct SigExpr;
using SigExprPtr = std::shared_ptr<const SigExpr>;

struct SigExpr {
  enum class Op { Ref, Not, And, Or };

  Op op = Op::Ref;
  std::string name;
  SigExprPtr lhs;
  SigExprPtr rhs;
  SourceSpan span;

  static SigExprPtr ref(std::string name, SourceSpan span = {});
  static SigExprPtr negate(SigExprPtr operand);
  static SigExprPtr conj(SigExprPtr a, SigExprPtr b);
  static SigExprPtr disj(SigExprPtr a, SigExprPtr b);
};

bool structurally_equal(const SigExpr& a, const SigExpr& b);
void collect_signals(const SigExpr& expr, std::set<std::string>& out);

/// Evaluates `expr` with `status(name)` supplying each referenced signal.
template <class Status>
bool evaluate(const SigExpr& expr, Status&& status) {
  switch (expr.op) {
    case SigExpr::Op::Ref:
      return status(expr.name);
    case SigExpr::Op::Not:
      return !evaluate(*expr.lhs, status);
    case SigExpr::Op::And:
      return evaluate(*expr.lhs, status) && evaluate(*expr.rhs, status);
    case SigExpr::Op::Or:
      return evaluate(*expr.lhs, status) || evaluate(*expr.rhs, status);
  }
  return false;
}

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

namespace ast {

struct SignalDecl {
  SignalKind kind = SignalKind::Local;
  std::string name;
};
struct Nothing {};
struct Pause {
  std::string label;  // empty until labels are assigned
};
struct Emit {
  std::string signal;
};
struct Seq {
  StmtPtr first;
  StmtPtr second;
};
struct Loop {
  StmtPtr body;
};
struct IfElse {
  SigExprPtr cond;
  StmtPtr then_branch;
  StmtPtr else_branch;
};
struct Abort {
  SigExprPtr cond;
  StmtPtr body;
  // Set only on interpreter residuals: the body has paused at least once, so
  // the abort condition is checked before the body resumes.
  bool resumed = false;
};
struct Par {
  std::vector<StmtPtr> arms;
};

}  // namespace ast

struct Stmt {
  using Node = std::variant<ast::SignalDecl, ast::Nothing, ast::Pause, ast::Emit, ast::Seq,
                            ast::Loop, ast::IfElse, ast::Abort, ast::Par>;
  Node node;
  SourceSpan span;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
};

StmtPtr make_stmt(Stmt::Node node, SourceSpan span = {});

std::size_t node_count(const Stmt& stmt);
std::size_t par_count(const Stmt& stmt);

/// Structural equality ignoring source spans.
bool structurally_equal(const Stmt& a, const Stmt& b);

}  // namespace synk
