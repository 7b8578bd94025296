#include "synk/printer.hpp"

#include <vector>

namespace synk {

namespace {

int precedence(SigExpr::Op op) {
  switch (op) {
    case SigExpr::Op::Or:
      return 1;
    case SigExpr::Op::And:
      return 2;
    case SigExpr::Op::Not:
      return 3;
    case SigExpr::Op::Ref:
      return 4;
  }
  return 4;
}

void print_expr_at(const SigExpr& e, int min_prec, std::string& out) {
  int prec = precedence(e.op);
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (e.op) {
    case SigExpr::Op::Ref:
      out += e.name;
      break;
    case SigExpr::Op::Not:
      out += "not ";
      print_expr_at(*e.lhs, 3, out);
      break;
    case SigExpr::Op::And:
      print_expr_at(*e.lhs, 2, out);
      out += " and ";
      print_expr_at(*e.rhs, 3, out);
      break;
    case SigExpr::Op::Or:
      print_expr_at(*e.lhs, 1, out);
      out += " or ";
      print_expr_at(*e.rhs, 2, out);
      break;
  }
  if (parens) out += ')';
}

class Printer {
 public:
  explicit Printer(bool multiline) : multiline_(multiline) {}

  std::string run(const Stmt& s) {
    sequence(s, 0);
    return std::move(out_);
  }

 private:
  void newline(int indent) {
    if (multiline_) {
      out_ += '\n';
      out_.append(static_cast<std::size_t>(indent) * 2, ' ');
    } else {
      out_ += ' ';
    }
  }
  void open_block(int indent) {
    out_ += '{';
    newline(indent + 1);
  }
  void close_block(int indent) {
    newline(indent);
    out_ += '}';
  }

  void sequence(const Stmt& s, int indent) {
    std::vector<const Stmt*> items;
    const Stmt* cur = &s;
    while (auto* seq = cur->as<ast::Seq>()) {
      items.push_back(seq->first.get());
      cur = seq->second.get();
    }
    items.push_back(cur);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) {
        out_ += ';';
        newline(indent);
      }
      if (items[i]->is<ast::Seq>()) {
        // A left-nested Seq only arises in residuals; braces keep its shape.
        open_block(indent);
        sequence(*items[i], indent + 1);
        close_block(indent);
      } else {
        statement(*items[i], indent);
      }
    }
  }

  void body(const Stmt& s, int indent) {
    open_block(indent);
    sequence(s, indent + 1);
    close_block(indent);
  }

  void statement(const Stmt& s, int indent) {
    if (auto* d = s.as<ast::SignalDecl>()) {
      if (d->kind == SignalKind::Input) out_ += "input ";
      if (d->kind == SignalKind::Output) out_ += "output ";
      out_ += "signal " + d->name;
    } else if (s.is<ast::Nothing>()) {
      out_ += "nothing";
    } else if (auto* p = s.as<ast::Pause>()) {
      if (!p->label.empty()) out_ += p->label + ": ";
      out_ += "pause";
    } else if (auto* e = s.as<ast::Emit>()) {
      out_ += "emit " + e->signal;
    } else if (auto* l = s.as<ast::Loop>()) {
      out_ += "loop ";
      body(*l->body, indent);
    } else if (auto* ite = s.as<ast::IfElse>()) {
      out_ += "if (" + print_expr(*ite->cond) + ") ";
      body(*ite->then_branch, indent);
      out_ += " else ";
      body(*ite->else_branch, indent);
    } else if (auto* ab = s.as<ast::Abort>()) {
      out_ += "abort (" + print_expr(*ab->cond) + ") ";
      body(*ab->body, indent);
    } else if (auto* par = s.as<ast::Par>()) {
      for (std::size_t i = 0; i < par->arms.size(); ++i) {
        if (i > 0) out_ += " || ";
        body(*par->arms[i], indent);
      }
    } else if (s.is<ast::Seq>()) {
      sequence(s, indent);
    }
  }

  bool multiline_;
  std::string out_;
};

}  // namespace

std::string print_expr(const SigExpr& expr) {
  std::string out;
  print_expr_at(expr, 0, out);
  return out;
}

std::string print_stmt(const Stmt& stmt) { return Printer(true).run(stmt) + "\n"; }

std::string print_inline(const Stmt& stmt) { return Printer(false).run(stmt); }

}  // namespace synk
