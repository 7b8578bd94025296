#include "synk/validate.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace synk {

const SignalInfo* CheckedAst::find_signal(const std::string& name) const {
  for (const auto& s : signals) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::vector<std::string> CheckedAst::names_of(SignalKind kind) const {
  std::vector<std::string> out;
  for (const auto& s : signals) {
    if (s.kind == kind) out.push_back(s.name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_instantaneous_path(const Stmt& s) {
  if (s.is<ast::Nothing>() || s.is<ast::Emit>() || s.is<ast::SignalDecl>()) return true;
  if (s.is<ast::Pause>()) return false;
  if (auto* seq = s.as<ast::Seq>()) {
    return has_instantaneous_path(*seq->first) && has_instantaneous_path(*seq->second);
  }
  if (auto* ite = s.as<ast::IfElse>()) {
    return has_instantaneous_path(*ite->then_branch) || has_instantaneous_path(*ite->else_branch);
  }
  if (auto* ab = s.as<ast::Abort>()) return has_instantaneous_path(*ab->body);
  if (auto* loop = s.as<ast::Loop>()) return has_instantaneous_path(*loop->body);
  if (auto* par = s.as<ast::Par>()) {
    return std::all_of(par->arms.begin(), par->arms.end(),
                       [](const StmtPtr& a) { return has_instantaneous_path(*a); });
  }
  return true;
}

bool may_terminate(const Stmt& s) {
  if (s.is<ast::Loop>()) return false;
  if (auto* seq = s.as<ast::Seq>()) return may_terminate(*seq->first) && may_terminate(*seq->second);
  if (auto* ite = s.as<ast::IfElse>()) {
    return may_terminate(*ite->then_branch) || may_terminate(*ite->else_branch);
  }
  if (s.is<ast::Abort>()) return true;
  if (auto* par = s.as<ast::Par>()) {
    return std::all_of(par->arms.begin(), par->arms.end(),
                       [](const StmtPtr& a) { return may_terminate(*a); });
  }
  return true;
}

namespace {

// Parses "S<digits>" labels; returns -1 otherwise.
long long auto_label_index(const std::string& label) {
  if (label.size() < 2 || label[0] != 'S') return -1;
  if (label.size() > 12) return -1;
  for (std::size_t i = 1; i < label.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(label[i])) == 0) return -1;
  }
  return std::stoll(label.substr(1));
}

class Validator {
 public:
  ValidationResult run(const StmtPtr& root) {
    collect_labels(*root);
    long long max_user = -1;
    for (const auto& l : user_labels_) max_user = std::max(max_user, auto_label_index(l));
    next_auto_ = max_user + 1;

    StmtPtr checked = walk(root);

    ValidationResult result;
    result.diagnostics = diags_;
    if (!has_errors(diags_)) {
      CheckedAst program;
      program.root = checked;
      program.signals = signals_;
      program.node_count = node_count(*checked);
      program.par_count = par_count(*checked);
      for (const auto& d : diags_) {
        if (d.severity != Severity::Error) program.warnings.push_back(d);
      }
      result.program = std::move(program);
    }
    return result;
  }

 private:
  void error(DiagCode code, std::string message, const SourceSpan& span) {
    diags_.push_back(Diagnostic{Severity::Error, code, std::move(message), span});
  }
  void warning(DiagCode code, std::string message, const SourceSpan& span) {
    diags_.push_back(Diagnostic{Severity::Warning, code, std::move(message), span});
  }

  void collect_labels(const Stmt& s) {
    if (auto* p = s.as<ast::Pause>()) {
      if (!p->label.empty()) user_labels_.insert(p->label);
    } else if (auto* seq = s.as<ast::Seq>()) {
      collect_labels(*seq->first);
      collect_labels(*seq->second);
    } else if (auto* loop = s.as<ast::Loop>()) {
      collect_labels(*loop->body);
    } else if (auto* ite = s.as<ast::IfElse>()) {
      collect_labels(*ite->then_branch);
      collect_labels(*ite->else_branch);
    } else if (auto* ab = s.as<ast::Abort>()) {
      collect_labels(*ab->body);
    } else if (auto* par = s.as<ast::Par>()) {
      for (const auto& arm : par->arms) collect_labels(*arm);
    }
  }

  std::string fresh_label() {
    for (;;) {
      std::string candidate = "S" + std::to_string(next_auto_++);
      if (!user_labels_.count(candidate)) return candidate;
    }
  }

  void check_expr(const SigExpr& e) {
    if (e.op == SigExpr::Op::Ref) {
      if (!declared_.count(e.name)) {
        error(DiagCode::UndeclaredSignal, "signal '" + e.name + "' is not declared", e.span);
      }
      return;
    }
    if (e.lhs) check_expr(*e.lhs);
    if (e.rhs) check_expr(*e.rhs);
  }

  StmtPtr walk(const StmtPtr& sp) {
    const Stmt& s = *sp;
    if (auto* d = s.as<ast::SignalDecl>()) {
      auto it = declared_.find(d->name);
      if (it == declared_.end()) {
        declared_.emplace(d->name, d->kind);
        signals_.push_back(SignalInfo{d->name, d->kind});
      } else if (it->second != d->kind) {
        error(DiagCode::KindMismatch,
              "signal '" + d->name + "' redeclared as " + std::string(to_string(d->kind)) +
                  " (previously " + std::string(to_string(it->second)) + ")",
              s.span);
      }
      return sp;
    }
    if (s.is<ast::Nothing>()) return sp;
    if (auto* p = s.as<ast::Pause>()) {
      if (p->label.empty()) return make_stmt(ast::Pause{fresh_label()}, s.span);
      if (!seen_labels_.insert(p->label).second) {
        error(DiagCode::DuplicateLabel, "duplicate pause label '" + p->label + "'", s.span);
      }
      return sp;
    }
    if (auto* e = s.as<ast::Emit>()) {
      auto it = declared_.find(e->signal);
      if (it == declared_.end()) {
        error(DiagCode::UndeclaredSignal, "signal '" + e->signal + "' is not declared", s.span);
      } else if (it->second == SignalKind::Input) {
        error(DiagCode::EmitOnInput, "cannot emit input signal '" + e->signal + "'", s.span);
      }
      return sp;
    }
    if (auto* seq = s.as<ast::Seq>()) {
      StmtPtr first = walk(seq->first);
      if (!may_terminate(*seq->first)) {
        warning(DiagCode::UnreachableCode, "statement is unreachable", seq->second->span);
      }
      StmtPtr second = walk(seq->second);
      return make_stmt(ast::Seq{first, second}, s.span);
    }
    if (auto* loop = s.as<ast::Loop>()) {
      StmtPtr body = walk(loop->body);
      if (has_instantaneous_path(*loop->body)) {
        error(DiagCode::InstantaneousLoop, "loop body can complete without pausing", s.span);
      }
      return make_stmt(ast::Loop{body}, s.span);
    }
    if (auto* ite = s.as<ast::IfElse>()) {
      check_expr(*ite->cond);
      StmtPtr t = walk(ite->then_branch);
      StmtPtr e = walk(ite->else_branch);
      return make_stmt(ast::IfElse{ite->cond, t, e}, s.span);
    }
    if (auto* ab = s.as<ast::Abort>()) {
      check_expr(*ab->cond);
      StmtPtr body = walk(ab->body);
      return make_stmt(ast::Abort{ab->cond, body, false}, s.span);
    }
    if (auto* par = s.as<ast::Par>()) {
      std::vector<StmtPtr> arms;
      for (const auto& arm : par->arms) arms.push_back(walk(arm));
      return make_stmt(ast::Par{std::move(arms)}, s.span);
    }
    return sp;
  }

  std::set<std::string> user_labels_;
  std::set<std::string> seen_labels_;
  long long next_auto_ = 0;
  std::map<std::string, SignalKind> declared_;
  std::vector<SignalInfo> signals_;
  std::vector<Diagnostic> diags_;
};

}  // namespace

ValidationResult validate(const StmtPtr& root) { return Validator().run(root); }

}  // namespace synk
