#include "synk/sos.hpp"

#include "synk/error.hpp"

namespace synk {

namespace {

class Budget {
 public:
  explicit Budget(std::size_t limit) : limit_(limit) {}
  void consume() {
    if (++used_ > limit_) {
      throw Error(ErrorCode::DivergenceGuard,
                  "reaction exceeded " + std::to_string(limit_) + " steps");
    }
  }

 private:
  std::size_t limit_;
  std::size_t used_ = 0;
};

struct StepResult {
  StmtPtr residual;  // null: terminated
  bool ticked = false;
};

StepResult step(SignalEnv& env, const StmtPtr& sp, Budget& budget);

StepResult run_to_boundary(SignalEnv& env, StmtPtr cur, Budget& budget) {
  while (cur) {
    budget.consume();
    StepResult r = step(env, cur, budget);
    if (r.ticked) return r;
    cur = std::move(r.residual);
  }
  return {};
}

StepResult step(SignalEnv& env, const StmtPtr& sp, Budget& budget) {
  const Stmt& s = *sp;
  if (s.is<ast::Nothing>()) return {};
  if (auto* e = s.as<ast::Emit>()) {
    if (env.at(e->signal).kind == SignalKind::Input) {
      throw Error(ErrorCode::KindMismatch, "cannot emit input signal '" + e->signal + "'", s.span);
    }
    env.set_curr(e->signal);
    return {};
  }
  if (auto* d = s.as<ast::SignalDecl>()) {
    env.declare(d->name, d->kind);
    return {};
  }
  if (s.is<ast::Pause>()) return {make_stmt(ast::Nothing{}, s.span), true};
  if (auto* seq = s.as<ast::Seq>()) {
    StepResult first = step(env, seq->first, budget);
    if (first.ticked) return {make_stmt(ast::Seq{first.residual, seq->second}, s.span), true};
    if (!first.residual) return {seq->second, false};
    return {make_stmt(ast::Seq{first.residual, seq->second}, s.span), false};
  }
  if (auto* loop = s.as<ast::Loop>()) {
    return {make_stmt(ast::Seq{loop->body, sp}, s.span), false};
  }
  if (auto* ite = s.as<ast::IfElse>()) {
    return {evaluate_prev(*ite->cond, env) ? ite->then_branch : ite->else_branch, false};
  }
  if (auto* ab = s.as<ast::Abort>()) {
    if (ab->resumed && evaluate_prev(*ab->cond, env)) return {};
    StepResult body = run_to_boundary(env, ab->body, budget);
    if (!body.ticked) return {};
    return {make_stmt(ast::Abort{ab->cond, body.residual, true}, s.span), true};
  }
  if (auto* par = s.as<ast::Par>()) {
    const SignalEnv base = env;
    std::vector<StmtPtr> arms;
    arms.reserve(par->arms.size());
    bool any_paused = false;
    for (const auto& arm : par->arms) {
      SignalEnv arm_env = base;
      StepResult r = run_to_boundary(arm_env, arm, budget);
      env.merge_from(arm_env);
      if (r.ticked) {
        any_paused = true;
        arms.push_back(r.residual);
      } else {
        arms.push_back(make_stmt(ast::Nothing{}, arm->span));
      }
    }
    if (!any_paused) return {};
    return {make_stmt(ast::Par{std::move(arms)}, s.span), true};
  }
  throw Error(ErrorCode::InternalError, "unknown statement kind");
}

std::size_t budget_for(const Stmt& s) { return 10 * node_count(s); }

}  // namespace

StepOutcome sos_step(SignalEnv env, const Residual& stmt) {
  if (stmt.terminated()) {
    throw Error(ErrorCode::InternalError, "sos_step on a terminated program");
  }
  Budget budget(budget_for(*stmt.stmt));
  StepResult r = step(env, stmt.stmt, budget);
  return StepOutcome{std::move(env), Residual{r.residual}, r.ticked};
}

Reaction react(SignalEnv env, const Residual& stmt) {
  if (stmt.terminated()) return Reaction{std::move(env), stmt, false};
  Budget budget(budget_for(*stmt.stmt));
  StepResult r = run_to_boundary(env, stmt.stmt, budget);
  return Reaction{std::move(env), Residual{r.residual}, r.ticked};
}

SignalEnv initial_env(const std::vector<SignalInfo>& signals) {
  SignalEnv env;
  for (const auto& s : signals) env.declare(s.name, s.kind);
  return env;
}

void inject_inputs(SignalEnv& env, const SignalSet& present) {
  for (const auto& name : present) {
    if (!env.contains(name) || env.at(name).kind != SignalKind::Input) {
      throw Error(ErrorCode::UnknownInputSignal, "'" + name + "' is not a declared input signal");
    }
    env.set_curr(name);
  }
}

TraceResult run_trace_sos(const CheckedAst& program, const TickTrace& inputs) {
  TraceResult result;
  SignalEnv env = initial_env(program.signals);
  Residual residual{program.root};
  const std::size_t ticks = std::max<std::size_t>(1, inputs.size());
  for (std::size_t t = 0; t < ticks; ++t) {
    if (t < inputs.size()) inject_inputs(env, inputs.ticks[t]);
    Reaction r = react(std::move(env), residual);
    env = std::move(r.env);
    residual = std::move(r.residual);
    result.outputs.ticks.push_back(env.present(SignalKind::Output));
    env.end_of_tick();
    if (residual.terminated()) {
      result.terminated_at = t + 1;
      break;
    }
  }
  return result;
}

}  // namespace synk
