#include "synk/generator.hpp"

#include <algorithm>

#include "synk/validate.hpp"

namespace synk {

namespace {

class ProgramGen {
 public:
  ProgramGen(std::mt19937_64& rng, const GeneratorOptions& options) : rng_(rng), opts_(options) {}

  StmtPtr program() {
    const std::size_t budget = std::max<std::size_t>(opts_.max_signals, 2);
    std::size_t n_in = pick(1, std::min<std::size_t>(3, budget - 1));
    std::size_t n_out = pick(1, std::min<std::size_t>(3, budget - n_in));
    std::size_t n_loc = pick(0, std::min<std::size_t>(2, budget - n_in - n_out));
    static const char* in_names[] = {"A", "B", "C"};
    static const char* out_names[] = {"O", "P", "Q"};
    static const char* loc_names[] = {"X", "Y"};
    std::vector<StmtPtr> decls;
    for (std::size_t i = 0; i < n_in; ++i) add_decl(decls, in_names[i], SignalKind::Input);
    for (std::size_t i = 0; i < n_out; ++i) add_decl(decls, out_names[i], SignalKind::Output);
    for (std::size_t i = 0; i < n_loc; ++i) add_decl(decls, loc_names[i], SignalKind::Local);

    StmtPtr body = stmt(0);
    if (chance(0.5)) body = loop(body);
    for (auto it = decls.rbegin(); it != decls.rend(); ++it) {
      body = make_stmt(ast::Seq{*it, body});
    }
    return body;
  }

 private:
  std::size_t pick(std::size_t lo, std::size_t hi) {
    if (hi <= lo) return lo;
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  template <class T>
  const T& one_of(const std::vector<T>& v) {
    return v[pick(0, v.size() - 1)];
  }

  void add_decl(std::vector<StmtPtr>& decls, const char* name, SignalKind kind) {
    decls.push_back(make_stmt(ast::SignalDecl{kind, name}));
    readable_.push_back(name);
    if (kind != SignalKind::Input) emittable_.push_back(name);
  }

  StmtPtr loop(StmtPtr body) {
    if (has_instantaneous_path(*body)) body = make_stmt(ast::Seq{body, make_stmt(ast::Pause{})});
    return make_stmt(ast::Loop{body});
  }

  SigExprPtr expr(std::size_t depth) {
    if (depth >= 2 || chance(0.55)) return SigExpr::ref(one_of(readable_));
    switch (pick(0, 2)) {
      case 0: return SigExpr::negate(expr(depth + 1));
      case 1: return SigExpr::conj(expr(depth + 1), expr(depth + 1));
      default: return SigExpr::disj(expr(depth + 1), expr(depth + 1));
    }
  }

  StmtPtr leaf() {
    switch (pick(0, 5)) {
      case 0: return make_stmt(ast::Nothing{});
      case 1:
      case 2: return make_stmt(ast::Pause{});
      default: return make_stmt(ast::Emit{one_of(emittable_)});
    }
  }

  StmtPtr stmt(std::size_t depth) {
    if (depth >= opts_.max_depth || chance(0.15 + 0.15 * static_cast<double>(depth))) return leaf();
    switch (pick(0, 9)) {
      case 0:
      case 1:
      case 2: return make_stmt(ast::Seq{stmt(depth + 1), stmt(depth + 1)});
      case 3: return loop(stmt(depth + 1));
      case 4:
      case 5: return make_stmt(ast::IfElse{expr(0), stmt(depth + 1), stmt(depth + 1)});
      case 6:
      case 7: return make_stmt(ast::Abort{expr(0), stmt(depth + 1), false});
      default: {
        if (pars_ >= opts_.max_pars) return make_stmt(ast::Seq{stmt(depth + 1), leaf()});
        ++pars_;
        std::vector<StmtPtr> arms;
        const std::size_t n = chance(0.75) ? 2 : 3;
        for (std::size_t i = 0; i < n; ++i) arms.push_back(stmt(depth + 1));
        return make_stmt(ast::Par{std::move(arms)});
      }
    }
  }

  std::mt19937_64& rng_;
  const GeneratorOptions& opts_;
  std::vector<std::string> readable_;
  std::vector<std::string> emittable_;
  std::size_t pars_ = 0;
};

template <class Reorder>
StmtPtr map_pars(const StmtPtr& sp, Reorder& reorder) {
  const Stmt& s = *sp;
  if (auto* seq = s.as<ast::Seq>()) {
    return make_stmt(ast::Seq{map_pars(seq->first, reorder), map_pars(seq->second, reorder)}, s.span);
  }
  if (auto* loop = s.as<ast::Loop>()) return make_stmt(ast::Loop{map_pars(loop->body, reorder)}, s.span);
  if (auto* ite = s.as<ast::IfElse>()) {
    return make_stmt(ast::IfElse{ite->cond, map_pars(ite->then_branch, reorder),
                                 map_pars(ite->else_branch, reorder)},
                     s.span);
  }
  if (auto* ab = s.as<ast::Abort>()) {
    return make_stmt(ast::Abort{ab->cond, map_pars(ab->body, reorder), ab->resumed}, s.span);
  }
  if (auto* par = s.as<ast::Par>()) {
    std::vector<StmtPtr> arms;
    for (const auto& arm : par->arms) arms.push_back(map_pars(arm, reorder));
    reorder(arms);
    return make_stmt(ast::Par{std::move(arms)}, s.span);
  }
  return sp;
}

}  // namespace

StmtPtr generate_program(std::mt19937_64& rng, const GeneratorOptions& options) {
  return ProgramGen(rng, options).program();
}

TickTrace generate_trace(std::mt19937_64& rng, const std::vector<std::string>& inputs,
                         std::size_t ticks, double density) {
  std::bernoulli_distribution present(density);
  TickTrace trace;
  trace.ticks.resize(ticks);
  for (auto& tick : trace.ticks) {
    for (const auto& name : inputs) {
      if (present(rng)) tick.insert(name);
    }
  }
  return trace;
}

StmtPtr reverse_par_arms(const StmtPtr& stmt) {
  auto rev = [](std::vector<StmtPtr>& arms) { std::reverse(arms.begin(), arms.end()); };
  return map_pars(stmt, rev);
}

StmtPtr shuffle_par_arms(const StmtPtr& stmt, std::mt19937_64& rng) {
  auto shuf = [&](std::vector<StmtPtr>& arms) { std::shuffle(arms.begin(), arms.end(), rng); };
  return map_pars(stmt, shuf);
}

}  // namespace synk
