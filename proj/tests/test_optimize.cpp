#include <doctest.h>

#include <map>
#include <random>

#include "support.hpp"
#include "synk/error.hpp"
#include "synk/generator.hpp"
#include "synk/optimize.hpp"
#include "synk/printer.hpp"

using namespace synk;
using namespace synk::test;

namespace {

std::map<DummyRole, int> role_counts(const FsmGraph& g) {
  std::map<DummyRole, int> out;
  for (const Node& n : g.nodes()) {
    if (n.live && n.is_dummy()) ++out[n.role];
  }
  return out;
}

std::multiset<std::string> state_labels(const FsmGraph& g) {
  std::multiset<std::string> out;
  for (const Node& n : g.nodes()) {
    if (n.live && n.is_state()) out.insert(n.label);
  }
  return out;
}

bool has_code(const std::vector<Diagnostic>& ds, DiagCode c, Severity s) {
  for (const auto& d : ds) {
    if (d.code == c && d.severity == s) return true;
  }
  return false;
}

Fsm chain_fsm() {
  Fsm f;
  f.graph.add_dummy(DummyRole::Init, 0);
  f.threads.thread(0).init = 0;
  return f;
}

}  // namespace

TEST_CASE("ABRO after elimination: four states and the essential dummies") {
  Compiled c = compile_program(program(kAbroSource));
  CHECK(state_labels(c.fsm.graph) == std::multiset<std::string>{"ND", "S0", "S1", "S2"});
  auto roles = role_counts(c.fsm.graph);
  CHECK(roles[DummyRole::Init] == 1);
  CHECK(roles[DummyRole::Fork] == 1);
  CHECK(roles[DummyRole::ParEnd] == 2);
  CHECK(roles[DummyRole::AbortExit] == 1);
  CHECK(c.fsm.graph.live_node_count() < c.raw.graph.live_node_count());
  CHECK(c.determinism.empty());
}

TEST_CASE("ABRO after elimination: transitions out of the states") {
  Compiled c = compile_program(program(kAbroSource));
  const FsmGraph& g = c.fsm.graph;
  auto edges_of = [&](const std::string& label) {
    std::vector<std::string> out;
    for (const Node& n : g.nodes()) {
      if (!n.live || n.label != label) continue;
      for (EdgeId e : n.out) {
        const Edge& edge = g.edge(e);
        out.push_back(format_guard(edge.guard) + " / " + format_actions(edge.actions) + " -> " +
                      display_name(g.node(edge.dst)));
      }
    }
    return out;
  };
  CHECK(edges_of("S0") ==
        std::vector<std::string>{"R / {} -> AE", "not R and A / {} -> E", "not R and not A / {} -> S0"});
  CHECK(edges_of("ND") == std::vector<std::string>{"R / {} -> AE", "not R and alldone(g0) / emit O -> S2",
                                                   "not R and not alldone(g0) / {} -> ND"});
  CHECK(edges_of("S2") == std::vector<std::string>{"R / {} -> AE", "not R / {} -> S2"});
}

TEST_CASE("elimination keeps outputs on the benchmark scenarios") {
  for (const Benchmark& b : suite()) {
    Compiled c = compile_program(program(b.source));
    for (const Scenario& s : b.scenarios) {
      CHECK_MESSAGE(run_trace_fsm(c.raw, s.inputs) == run_trace_fsm(c.fsm, s.inputs), (b.name + "." + s.name));
    }
  }
}

TEST_CASE("fusion order does not change the result") {
  std::vector<CheckedAst> programs;
  for (const Benchmark& b : suite()) programs.push_back(program(b.source));
  std::mt19937_64 rng(31);
  for (int i = 0; i < 250; ++i) {
    ValidationResult v = validate(generate_program(rng));
    REQUIRE(v.ok());
    programs.push_back(*v.program);
  }
  for (const CheckedAst& p : programs) {
    Fsm raw = build_fsm(p);
    const std::string expect = canonical_form(eliminate_dummies(raw));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      REQUIRE_MESSAGE(canonical_form(eliminate_dummies(raw, {seed})) == expect, print_stmt(*p.root));
    }
  }
}

TEST_CASE("elimination is idempotent") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    ValidationResult v = validate(generate_program(rng));
    REQUIRE(v.ok());
    Fsm once = eliminate_dummies(build_fsm(*v.program));
    Fsm twice = eliminate_dummies(once);
    REQUIRE(canonical_form(once) == canonical_form(twice));
    CHECK(once.graph.live_node_count() == twice.graph.live_node_count());
  }
}

TEST_CASE("generated programs are deterministic after elimination") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    ValidationResult v = validate(generate_program(rng));
    REQUIRE(v.ok());
    Compiled c = compile_program(*v.program);
    REQUIRE_MESSAGE(!has_errors(c.determinism), print_stmt(*v.program->root));
  }
}

TEST_CASE("single-entry dummy: its edges move to the predecessor at the same priority") {
  Fsm f = chain_fsm();
  FsmGraph& g = f.graph;
  const NodeId s = g.add_state("S", 0);
  const NodeId d = g.add_dummy(DummyRole::Plain, 0);
  const NodeId t1 = g.add_state("T1", 0);
  const NodeId t2 = g.add_state("T2", 0);
  const NodeId u = g.add_state("U", 0);
  g.add_edge(0, s, Guard::always());
  g.add_edge(s, u, Guard::when(SigExpr::ref("R")));
  g.add_edge(s, d, Guard::when(SigExpr::negate(SigExpr::ref("R"))), {Action::emit("O")});
  g.add_edge(s, s, Guard::always());
  g.add_edge(d, t1, Guard::when(SigExpr::ref("A")), {Action::emit("P")});
  g.add_edge(d, t2, Guard::when(SigExpr::negate(SigExpr::ref("A"))));
  Fsm out = eliminate_dummies(f);
  CHECK_FALSE(out.graph.node(d).live);
  std::vector<std::string> got;
  for (EdgeId e : out.graph.node(s).out) {
    const Edge& edge = out.graph.edge(e);
    got.push_back(format_guard(edge.guard) + " / " + format_actions(edge.actions) + " -> " +
                  out.graph.node(edge.dst).label);
  }
  CHECK(got == std::vector<std::string>{"R / {} -> U", "not R and A / emit O; emit P -> T1",
                                        "not R and not A / emit O -> T2", "True / {} -> S"});
}

TEST_CASE("multi-entry dummy with one plain exit is bypassed") {
  Fsm f = chain_fsm();
  FsmGraph& g = f.graph;
  const NodeId a = g.add_state("A", 0);
  const NodeId b = g.add_state("B", 0);
  const NodeId d = g.add_dummy(DummyRole::Plain, 0);
  const NodeId t = g.add_state("T", 0);
  g.add_edge(0, a, Guard::always());
  g.add_edge(a, d, Guard::when(SigExpr::ref("X")), {Action::emit("O")});
  g.add_edge(a, b, Guard::always());
  g.add_edge(b, d, Guard::always());
  g.add_edge(d, t, Guard::always());
  Fsm out = eliminate_dummies(f);
  CHECK_FALSE(out.graph.node(d).live);
  CHECK(out.graph.edge(out.graph.node(a).out[0]).dst == t);
  CHECK(out.graph.edge(out.graph.node(a).out[0]).actions == std::vector<Action>{Action::emit("O")});
  CHECK(out.graph.edge(out.graph.node(b).out[0]).dst == t);
}

TEST_CASE("a multi-entry dummy whose exit acts, a sink and a self loop all stay") {
  Fsm f = chain_fsm();
  FsmGraph& g = f.graph;
  const NodeId a = g.add_state("A", 0);
  const NodeId d = g.add_dummy(DummyRole::Plain, 0);
  const NodeId loop = g.add_dummy(DummyRole::Plain, 0);
  const NodeId sink = g.add_dummy(DummyRole::Plain, 0);
  g.add_edge(0, a, Guard::always());
  g.add_edge(a, d, Guard::when(SigExpr::ref("X")));
  g.add_edge(a, d, Guard::always());
  g.add_edge(d, loop, Guard::always(), {Action::emit("O")});
  g.add_edge(loop, loop, Guard::when(SigExpr::ref("Y")));
  g.add_edge(loop, sink, Guard::always());
  Fsm out = eliminate_dummies(f);
  CHECK(out.graph.node(d).live);
  CHECK(out.graph.node(loop).live);
  CHECK(out.graph.node(sink).live);
}

TEST_CASE("two join conditions on one edge are refused") {
  Fsm f = chain_fsm();
  FsmGraph& g = f.graph;
  const NodeId s = g.add_state("S", 0);
  const NodeId d = g.add_dummy(DummyRole::Plain, 0);
  const NodeId t = g.add_state("T", 0);
  g.add_edge(0, s, Guard::always());
  g.add_edge(s, d, Guard{nullptr, JoinKind::AllDone, 0});
  g.add_edge(d, t, Guard{nullptr, JoinKind::NotAllDone, 1});
  try {
    eliminate_dummies(f);
    FAIL("expected JoinGuardCollision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::JoinGuardCollision);
  }
}

TEST_CASE("determinism check: stuck, ambiguous and unchecked states") {
  {
    FsmGraph g;
    const NodeId s = g.add_state("S", 0);
    g.add_edge(s, s, Guard::when(SigExpr::ref("A")));
    auto ds = check_determinism(g);
    CHECK(has_code(ds, DiagCode::StuckState, Severity::Error));
    CHECK(has_errors(ds));
  }
  {
    FsmGraph g;
    const NodeId s = g.add_state("S", 0);
    const NodeId t = g.add_state("T", 0);
    g.add_edge(s, t, Guard::when(SigExpr::ref("A")));
    g.add_edge(s, s, Guard::always());
    g.add_edge(t, t, Guard::always());
    auto ds = check_determinism(g);
    CHECK(has_code(ds, DiagCode::AmbiguousState, Severity::Note));
    CHECK_FALSE(has_errors(ds));
  }
  {
    FsmGraph g;
    const NodeId s = g.add_state("S", 0);
    SigExprPtr wide = SigExpr::ref("X0");
    for (int i = 1; i < 17; ++i) wide = SigExpr::conj(wide, SigExpr::ref("X" + std::to_string(i)));
    g.add_edge(s, s, Guard::when(wide));
    g.add_edge(s, s, Guard::always());
    auto ds = check_determinism(g);
    CHECK(has_code(ds, DiagCode::NotChecked, Severity::Warning));
  }
  {
    FsmGraph g;
    const NodeId s = g.add_state("S", 0);
    g.add_edge(s, s, Guard::when(SigExpr::ref("A")));
    g.add_edge(s, s, Guard::when(SigExpr::negate(SigExpr::ref("A"))));
    CHECK(check_determinism(g).empty());
  }
}

TEST_CASE("benchmarks compile without determinism errors") {
  for (const Benchmark& b : suite()) {
    Compiled c = compile_program(program(b.source));
    CHECK_MESSAGE(!has_errors(c.determinism), b.name);
  }
}

TEST_CASE("canonical form ignores node numbering") {
  CheckedAst p = program(kAbroSource);
  Fsm a = eliminate_dummies(build_fsm(p));
  Fsm b = eliminate_dummies(build_fsm(p, RewriteOptions{true}));
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(a).find("S0") != std::string::npos);
}
