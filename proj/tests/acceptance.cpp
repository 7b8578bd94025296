// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "synk/benchsuite.hpp"
#include "synk/cli.hpp"
#include "synk/codegen.hpp"
#include "synk/generator.hpp"
#include "synk/optimize.hpp"
#include "synk/parser.hpp"
#include "synk/pipeline.hpp"
#include "synk/printer.hpp"
#include "synk/simulate.hpp"
#include "synk/sos.hpp"

using namespace synk;
using Clock = std::chrono::steady_clock;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double took = seconds_since(t0);
  if (o.ok && took > budget_s) {
    std::ostringstream why;
    why << "over the " << budget_s << " s budget";
    o.fail(why.str());
  }
  if (!o.ok) ++failures;
  std::printf("%s [%d] %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, name.c_str(), took,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::string cli_out(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::vector<std::string> full{"synkc"};
  full.insert(full.end(), args.begin(), args.end());
  if (run_cli(full, out, err) != 0) return "exit!=0: " + err.str();
  return out.str();
}

std::string live_labels(const FsmGraph& g) {
  std::multiset<std::string> labels;
  for (const Node& n : g.nodes()) {
    if (n.live && n.is_state()) labels.insert(n.label);
  }
  std::string s;
  for (const auto& l : labels) s += (s.empty() ? "" : ",") + l;
  return s;
}

// `k` copies of the ABRO body in sequence, pauses relabelled per copy.
std::string abro_chain(int k) {
  std::string body(kAbroSource);
  body = body.substr(body.find("loop {"));
  std::string src = "input signal A, B, R;\noutput signal O;\n";
  for (int i = 0; i < k; ++i) {
    std::string copy = body;
    for (const char* l : {"S0", "S1", "S2"}) {
      const std::string from = std::string(l) + ":";
      const std::string to = std::string(l) + "_" + std::to_string(i) + ":";
      for (auto at = copy.find(from); at != std::string::npos; at = copy.find(from, at + to.size())) {
        copy.replace(at, from.size(), to);
      }
    }
    src += copy + (i + 1 < k ? ";\n" : "\n");
  }
  return src;
}

// Seconds per full compile (frontend to emitted source), best of several
// batches, each batch long enough to be measurable.
double compile_time(const std::string& src) {
  auto once = [&] {
    Compiled c = compile_program(load_program(src));
    return emit_typestate(c.fsm).size();
  };
  std::size_t sink = once();
  double best = 1e9;
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t reps = 0;
    const auto t0 = Clock::now();
    do {
      sink += once();
      ++reps;
    } while (seconds_since(t0) < 0.05);
    best = std::min(best, seconds_since(t0) / static_cast<double>(reps));
  }
  if (sink == 0) std::puts("");
  return best;
}

std::vector<StmtPtr> permutations_of(const StmtPtr& root, std::mt19937_64& rng) {
  std::vector<StmtPtr> out{reverse_par_arms(root)};
  for (int i = 0; i < 4; ++i) out.push_back(shuffle_par_arms(root, rng));
  return out;
}

}  // namespace

int main() {
  const auto suite_all = suite();
  const fs::path traces = default_suite_dir() / "traces";

  criterion(1, "ABRO timing scenarios N1-N3 on interp and sim", 1.0, [&] {
    Outcome o;
    const std::string abro = (default_suite_dir() / "abro.syn").string();
    const std::map<std::string, std::string> expect{{"n1", "-\nO\n"}, {"n2", "-\n-\n"}, {"n3", "-\n-\nO\n"}};
    for (const auto& [scenario, want] : expect) {
      const std::string in = (traces / ("abro." + scenario + ".in.trace")).string();
      for (const char* cmd : {"interp", "sim"}) {
        const std::string got = cli_out({cmd, abro, "--trace", in});
        if (got != want) o.fail(std::string(cmd) + " " + scenario + " gave " + got);
      }
    }
    return o;
  });

  criterion(2, "pause; emit A gives [{},{A}] and terminates at tick 2", 1.0, [&] {
    Outcome o;
    CheckedAst p = load_program("output signal A;\npause;\nemit A\n");
    TraceResult r = run_trace_sos(p, parse_trace("-\n-\n-\n"));
    if (format_trace(r.outputs) != "-\nA\n") o.fail("outputs " + format_trace(r.outputs));
    if (r.terminated_at != std::optional<std::size_t>{2}) o.fail("termination tick differs");
    return o;
  });

  criterion(3, "ABRO graph after elimination: states S0 S1 S2 ND, essential dummies", 1.0, [&] {
    Outcome o;
    Compiled c = compile_program(load_program(kAbroSource));
    if (live_labels(c.fsm.graph) != "ND,S0,S1,S2") o.fail("states " + live_labels(c.fsm.graph));
    std::map<DummyRole, int> roles;
    for (const Node& n : c.fsm.graph.nodes()) {
      if (n.live && n.is_dummy()) ++roles[n.role];
    }
    if (roles[DummyRole::Init] != 1) o.fail("Init count");
    if (roles[DummyRole::Fork] != 1) o.fail("Fork count");
    if (roles[DummyRole::ParEnd] != 2) o.fail("ParEnd count");
    if (roles[DummyRole::AbortExit] != 1) o.fail("AbortExit count");
    return o;
  });

  std::vector<CheckedAst> generated;
  criterion(4, "500 generated programs x 100 ticks: sim equals interp", 300.0, [&] {
    Outcome o;
    std::mt19937_64 rng(20261016);
    std::size_t bad = 0, ticks = 0, full = 0;
    for (int i = 0; i < 500; ++i) {
      ValidationResult v = validate(generate_program(rng));
      if (!v.ok()) {
        o.fail("generator produced an invalid program");
        continue;
      }
      const TickTrace t = generate_trace(rng, v.program->names_of(SignalKind::Input), 100);
      Compiled c = compile_program(*v.program);
      const TraceResult a = run_trace_sos(*v.program, t);
      const TraceResult b = run_trace_fsm(c.fsm, t);
      if (a != b) {
        if (bad++ == 0) o.fail("first discrepancy:\n" + print_stmt(*v.program->root));
      }
      ticks += a.outputs.size();
      if (a.outputs.size() == 100) ++full;
      generated.push_back(std::move(*v.program));
    }
    if (bad) o.detail += "\n" + std::to_string(bad) + " discrepancies";
    if (o.ok) {
      o.detail = std::to_string(ticks) + " ticks compared, " + std::to_string(full) +
                 " programs ran all 100 (the rest terminated)";
    }
    return o;
  });

  criterion(5, "linear size bound; compile time per doubling of ABRO copies <= 3x", 120.0, [&] {
    Outcome o;
    auto bound_ok = [&](const CheckedAst& p, const std::string& what) {
      Compiled c = compile_program(p);
      const std::size_t bound = linear_node_bound(p.node_count, p.par_count);
      if (c.raw.graph.live_node_count() > bound || c.fsm.graph.live_node_count() > bound) {
        o.fail(what + ": " + std::to_string(c.raw.graph.live_node_count()) + " nodes > " + std::to_string(bound));
      }
    };
    for (const Benchmark& b : suite_all) bound_ok(load_program(b.source), b.name);
    for (std::size_t i = 0; i < generated.size(); ++i) bound_ok(generated[i], "generated #" + std::to_string(i));
    if (generated.empty()) o.fail("no generated programs to check");
    double prev = 0;
    std::ostringstream times;
    for (int k = 1; k <= 32; k *= 2) {
      const std::string src = abro_chain(k);
      bound_ok(load_program(src), "ABRO x" + std::to_string(k));
      const double t = compile_time(src);
      times << " k=" << k << ":" << static_cast<long>(t * 1e6) << "us";
      if (prev > 0 && t / prev > 3.0) {
        std::ostringstream why;
        why << "k=" << k << " took " << t / prev << "x the time of k=" << k / 2;
        o.fail(why.str());
      }
      prev = t;
    }
    if (o.ok) o.detail = times.str().substr(1);
    return o;
  });

  criterion(6, "elimination soundness on benchmark traces (<= 50 ticks)", 60.0, [&] {
    Outcome o;
    std::mt19937_64 rng(6);
    for (const Benchmark& b : suite_all) {
      CheckedAst p = load_program(b.source);
      Compiled c = compile_program(p);
      std::vector<TickTrace> inputs;
      for (const Scenario& s : b.scenarios) inputs.push_back(s.inputs);
      for (int i = 0; i < 25; ++i) {
        inputs.push_back(generate_trace(rng, p.names_of(SignalKind::Input), 1 + rng() % 50));
      }
      for (const TickTrace& t : inputs) {
        if (t.size() > 50) o.fail(b.name + ": trace longer than 50");
        if (run_trace_fsm(c.raw, t) != run_trace_fsm(c.fsm, t)) o.fail(b.name + ": " + format_trace(t));
      }
    }
    return o;
  });

  criterion(7, "permuting parallel arms leaves benchmark traces unchanged", 60.0, [&] {
    Outcome o;
    std::mt19937_64 rng(7);
    for (const Benchmark& b : suite_all) {
      const StmtPtr root = parse_source(b.source);
      CheckedAst p = load_program(b.source);
      std::vector<TickTrace> inputs;
      for (const Scenario& s : b.scenarios) inputs.push_back(s.inputs);
      for (int i = 0; i < 10; ++i) inputs.push_back(generate_trace(rng, p.names_of(SignalKind::Input), 50));
      for (const StmtPtr& perm : permutations_of(root, rng)) {
        ValidationResult v = validate(perm);
        if (!v.ok()) {
          o.fail(b.name + ": permuted program rejected");
          continue;
        }
        Compiled c = compile_program(*v.program);
        for (const TickTrace& t : inputs) {
          const TraceResult want = run_trace_sos(p, t);
          if (run_trace_sos(*v.program, t) != want) o.fail(b.name + ": interp differs");
          if (run_trace_fsm(c.fsm, t) != want) o.fail(b.name + ": sim differs");
        }
      }
    }
    return o;
  });

  return failures == 0 ? 0 : 1;
}
