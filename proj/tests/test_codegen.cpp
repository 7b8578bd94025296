#include <doctest.h>

#include <random>
#include <regex>

#include "support.hpp"
#include "synk/codegen.hpp"
#include "synk/error.hpp"
#include "synk/generator.hpp"
#include "synk/printer.hpp"

using namespace synk;
using namespace synk::test;
namespace fs = std::filesystem;

namespace {

// Trace-backed hooks for the extern IO mode: inputs come from the file named
// by SYNK_TRACE, outputs are printed in trace format.
const char* kStub = R"(#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>
#include <vector>

static std::vector<std::set<std::string>> g_in;
static std::set<std::string> g_out;
static unsigned long g_tick = 1;

static void load() {
  static bool done = false;
  if (done) return;
  done = true;
  const char* path = std::getenv("SYNK_TRACE");
  FILE* f = path ? std::fopen(path, "r") : nullptr;
  if (!f) return;
  char line[4096];
  while (std::fgets(line, sizeof line, f)) {
    if (line[0] == '#') continue;
    std::set<std::string> names;
    char* save = nullptr;
    for (char* w = strtok_r(line, " \t\r\n", &save); w; w = strtok_r(nullptr, " \t\r\n", &save)) {
      if (std::strcmp(w, "-") != 0) names.insert(w);
    }
    g_in.push_back(names);
  }
  std::fclose(f);
}

extern "C" int synk_tick_pending(unsigned long tick) {
  load();
  return tick <= g_in.size();
}
extern "C" unsigned char synk_sample_input(const char* name) {
  load();
  if (g_tick > g_in.size()) return 0;
  return g_in[g_tick - 1].count(name) ? 1 : 0;
}
extern "C" void synk_set_output(const char* name, unsigned char present) {
  if (present) g_out.insert(name);
}
extern "C" void synk_end_tick(unsigned long tick) {
  std::string line;
  for (const auto& n : g_out) line += (line.empty() ? "" : " ") + n;
  std::printf("%s\n", line.empty() ? "-" : line.c_str());
  g_out.clear();
  g_tick = tick + 1;
}
)";

std::string cxx() { return SYNK_TEST_CXX; }

// Compiles generated code (plus the stub in extern mode); returns the binary.
fs::path build(const std::string& name, const std::string& code, IoMode mode) {
  const fs::path dir = workdir("codegen");
  const fs::path src = dir / (name + ".cpp");
  const fs::path bin = dir / name;
  write_text(src, code);
  std::string cmd = cxx() + " -std=c++17 -O1 -Wall -Wextra -Werror -o " + bin.string() + " " + src.string();
  if (mode == IoMode::Extern) {
    const fs::path stub = dir / "stub.cpp";
    if (!fs::exists(stub)) write_text(stub, kStub);
    cmd += " " + stub.string();
  }
  Proc p = run(cmd + " 2>&1");
  INFO(p.out);
  REQUIRE(p.status == 0);
  return bin;
}

std::string run_stdio(const fs::path& bin, const std::string& inputs) {
  const fs::path in = bin.string() + ".in";
  write_text(in, inputs);
  Proc p = run(bin.string() + " < " + in.string());
  CHECK(p.status == 0);
  return p.out;
}

std::string run_extern(const fs::path& bin, const std::string& inputs) {
  const fs::path in = bin.string() + ".in";
  write_text(in, inputs);
  Proc p = run("SYNK_TRACE=" + in.string() + " " + bin.string());
  CHECK(p.status == 0);
  return p.out;
}

std::string emit(const std::string& src, IoMode mode = IoMode::TraceStdio) {
  return emit_typestate(compile_program(program(src)).fsm, CodegenOptions{mode});
}

std::size_t count_matches(const std::string& text, const std::string& re) {
  std::regex r(re);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), r),
                                                std::sregex_iterator()));
}

}  // namespace

TEST_CASE("io mode names") {
  CHECK(parse_io_mode("trace-stdio") == IoMode::TraceStdio);
  CHECK(parse_io_mode("extern") == IoMode::Extern);
  CHECK(to_string(IoMode::Extern) == "extern");
  CHECK_THROWS_AS(parse_io_mode("stdio"), Error);
}

TEST_CASE("transition function counts") {
  auto count = [](std::string_view src) { return count_transition_functions(compile_program(program(src)).fsm); };
  CHECK(count(kAbroSource) == 5);
  CHECK(count("pause") == 2);
  CHECK(count("{pause} || {pause} || {pause}") == 5);
  const std::string code = emit(std::string(kAbroSource));
  CHECK(count_matches(code, R"(template <> void Thread\d+<\w+>::tick\(\) const \{)") == 5);
}

TEST_CASE("ABRO: the S0 transition function branches three ways") {
  const std::string code = emit(std::string(kAbroSource));
  const auto at = code.find("template <> void Thread1<S0>::tick() const {");
  REQUIRE(at != std::string::npos);
  const std::string body = code.substr(at, code.find("\n}\n", at) - at);
  CHECK(count_matches(body, R"(\bif \()") == 3);
  CHECK(body.find("if (R_prev.status) {") != std::string::npos);
  CHECK(body.find("else if (((not R_prev.status) and A_prev.status)) {") != std::string::npos);
  CHECK(body.find("else if (((not R_prev.status) and (not A_prev.status))) {") != std::string::npos);
  CHECK(code.find("using Thread1State = std::variant<Thread1<I>, Thread1<S0>, Thread1<E>>;") != std::string::npos);
}

TEST_CASE("extern mode declares the hooks and reads no stdin") {
  const std::string code = emit(std::string(kAbroSource), IoMode::Extern);
  for (const char* hook : {"synk_tick_pending", "synk_sample_input", "synk_set_output", "synk_end_tick"}) {
    CHECK(code.find(std::string("extern \"C\"")) != std::string::npos);
    CHECK(code.find(hook) != std::string::npos);
  }
  CHECK(code.find("fgets") == std::string::npos);
}

TEST_CASE("graphs with stuck states are not emitted") {
  Fsm f;
  const NodeId init = f.graph.add_dummy(DummyRole::Init, 0);
  const NodeId s = f.graph.add_state("S", 0);
  f.graph.add_edge(init, s, Guard::always());
  f.graph.add_edge(s, s, Guard::when(SigExpr::ref("A")));
  f.threads.thread(0).init = init;
  try {
    emit_typestate(f);
    FAIL("expected UnsupportedGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedGraph);
  }
}

TEST_CASE("emitted benchmarks reproduce the frozen traces in both io modes") {
  for (const Benchmark& b : suite()) {
    const Fsm f = compile_program(program(b.source)).fsm;
    const fs::path stdio_bin = build(b.name + "_stdio", emit_typestate(f, {IoMode::TraceStdio}), IoMode::TraceStdio);
    const fs::path extern_bin = build(b.name + "_extern", emit_typestate(f, {IoMode::Extern}), IoMode::Extern);
    for (const Scenario& s : b.scenarios) {
      const std::string in = format_trace(s.inputs);
      const std::string expect = format_trace(s.outputs);
      CHECK_MESSAGE(run_stdio(stdio_bin, in) == expect, (b.name + "." + s.name));
      CHECK_MESSAGE(run_extern(extern_bin, in) == expect, (b.name + "." + s.name));
    }
  }
}

TEST_CASE("emitted code: termination, comments, empty input, unknown names") {
  const fs::path bin = build("pause_emit", emit("output signal A; pause; emit A"), IoMode::TraceStdio);
  CHECK(run_stdio(bin, "-\n-\n-\n-\n") == "-\nA\n");
  CHECK(run_stdio(bin, "# only a comment\n") == "-\n");
  CHECK(run_stdio(bin, "") == "-\n");
  const fs::path ext = build("pause_emit_ext", emit("output signal A; pause; emit A", IoMode::Extern), IoMode::Extern);
  CHECK(run_extern(ext, "-\n-\n-\n") == "-\nA\n");

  const fs::path abro = build("abro_unknown", emit(std::string(kAbroSource)), IoMode::TraceStdio);
  write_text(abro.string() + ".in", "A\nZ\n");
  Proc p = run(abro.string() + " < " + abro.string() + ".in 2>/dev/null");
  CHECK(p.status == 2);
}

TEST_CASE("labels that clash with C++ or emitted names are renamed") {
  const std::string src =
      "input signal A; output signal O; loop {int: pause; I: pause; State: pause; st0: pause; if (A) {emit O} else {nothing}; main: pause}";
  const fs::path bin = build("clash", emit(src), IoMode::TraceStdio);
  CheckedAst p = program(src);
  const std::string in = "A\n-\nA\nA\n-\n-\nA\n-\n-\n-\n-\n-\n";
  CHECK(run_stdio(bin, in) == sos_out(p, in));
}

TEST_CASE("emitted code agrees with the graph simulator on generated programs") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 12; ++i) {
    ValidationResult v = validate(generate_program(rng));
    REQUIRE(v.ok());
    const Fsm f = compile_program(*v.program).fsm;
    const fs::path bin = build("gen" + std::to_string(i), emit_typestate(f), IoMode::TraceStdio);
    for (int k = 0; k < 3; ++k) {
      const TickTrace t = generate_trace(rng, v.program->names_of(SignalKind::Input), 40);
      const std::string expect = format_trace(run_trace_fsm(f, t).outputs);
      REQUIRE_MESSAGE(run_stdio(bin, format_trace(t)) == expect, print_stmt(*v.program->root));
    }
  }
}

TEST_CASE("the empty program emits one silent tick") {
  const fs::path bin = build("empty", emit(""), IoMode::TraceStdio);
  CHECK(run_stdio(bin, "") == "-\n");
  const fs::path ext = build("empty_ext", emit("", IoMode::Extern), IoMode::Extern);
  CHECK(run_extern(ext, "") == "-\n");
}
