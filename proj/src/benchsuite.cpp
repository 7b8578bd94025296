#include "synk/benchsuite.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <tuple>
#include <stdexcept>

#include "synk/pipeline.hpp"
#include "synk/sos.hpp"

#ifndef SYNK_BENCH_DIR
#define SYNK_BENCH_DIR "benchmarks"
#endif

namespace synk {

namespace fs = std::filesystem;

const std::string_view kAbroSource = R"(input signal A, B, R; //Input signals from environment
output signal O; //Output signal to environment
loop {
 abort(R) { //abort body when signal R is present
  {abort(A){loop{S0: pause}}} //stmt-1--wait  signal A
  || //run stmt-1 and stmt-2 in synchronous parallel
  {abort(B){loop{S1: pause}}}; //stmt-2--wait  signal B
  emit O; // emit O if A and B and not R
  loop{S2: pause} //halt
 }
} //restart (loop-back) program when R is present
)";

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

// NAME.SCENARIO.in.trace -> (NAME, SCENARIO)
bool split_input_name(const std::string& file, std::string& bench, std::string& scenario) {
  const std::string suffix = ".in.trace";
  if (file.size() <= suffix.size() || file.compare(file.size() - suffix.size(), suffix.size(), suffix) != 0) {
    return false;
  }
  const std::string stem = file.substr(0, file.size() - suffix.size());
  const auto dot = stem.find('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == stem.size()) return false;
  bench = stem.substr(0, dot);
  scenario = stem.substr(dot + 1);
  return true;
}

struct InputFile {
  std::string bench, scenario;
  fs::path in, out;
};

std::vector<InputFile> input_files(const fs::path& dir) {
  std::vector<InputFile> files;
  const fs::path traces = dir / "traces";
  if (!fs::is_directory(traces)) return files;
  for (const auto& entry : fs::directory_iterator(traces)) {
    InputFile f;
    if (!entry.is_regular_file() || !split_input_name(entry.path().filename().string(), f.bench, f.scenario)) {
      continue;
    }
    f.in = entry.path();
    f.out = traces / (f.bench + "." + f.scenario + ".out.trace");
    files.push_back(std::move(f));
  }
  std::sort(files.begin(), files.end(), [](const InputFile& a, const InputFile& b) {
    return std::tie(a.bench, a.scenario) < std::tie(b.bench, b.scenario);
  });
  return files;
}

CheckedAst load_bench(const fs::path& dir, const std::string& name) {
  const fs::path p = dir / (name + ".syn");
  return load_program(slurp(p), p.string());
}

}  // namespace

std::vector<Benchmark> load_suite(const fs::path& dir) {
  std::vector<Benchmark> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".syn") continue;
    Benchmark b;
    b.name = entry.path().stem().string();
    b.source = slurp(entry.path());
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Benchmark& a, const Benchmark& b) { return a.name < b.name; });
  for (const InputFile& f : input_files(dir)) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Benchmark& b) { return b.name == f.bench; });
    if (it == out.end()) continue;
    if (!fs::exists(f.out)) throw std::runtime_error("missing " + f.out.string());
    it->scenarios.push_back(Scenario{f.scenario, parse_trace(slurp(f.in)), parse_trace(slurp(f.out))});
  }
  return out;
}

fs::path default_suite_dir() {
  if (const char* env = std::getenv("SYNK_BENCH_DIR"); env && *env) return env;
  return SYNK_BENCH_DIR;
}

std::vector<Benchmark> suite() { return load_suite(default_suite_dir()); }

std::string reference_output(const CheckedAst& program, const TickTrace& inputs) {
  return format_trace(run_trace_sos(program, inputs).outputs);
}

std::vector<std::string> find_drift(const fs::path& dir) {
  std::vector<std::string> stale;
  for (const InputFile& f : input_files(dir)) {
    const CheckedAst program = load_bench(dir, f.bench);
    const std::string expect = reference_output(program, parse_trace(slurp(f.in)));
    if (!fs::exists(f.out) || slurp(f.out) != expect) stale.push_back(f.bench + "." + f.scenario);
  }
  return stale;
}

std::size_t regenerate_outputs(const fs::path& dir) {
  std::size_t written = 0;
  for (const InputFile& f : input_files(dir)) {
    const CheckedAst program = load_bench(dir, f.bench);
    spit(f.out, reference_output(program, parse_trace(slurp(f.in))));
    ++written;
  }
  return written;
}

}  // namespace synk
