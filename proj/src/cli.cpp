#include "synk/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "synk/benchsuite.hpp"
#include "synk/codegen.hpp"
#include "synk/error.hpp"
#include "synk/generator.hpp"
#include "synk/pipeline.hpp"
#include "synk/printer.hpp"
#include "synk/simulate.hpp"
#include "synk/sos.hpp"

namespace synk {

namespace {

struct Failure {
  std::string message;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Frontend plus diagnostics; warnings go to err either way.
CheckedAst checked(const std::string& file, std::ostream& err) {
  FrontendResult r = run_frontend(read_file(file));
  for (const auto& d : r.diagnostics) err << format_diagnostic(file, d) << "\n";
  if (!r.ok()) throw Failure{};
  return std::move(*r.program);
}

Compiled compiled(const std::string& file, std::ostream& err) {
  Compiled c = compile_program(checked(file, err));
  for (const auto& d : c.determinism) {
    if (d.severity != Severity::Note) err << format_diagnostic(file, d) << "\n";
  }
  return c;
}

struct RunArgs {
  std::string file;
  std::string trace;
  std::optional<std::size_t> ticks;
  std::string format = "trace";
};

TickTrace input_trace(const RunArgs& a) {
  TickTrace t;
  if (!a.trace.empty()) t = parse_trace(read_file(a.trace));
  if (a.ticks) t = resize_trace(std::move(t), *a.ticks);
  return t;
}

void print_result(const RunArgs& a, const TraceResult& r, std::ostream& out, std::ostream& err) {
  out << (a.format == "ticks" ? format_trace_verbose(r.outputs) : format_trace(r.outputs));
  if (r.terminated_at) err << "terminated at tick " << *r.terminated_at << "\n";
}

void add_run_options(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("file", a.file, "program")->required();
  cmd->add_option("--trace", a.trace, "input trace file ('-' for stdin)");
  cmd->add_option("--ticks", a.ticks, "truncate or pad the input trace to N ticks");
  cmd->add_option("--format", a.format, "output layout")->check(CLI::IsMember({"trace", "ticks"}));
}

int fuzz(std::size_t count, std::size_t ticks, std::ostream& out, std::ostream& err) {
  std::uint64_t seed = 1;
  if (const char* s = std::getenv("SYNKC_SEED"); s && *s) seed = std::strtoull(s, nullptr, 10);
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const StmtPtr prog = generate_program(rng);
    ValidationResult v = validate(prog);
    if (!v.program) {
      err << "program " << i << " rejected by the validator\n" << print_stmt(*prog);
      ++bad;
      continue;
    }
    std::vector<std::string> inputs = v.program->names_of(SignalKind::Input);
    const TickTrace trace = generate_trace(rng, inputs, ticks);
    try {
      const Compiled c = compile_program(*v.program);
      if (run_trace_sos(*v.program, trace) != run_trace_fsm(c.fsm, trace)) {
        err << "program " << i << " disagrees\n" << print_stmt(*prog) << "inputs\n" << format_trace(trace);
        ++bad;
      }
    } catch (const std::exception& e) {
      err << "program " << i << ": " << e.what() << "\n" << print_stmt(*prog);
      ++bad;
    }
  }
  out << "seed " << seed << ": " << count << " programs, " << ticks << " ticks, " << bad
      << " discrepancies\n";
  return bad == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"synkc: compiler and simulator for the synk kernel language", "synkc"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "parse and validate");
  check->add_option("file", file, "program")->required();

  std::string output;
  std::string io = "trace-stdio";
  auto* compile = app.add_subcommand("compile", "emit type-state C++");
  compile->add_option("file", file, "program")->required();
  compile->add_option("-o,--output", output, "output source file")->required();
  compile->add_option("--io", io, "trace-stdio or extern")->check(CLI::IsMember({"trace-stdio", "extern"}));

  bool raw = false;
  auto* dot = app.add_subcommand("dot", "Graphviz DOT of the state graph");
  dot->add_option("file", file, "program")->required();
  dot->add_flag("--raw", raw, "graph before dummy elimination");

  RunArgs run;
  auto* sim = app.add_subcommand("sim", "run the compiled graph on a trace");
  add_run_options(sim, run);
  auto* interp = app.add_subcommand("interp", "run the reference interpreter on a trace");
  add_run_options(interp, run);

  std::size_t count = 500;
  std::size_t ticks = 100;
  auto* fz = app.add_subcommand("fuzz", "differential test of sim against interp (seed: SYNKC_SEED)");
  fz->add_option("--count", count, "programs");
  fz->add_option("--ticks", ticks, "ticks per trace");

  std::string dir = default_suite_dir().string();
  bool regen = false;
  auto* goldens = app.add_subcommand("goldens", "check or rewrite the frozen benchmark outputs");
  goldens->add_option("dir", dir, "benchmark directory");
  goldens->add_flag("--write", regen, "rewrite every .out.trace");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      checked(file, err);
      return 0;
    }
    if (*compile) {
      CodegenOptions opts;
      opts.io_mode = parse_io_mode(io);
      const std::string code = emit_typestate(compiled(file, err).fsm, opts);
      std::ofstream o(output, std::ios::binary | std::ios::trunc);
      if (!o || !(o << code)) throw Failure{"cannot write " + output};
      return 0;
    }
    if (*dot) {
      const Compiled c = compiled(file, err);
      out << to_dot((raw ? c.raw : c.fsm).graph);
      return 0;
    }
    if (*sim) {
      const Compiled c = compiled(run.file, err);
      print_result(run, run_trace_fsm(c.fsm, input_trace(run)), out, err);
      return 0;
    }
    if (*interp) {
      const CheckedAst p = checked(run.file, err);
      print_result(run, run_trace_sos(p, input_trace(run)), out, err);
      return 0;
    }
    if (*fz) return fuzz(count, ticks, out, err);
    if (*goldens) {
      if (regen) {
        out << regenerate_outputs(dir) << " output traces written\n";
        return 0;
      }
      const auto stale = find_drift(dir);
      for (const auto& s : stale) err << "stale: " << s << "\n";
      return stale.empty() ? 0 : 1;
    }
  } catch (const Failure& f) {
    if (!f.message.empty()) err << "synkc: " << f.message << "\n";
    return 1;
  } catch (const Error& e) {
    err << "synkc: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "synkc: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace synk
