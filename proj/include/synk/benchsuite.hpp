#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "synk/trace.hpp"
#include "synk/validate.hpp"

namespace synk {

/// The ABRO program, byte-identical to benchmarks/abro.syn.
extern const std::string_view kAbroSource;

struct Scenario {
  std::string name;
  TickTrace inputs;
  TickTrace outputs;  // frozen reference outputs
};

struct Benchmark {
  std::string name;
  std::string source;
  std::vector<Scenario> scenarios;
};

/// Reads DIR/*.syn and, for each NAME.syn, every
/// DIR/traces/NAME.SCENARIO.in.trace with its matching .out.trace.
/// Sorted by name, scenarios too. Throws std::runtime_error for a missing
/// .out.trace or unreadable file.
std::vector<Benchmark> load_suite(const std::filesystem::path& dir);

/// The checked-in benchmark directory (SYNK_BENCH_DIR in the environment
/// overrides the build-time default).
std::filesystem::path default_suite_dir();

/// load_suite(default_suite_dir()).
std::vector<Benchmark> suite();

/// Output trace text the interpreter produces for `inputs`.
std::string reference_output(const CheckedAst& program, const TickTrace& inputs);

/// Scenario files whose frozen output differs from reference_output, as
/// "NAME.SCENARIO" entries.
std::vector<std::string> find_drift(const std::filesystem::path& dir);

/// Rewrites every .out.trace under DIR from its .in.trace. Returns the
/// number of files written.
std::size_t regenerate_outputs(const std::filesystem::path& dir);

}  // namespace synk
