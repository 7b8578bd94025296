#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "synk/benchsuite.hpp"
#include "synk/pipeline.hpp"
#include "synk/sos.hpp"
#include "synk/simulate.hpp"
#include "synk/trace.hpp"

namespace synk::test {

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
}

inline std::filesystem::path workdir(const std::string& sub) {
  auto p = std::filesystem::path(SYNK_TEST_WORKDIR) / sub;
  std::filesystem::create_directories(p);
  return p;
}

inline CheckedAst program(std::string_view src) { return load_program(src); }

inline TickTrace trace(std::string_view text) { return parse_trace(text); }

inline std::string sos_out(const CheckedAst& p, std::string_view inputs) {
  return format_trace(run_trace_sos(p, parse_trace(inputs)).outputs);
}

inline std::string fsm_out(const Fsm& f, std::string_view inputs) {
  return format_trace(run_trace_fsm(f, parse_trace(inputs)).outputs);
}

struct Proc {
  int status = -1;
  std::string out;
};

// Runs a shell command, capturing stdout.
inline Proc run(const std::string& cmd) {
  Proc r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  const int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace synk::test
