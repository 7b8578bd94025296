#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "synk/rewrite.hpp"

namespace synk {

enum class IoMode {
  TraceStdio,  // trace text on stdin, output trace on stdout
  Extern,      // externally linked hooks sample inputs and receive outputs
};

std::string_view to_string(IoMode mode);
/// Accepts "trace-stdio" and "extern".
IoMode parse_io_mode(std::string_view text);

struct CodegenOptions {
  IoMode io_mode = IoMode::TraceStdio;
};

/// Emits a single C++17 translation unit for an eliminated graph.
///
/// Layout: signal records (`X_curr`, `X_prev`), one empty struct per state
/// label plus `I` and `E`, a template `ThreadN<St>` per thread, a
/// `std::variant` per thread over the states it can occupy, one explicit
/// `ThreadN<St>::tick()` specialization per (thread, state), the `enter_n*`
/// routines that replay instantaneous traversal, and a main loop.
///
/// Extern mode declares these C hooks instead of reading stdin:
///   int synk_tick_pending(unsigned long tick);   // asked from tick 2 on
///   unsigned char synk_sample_input(const char* name);
///   void synk_set_output(const char* name, unsigned char present);
///   void synk_end_tick(unsigned long tick);
///
/// Throws UnsupportedGraph if the determinism check reports an error.
std::string emit_typestate(const Fsm& fsm, const CodegenOptions& opts = {});

/// Number of tick specializations emit_typestate produces: every live state
/// of every thread, plus the root thread's initial state.
std::size_t count_transition_functions(const Fsm& fsm);

}  // namespace synk
