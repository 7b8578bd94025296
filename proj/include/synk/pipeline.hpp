#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "synk/diagnostics.hpp"
#include "synk/optimize.hpp"
#include "synk/rewrite.hpp"
#include "synk/validate.hpp"

namespace synk {

struct FrontendResult {
  std::optional<CheckedAst> program;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return program.has_value(); }
};

/// Tokenize, parse and validate. Lex and parse failures become diagnostics.
FrontendResult run_frontend(std::string_view source);

/// Like run_frontend, but throws std::runtime_error listing the errors.
CheckedAst load_program(std::string_view source, std::string_view file = "<input>");

struct Compiled {
  Fsm raw;   // straight out of the rewrite pass
  Fsm fsm;   // after dummy elimination
  std::vector<Diagnostic> determinism;
};

Compiled compile_program(const CheckedAst& program, const RewriteOptions& options = {});

}  // namespace synk
