#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "synk/ast.hpp"

namespace synk {

enum class Severity { Note, Warning, Error };

enum class DiagCode {
  LexError,
  ParseError,
  InstantaneousLoop,
  UndeclaredSignal,
  DuplicateLabel,
  EmitOnInput,
  KindMismatch,
  UnreachableCode,
  StuckState,
  AmbiguousState,
  NotChecked,
};

std::string_view to_string(Severity severity);
std::string_view to_string(DiagCode code);

struct Diagnostic {
  Severity severity = Severity::Error;
  DiagCode code = DiagCode::ParseError;
  std::string message;
  SourceSpan span;
};

/// Renders `file:line:col: severity: message`.
std::string format_diagnostic(std::string_view file, const Diagnostic& diag);

bool has_errors(const std::vector<Diagnostic>& diags);

}  // namespace synk
