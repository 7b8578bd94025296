#include "synk/diagnostics.hpp"

#include <algorithm>

namespace synk {

std::string_view to_string(Severity severity) {
  switch (severity) {
    case Severity::Note:
      return "note";
    case Severity::Warning:
      return "warning";
    case Severity::Error:
      return "error";
  }
  return "error";
}

std::string_view to_string(DiagCode code) {
  switch (code) {
    case DiagCode::LexError:
      return "LexError";
    case DiagCode::ParseError:
      return "ParseError";
    case DiagCode::InstantaneousLoop:
      return "InstantaneousLoop";
    case DiagCode::UndeclaredSignal:
      return "UndeclaredSignal";
    case DiagCode::DuplicateLabel:
      return "DuplicateLabel";
    case DiagCode::EmitOnInput:
      return "EmitOnInput";
    case DiagCode::KindMismatch:
      return "KindMismatch";
    case DiagCode::UnreachableCode:
      return "UnreachableCode";
    case DiagCode::StuckState:
      return "StuckState";
    case DiagCode::AmbiguousState:
      return "AmbiguousState";
    case DiagCode::NotChecked:
      return "NotChecked";
  }
  return "?";
}

std::string format_diagnostic(std::string_view file, const Diagnostic& diag) {
  std::string out;
  out += file;
  out += ':' + std::to_string(diag.span.line) + ':' + std::to_string(diag.span.column) + ": ";
  out += to_string(diag.severity);
  out += ": ";
  out += diag.message;
  out += " [";
  out += to_string(diag.code);
  out += ']';
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

}  // namespace synk
