#include "synk/error.hpp"

namespace synk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LexError:
      return "LexError";
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::UnboundSignal:
      return "UnboundSignal";
    case ErrorCode::KindMismatch:
      return "KindMismatch";
    case ErrorCode::DivergenceGuard:
      return "DivergenceGuard";
    case ErrorCode::UnknownInputSignal:
      return "UnknownInputSignal";
    case ErrorCode::UnknownNode:
      return "UnknownNode";
    case ErrorCode::JoinGuardCollision:
      return "JoinGuardCollision";
    case ErrorCode::StuckState:
      return "StuckState";
    case ErrorCode::UnsupportedGraph:
      return "UnsupportedGraph";
    case ErrorCode::TraceSyntaxError:
      return "TraceSyntaxError";
    case ErrorCode::InternalError:
      return "InternalError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<SourceSpan> span)
    : std::runtime_error(message), code_(code), span_(span) {}

}  // namespace synk
