#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "synk/ast.hpp"

namespace synk {

enum class ErrorCode {
  LexError,
  ParseError,
  UnboundSignal,
  KindMismatch,
  DivergenceGuard,
  UnknownInputSignal,
  UnknownNode,
  JoinGuardCollision,
  StuckState,
  UnsupportedGraph,
  TraceSyntaxError,
  InternalError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::optional<SourceSpan> span = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourceSpan>& span() const noexcept { return span_; }

 private:
  ErrorCode code_;
  std::optional<SourceSpan> span_;
};

}  // namespace synk
