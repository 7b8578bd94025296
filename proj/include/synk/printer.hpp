#pragma once

#include <string>

#include "synk/ast.hpp"

namespace synk {

/// Prints an expression with minimal parentheses using `not`/`and`/`or`.
std::string print_expr(const SigExpr& expr);

/// Pretty-prints a statement as re-parsable source (two-space indentation).
std::string print_stmt(const Stmt& stmt);

/// Single-line rendering, used for residuals in diagnostics and tests.
std::string print_inline(const Stmt& stmt);

}  // namespace synk
