#pragma once

#include <string_view>
#include <vector>

#include "synk/ast.hpp"
#include "synk/lexer.hpp"

namespace synk {

/// Recursive-descent parser for the kernel language.
///
///   program   := seq End
///   seq       := [stmt (';' stmt)* [';']]     (empty means nothing)
///   stmt      := decl | 'nothing' | [IDENT ':'] 'pause' | 'emit' IDENT
///              | 'loop' block | 'if' '(' expr ')' block 'else' block
///              | 'abort' '(' expr ')' block | block ('||' block)*
///   block     := '{' seq '}'
///   decl      := ['input' | 'output'] 'signal' IDENT (',' IDENT)*
///   expr      := expr 'or' term | term
///   term      := term 'and' factor | factor
///   factor    := 'not' factor | '(' expr ')' | IDENT
///
/// `;` chains fold to a right-associative Seq; a multi-name declaration is
/// spliced into the chain as one SignalDecl per name. A single braced block
/// is grouping; two or more joined by `||` form one n-ary Par.
/// Throws Error(ParseError) with the offending token's span.
StmtPtr parse(const std::vector<Token>& tokens);

/// tokenize + parse.
StmtPtr parse_source(std::string_view source);

}  // namespace synk
