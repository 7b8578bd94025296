#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "synk/ast.hpp"

namespace synk {

enum class TokenKind {
  KwInput,
  KwOutput,
  KwSignal,
  KwNothing,
  KwPause,
  KwEmit,
  KwLoop,
  KwIf,
  KwElse,
  KwAbort,
  Ident,
  Semicolon,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Comma,
  Colon,
  ParBar,  // ||
  Not,     // ! or not
  And,     // & or and
  Or,      // | or or
  End,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceSpan span;
};

/// Splits kernel-language source into tokens. Line comments (`//`) are
/// dropped. The returned list always ends with an End token.
/// Throws Error(LexError) on any character outside the language.
std::vector<Token> tokenize(std::string_view source);

}  // namespace synk
