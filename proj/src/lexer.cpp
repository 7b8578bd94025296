#include "synk/lexer.hpp"

#include <cctype>
#include <unordered_map>

#include "synk/error.hpp"

namespace synk {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::KwInput:
      return "'input'";
    case TokenKind::KwOutput:
      return "'output'";
    case TokenKind::KwSignal:
      return "'signal'";
    case TokenKind::KwNothing:
      return "'nothing'";
    case TokenKind::KwPause:
      return "'pause'";
    case TokenKind::KwEmit:
      return "'emit'";
    case TokenKind::KwLoop:
      return "'loop'";
    case TokenKind::KwIf:
      return "'if'";
    case TokenKind::KwElse:
      return "'else'";
    case TokenKind::KwAbort:
      return "'abort'";
    case TokenKind::Ident:
      return "identifier";
    case TokenKind::Semicolon:
      return "';'";
    case TokenKind::LBrace:
      return "'{'";
    case TokenKind::RBrace:
      return "'}'";
    case TokenKind::LParen:
      return "'('";
    case TokenKind::RParen:
      return "')'";
    case TokenKind::Comma:
      return "','";
    case TokenKind::Colon:
      return "':'";
    case TokenKind::ParBar:
      return "'||'";
    case TokenKind::Not:
      return "'not'";
    case TokenKind::And:
      return "'and'";
    case TokenKind::Or:
      return "'or'";
    case TokenKind::End:
      return "end of input";
  }
  return "?";
}

namespace {

const std::unordered_map<std::string_view, TokenKind>& keywords() {
  static const std::unordered_map<std::string_view, TokenKind> table = {
      {"input", TokenKind::KwInput},   {"output", TokenKind::KwOutput},
      {"signal", TokenKind::KwSignal}, {"nothing", TokenKind::KwNothing},
      {"pause", TokenKind::KwPause},   {"emit", TokenKind::KwEmit},
      {"loop", TokenKind::KwLoop},     {"if", TokenKind::KwIf},
      {"else", TokenKind::KwElse},     {"abort", TokenKind::KwAbort},
      {"not", TokenKind::Not},         {"and", TokenKind::And},
      {"or", TokenKind::Or},
  };
  return table;
}

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (source[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  };
  auto push = [&](TokenKind kind, std::size_t len) {
    SourceSpan span{pos, pos + len, line, col};
    tokens.push_back(Token{kind, std::string(source.substr(pos, len)), span});
    advance(len);
  };

  while (pos < source.size()) {
    char c = source[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && pos + 1 < source.size() && source[pos + 1] == '/') {
      while (pos < source.size() && source[pos] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t len = 1;
      while (pos + len < source.size() && ident_char(source[pos + len])) ++len;
      auto word = source.substr(pos, len);
      auto kw = keywords().find(word);
      push(kw == keywords().end() ? TokenKind::Ident : kw->second, len);
      continue;
    }
    switch (c) {
      case ';':
        push(TokenKind::Semicolon, 1);
        continue;
      case '{':
        push(TokenKind::LBrace, 1);
        continue;
      case '}':
        push(TokenKind::RBrace, 1);
        continue;
      case '(':
        push(TokenKind::LParen, 1);
        continue;
      case ')':
        push(TokenKind::RParen, 1);
        continue;
      case ',':
        push(TokenKind::Comma, 1);
        continue;
      case ':':
        push(TokenKind::Colon, 1);
        continue;
      case '!':
        push(TokenKind::Not, 1);
        continue;
      case '&':
        push(TokenKind::And, 1);
        continue;
      case '|':
        if (pos + 1 < source.size() && source[pos + 1] == '|') {
          push(TokenKind::ParBar, 2);
        } else {
          push(TokenKind::Or, 1);
        }
        continue;
      default:
        break;
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c)) != 0
                            ? std::string(1, c)
                            : "\\x" + std::to_string(static_cast<unsigned char>(c));
    throw Error(ErrorCode::LexError, "unexpected character '" + shown + "'",
                SourceSpan{pos, pos + 1, line, col});
  }
  tokens.push_back(Token{TokenKind::End, "", SourceSpan{pos, pos, line, col}});
  return tokens;
}

}  // namespace synk
