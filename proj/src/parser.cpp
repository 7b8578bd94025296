#include "synk/parser.hpp"

#include "synk/error.hpp"

namespace synk {

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  StmtPtr program() {
    StmtPtr s = sequence();
    expect(TokenKind::End);
    return s;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  const Token& take() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    take();
    return true;
  }
  const Token& expect(TokenKind kind) {
    if (!at(kind)) fail(std::string("expected ") + std::string(to_string(kind)));
    return take();
  }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw Error(ErrorCode::ParseError, what + ", found " + found, t.span);
  }

  static SourceSpan join(const SourceSpan& a, const SourceSpan& b) {
    return SourceSpan{a.start, b.end, a.line, a.column};
  }
  SourceSpan prev_span() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1].span; }

  StmtPtr sequence() {
    std::vector<StmtPtr> items;
    if (at(TokenKind::RBrace) || at(TokenKind::End)) return make_stmt(ast::Nothing{}, peek().span);
    statement(items);
    while (accept(TokenKind::Semicolon)) {
      if (at(TokenKind::RBrace) || at(TokenKind::End)) break;
      statement(items);
    }
    StmtPtr acc = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) {
      acc = make_stmt(ast::Seq{items[i], acc}, join(items[i]->span, acc->span));
    }
    return acc;
  }

  void statement(std::vector<StmtPtr>& out) {
    const Token& start = peek();
    switch (start.kind) {
      case TokenKind::KwInput:
      case TokenKind::KwOutput:
      case TokenKind::KwSignal:
        declaration(out);
        return;
      case TokenKind::KwNothing:
        take();
        out.push_back(make_stmt(ast::Nothing{}, start.span));
        return;
      case TokenKind::KwPause:
        take();
        out.push_back(make_stmt(ast::Pause{}, start.span));
        return;
      case TokenKind::Ident: {
        take();
        expect(TokenKind::Colon);
        expect(TokenKind::KwPause);
        out.push_back(make_stmt(ast::Pause{start.text}, join(start.span, prev_span())));
        return;
      }
      case TokenKind::KwEmit: {
        take();
        const Token& name = expect(TokenKind::Ident);
        out.push_back(make_stmt(ast::Emit{name.text}, join(start.span, name.span)));
        return;
      }
      case TokenKind::KwLoop: {
        take();
        StmtPtr body = block();
        out.push_back(make_stmt(ast::Loop{body}, join(start.span, prev_span())));
        return;
      }
      case TokenKind::KwIf: {
        take();
        expect(TokenKind::LParen);
        SigExprPtr cond = expr();
        expect(TokenKind::RParen);
        StmtPtr then_branch = block();
        expect(TokenKind::KwElse);
        StmtPtr else_branch = block();
        out.push_back(make_stmt(ast::IfElse{cond, then_branch, else_branch},
                                join(start.span, prev_span())));
        return;
      }
      case TokenKind::KwAbort: {
        take();
        expect(TokenKind::LParen);
        SigExprPtr cond = expr();
        expect(TokenKind::RParen);
        StmtPtr body = block();
        out.push_back(make_stmt(ast::Abort{cond, body, false}, join(start.span, prev_span())));
        return;
      }
      case TokenKind::LBrace: {
        std::vector<StmtPtr> arms;
        arms.push_back(block());
        while (accept(TokenKind::ParBar)) arms.push_back(block());
        if (arms.size() == 1) {
          out.push_back(arms.front());
        } else {
          out.push_back(make_stmt(ast::Par{std::move(arms)}, join(start.span, prev_span())));
        }
        return;
      }
      default:
        fail("expected a statement");
    }
  }

  void declaration(std::vector<StmtPtr>& out) {
    SignalKind kind = SignalKind::Local;
    const Token& start = peek();
    if (accept(TokenKind::KwInput)) {
      kind = SignalKind::Input;
    } else if (accept(TokenKind::KwOutput)) {
      kind = SignalKind::Output;
    }
    expect(TokenKind::KwSignal);
    do {
      const Token& name = expect(TokenKind::Ident);
      out.push_back(make_stmt(ast::SignalDecl{kind, name.text}, join(start.span, name.span)));
    } while (accept(TokenKind::Comma));
  }

  StmtPtr block() {
    expect(TokenKind::LBrace);
    StmtPtr s = sequence();
    expect(TokenKind::RBrace);
    return s;
  }

  SigExprPtr expr() {
    SigExprPtr lhs = term();
    while (accept(TokenKind::Or)) lhs = SigExpr::disj(lhs, term());
    return lhs;
  }
  SigExprPtr term() {
    SigExprPtr lhs = factor();
    while (accept(TokenKind::And)) lhs = SigExpr::conj(lhs, factor());
    return lhs;
  }
  SigExprPtr factor() {
    if (accept(TokenKind::Not)) return SigExpr::negate(factor());
    if (accept(TokenKind::LParen)) {
      SigExprPtr inner = expr();
      expect(TokenKind::RParen);
      return inner;
    }
    const Token& name = expect(TokenKind::Ident);
    return SigExpr::ref(name.text, name.span);
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

StmtPtr parse(const std::vector<Token>& tokens) {
  if (tokens.empty()) throw Error(ErrorCode::ParseError, "empty token list");
  return Parser(tokens).program();
}

StmtPtr parse_source(std::string_view source) { return parse(tokenize(source)); }

}  // namespace synk
