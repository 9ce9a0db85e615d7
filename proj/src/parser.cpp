#include "cgeo/parser.hpp"

#include <cctype>

#include "cgeo/errors.hpp"

namespace cgeo {

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= src_.size()) {
      current_ = {Token::End, "", start};
      return;
    }
    char c = src_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
      current_ = {Token::Number, src_.substr(start, i_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
        ++i_;
      current_ = {Token::Ident, src_.substr(start, i_ - start), start};
      return;
    }
    ++i_;
    switch (c) {
      case '+': current_ = {Token::Plus, "+", start}; return;
      case '-': current_ = {Token::Minus, "-", start}; return;
      case '*': current_ = {Token::Star, "*", start}; return;
      case '/': current_ = {Token::Slash, "/", start}; return;
      case '^': current_ = {Token::Caret, "^", start}; return;
      case '(': current_ = {Token::LParen, "(", start}; return;
      case ')': current_ = {Token::RParen, ")", start}; return;
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& src_;
  std::size_t i_ = 0;
  Token current_{Token::End, "", 0};
};

class Parser {
public:
  Parser(const std::string& src, ChartPtr chart) : lex_(src), chart_(std::move(chart)) {}

  Scalar parse() {
    Scalar v = expr();
    if (lex_.peek().kind != Token::End)
      throw ParseError("unexpected trailing input", lex_.peek().pos);
    return v;
  }

private:
  Scalar expr() {
    Scalar v = term();
    while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
      Token op = lex_.take();
      Scalar rhs = term();
      v = (op.kind == Token::Plus) ? v + rhs : v - rhs;
    }
    return v;
  }

  Scalar term() {
    Scalar v = unary();
    while (lex_.peek().kind == Token::Star || lex_.peek().kind == Token::Slash) {
      Token op = lex_.take();
      Scalar rhs = unary();
      if (op.kind == Token::Star) {
        v = v * rhs;
      } else {
        if (rhs.is_zero()) throw ParseError("division by zero", op.pos);
        v = v / rhs;
      }
    }
    return v;
  }

  Scalar unary() {
    if (lex_.peek().kind == Token::Minus) {
      lex_.take();
      return -unary();
    }
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    while (lex_.peek().kind == Token::Caret) {
      Token op = lex_.take();
      Scalar e = atom();
      if (!e.is_constant() || !rat_is_integer(e.constant_value()) || e.constant_value() < 0)
        throw ParseError("exponent must be a nonnegative integer", op.pos);
      base = base.pow(static_cast<std::uint32_t>(e.constant_value().get_num().get_ui()));
    }
    return base;
  }

  Scalar atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Number:
        return Scalar::constant(chart_, rat_from_string(t.text));
      case Token::Ident: {
        auto idx = chart_->index_of(t.text);
        if (!idx || *idx >= chart_->nvars()) {
          std::string why = chart_->is_lie_frame()
                                ? "unknown identifier '" + t.text +
                                      "' (Lie-frame backends have no coordinate functions)"
                                : "unknown identifier '" + t.text + "'";
          throw ParseError(why, t.pos);
        }
        return Scalar::coordinate(chart_, *idx);
      }
      case Token::LParen: {
        Scalar v = expr();
        if (lex_.peek().kind != Token::RParen)
          throw ParseError("expected ')'", lex_.peek().pos);
        lex_.take();
        return v;
      }
      case Token::End:
        throw ParseError("unexpected end of expression", t.pos);
      default:
        throw ParseError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  Lexer lex_;
  ChartPtr chart_;
};

} // namespace

Scalar parse_scalar(const std::string& text, const ChartPtr& chart) {
  return Parser(text, chart).parse();
}

} // namespace cgeo
