#include "ratdyn/cli/parser.hpp"

#include <cctype>
#include <vector>

#include "ratdyn/error.hpp"

namespace ratdyn {

namespace {

constexpr unsigned long kMaxExponent = 4096;

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  Tok kind;
  std::string_view text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Lexer {
 public:
  Lexer(std::string_view src, SourceOrigin origin) : src_(src), line_(origin.line), column_(origin.column) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, {}, line_, column_});
        return out;
      }
      const char c = src_[pos_];
      const int line = line_;
      const int col = column_;
      const std::size_t start = pos_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
        out.push_back({Tok::number, src_.substr(start, pos_ - start), line, col});
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
          advance();
        }
        out.push_back({Tok::ident, src_.substr(start, pos_ - start), line, col});
        continue;
      }
      Tok kind;
      switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default:
          throw ParseError(ErrorCode::parse, std::string("unexpected character '") + c + "'", line, col);
      }
      advance();
      out.push_back({kind, src_.substr(start, 1), line, col});
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }
  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_;
  int column_;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::span<const std::string> vars)
      : tokens_(std::move(tokens)), vars_(vars) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    if (peek().kind != Tok::end) fail("unexpected " + describe(peek()));
    return r;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(ErrorCode::parse, msg, peek().line, peek().column);
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const bool minus = take().kind == Tok::minus;
      RationalFunction rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (peek().kind == Tok::star || peek().kind == Tok::slash) {
      const Token op = take();
      RationalFunction rhs = unary();
      if (op.kind == Tok::star) {
        acc = acc * rhs;
      } else {
        if (rhs.is_zero()) {
          throw ParseError(ErrorCode::division_by_zero, "division by zero", op.line, op.column);
        }
        acc = acc / rhs;
      }
    }
    return acc;
  }

  RationalFunction unary() {
    if (peek().kind == Tok::minus) {
      take();
      return -unary();
    }
    if (peek().kind == Tok::plus) {
      take();
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek().kind != Tok::caret) return base;
    const Token caret = take();
    if (peek().kind == Tok::minus) fail("exponent must be a non-negative integer");
    RationalFunction e = power();
    if (!e.is_constant()) {
      throw ParseError(ErrorCode::parse, "exponent must be a constant", caret.line, caret.column);
    }
    const Scalar v = e.constant_value();
    if (v.get_den() != 1 || sgn(v) < 0 || v > kMaxExponent) {
      throw ParseError(ErrorCode::parse, "exponent must be a non-negative integer (at most 4096)",
                       caret.line, caret.column);
    }
    return base.pow(static_cast<unsigned>(v.get_num().get_ui()));
  }

  RationalFunction primary() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::number: {
        take();
        Scalar v(std::string(t.text), 10);
        return RationalFunction::constant(vars_.size(), v);
      }
      case Tok::ident: {
        take();
        for (std::size_t i = 0; i < vars_.size(); ++i) {
          if (vars_[i] == t.text) return RationalFunction::variable(vars_.size(), i);
        }
        throw ParseError(ErrorCode::undeclared_identifier,
                         "undeclared identifier '" + std::string(t.text) + "'", t.line, t.column);
      }
      case Tok::lparen: {
        take();
        RationalFunction inner = expr();
        if (peek().kind != Tok::rparen) fail("expected ')' but found " + describe(peek()));
        take();
        return inner;
      }
      default:
        fail("expected a number, identifier or '(' but found " + describe(t));
    }
  }

  std::vector<Token> tokens_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

RationalFunction parse_expression(std::string_view src, std::span<const std::string> variables,
                                  SourceOrigin origin) {
  Parser parser(Lexer(src, origin).run(), variables);
  return parser.parse();
}

}  // namespace ratdyn
