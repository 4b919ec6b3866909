#include <cctype>
#include <string>

#include "walkerpc/error.hpp"
#include "walkerpc/scalar_field.hpp"

namespace walkerpc {
namespace {

constexpr int kMaxExponent = 64;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, SourceOrigin origin) : src_(src), line_(origin.line), column_(origin.column) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = column_;
    if (pos_ >= src_.size()) return t;
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < src_.size() &&
                                                        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      t.kind = Tok::Number;
      t.text = lex_number();
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        t.text += advance();
      }
      return t;
    }
    // U+2212 MINUS SIGN is accepted as '-'.
    if (src_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      ++column_;
      t.kind = Tok::Minus;
      t.text = "-";
      return t;
    }
    t.text = std::string(1, advance());
    switch (c) {
      case '+': t.kind = Tok::Plus; break;
      case '-': t.kind = Tok::Minus; break;
      case '*': t.kind = Tok::Star; break;
      case '/': t.kind = Tok::Slash; break;
      case '^': t.kind = Tok::Caret; break;
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      default:
        throw ParseError("unexpected character '" + t.text + "'", t.line, t.column);
    }
    return t;
  }

 private:
  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
  }

  bool digit_at(std::size_t i) const {
    return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
  }

  std::string lex_number() {
    std::string s;
    while (digit_at(pos_)) s += advance();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      s += advance();
      while (digit_at(pos_)) s += advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t k = pos_ + 1;
      if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
      if (digit_at(k)) {
        while (pos_ < k) s += advance();
        while (digit_at(pos_)) s += advance();
      }
    }
    return s;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

class Parser {
 public:
  Parser(std::string_view src, const ConstantMap& constants, const DefinitionMap& definitions, SourceOrigin origin)
      : lexer_(src, origin), constants_(constants), definitions_(definitions) {
    cur_ = lexer_.next();
  }

  ScalarField parse() {
    if (cur_.kind == Tok::End) fail("empty expression");
    ScalarField e = expr();
    if (cur_.kind != Tok::End) fail("unexpected '" + cur_.text + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, cur_.line, cur_.column); }

  Token take() {
    Token t = cur_;
    cur_ = lexer_.next();
    return t;
  }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(std::string("expected ") + what);
    take();
  }

  ScalarField expr() {
    ScalarField e = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const bool plus = take().kind == Tok::Plus;
      ScalarField rhs = term();
      e = plus ? e + rhs : e - rhs;
    }
    return e;
  }

  ScalarField term() {
    ScalarField e = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      const bool mul = take().kind == Tok::Star;
      ScalarField rhs = unary();
      e = mul ? e * rhs : e / rhs;
    }
    return e;
  }

  ScalarField unary() {
    if (cur_.kind == Tok::Minus) {
      take();
      return -unary();
    }
    return power();
  }

  ScalarField power() {
    ScalarField b = base();
    if (cur_.kind != Tok::Caret) return b;
    take();
    return pow(b, exponent());
  }

  int exponent() {
    const bool paren = cur_.kind == Tok::LParen;
    if (paren) take();
    bool negative = false;
    if (cur_.kind == Tok::Minus) {
      take();
      negative = true;
    }
    if (cur_.kind != Tok::Number) fail("exponent must be a literal integer");
    const Token t = cur_;
    Rational r;
    try {
      r = Rational::parse(t.text);
    } catch (const Error&) {
      fail("malformed number '" + t.text + "'");
    }
    if (!r.is_integer() || t.text.find_first_of(".eE") != std::string::npos) fail("exponent must be a literal integer");
    if (r.num() > kMaxExponent) fail("exponent out of range");
    take();
    if (paren) expect(Tok::RParen, "')'");
    const int n = static_cast<int>(r.num());
    return negative ? -n : n;
  }

  ScalarField base() {
    switch (cur_.kind) {
      case Tok::Number: {
        const Token t = take();
        try {
          return ScalarField(Rational::parse(t.text));
        } catch (const Error&) {
          throw ParseError("malformed number '" + t.text + "'", t.line, t.column);
        }
      }
      case Tok::LParen: {
        take();
        ScalarField e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Ident:
        return identifier();
      case Tok::End:
        fail("unexpected end of expression");
      default:
        fail("unexpected '" + cur_.text + "'");
    }
  }

  ScalarField identifier() {
    const Token t = take();
    if (t.text == "exp" || t.text == "sqrt") {
      if (cur_.kind != Tok::LParen) fail("expected '(' after " + t.text);
      take();
      ScalarField arg = expr();
      expect(Tok::RParen, "')'");
      return t.text == "exp" ? exp(arg) : sqrt(arg);
    }
    if (t.text == "x") return ScalarField::x();
    if (t.text == "y") return ScalarField::y();
    if (t.text == "z") return ScalarField::z();
    if (auto it = constants_.find(t.text); it != constants_.end()) return ScalarField::constant(t.text, it->second);
    if (auto it = definitions_.find(t.text); it != definitions_.end()) return it->second;
    throw UnboundIdentifierError(t.text, t.line, t.column);
  }

  Lexer lexer_;
  const ConstantMap& constants_;
  const DefinitionMap& definitions_;
  Token cur_;
};

}  // namespace

ScalarField parse_expr(std::string_view source, const ConstantMap& constants, const DefinitionMap& definitions,
                       SourceOrigin origin) {
  return Parser(source, constants, definitions, origin).parse();
}

}  // namespace walkerpc
