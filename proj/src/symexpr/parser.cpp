#include "lcslab/symexpr/parser.hpp"

#include <cctype>
#include <limits>

#include "lcslab/error.hpp"

namespace lcs {

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  Expr run() {
    if (vars_.size() > kMaxVars) throw Error("too many variables");
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Expr e = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else {
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('/')) return acc;
        Expr divisor = factor();
        if (divisor.is_zero()) throw ParseError("division by zero", at);
        acc /= divisor;
      }
    }
  }

  Expr factor() {
    Expr b = base();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return b;
    const long exponent = exponent_literal();
    if (exponent < 0 && b.is_zero()) throw ParseError("negative power of zero", at);
    return b.pow(exponent);
  }

  long exponent_literal() {
    const bool parens = accept('(');
    bool negative = accept('-');
    if (!negative) accept('+');
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", start);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    long value = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (parens && !accept(')')) throw ParseError("expected ')'", pos_);
    return negative ? -value : value;
  }

  Expr base() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expr(mpz_class(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Expr::variable(i);
      }
      throw ParseError("unknown variable '" + std::string(name) + "'", start);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text, std::span<const std::string> vars) { return Parser(text, vars).run(); }

mpq_class parse_rational(std::string_view text) {
  const Expr e = parse(text, {});
  return e.constant_value();
}

}  // namespace lcs
