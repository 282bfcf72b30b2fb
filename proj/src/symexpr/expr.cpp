#include "lcslab/symexpr/expr.hpp"

#include <utility>

#include "lcslab/error.hpp"

namespace lcs {

namespace {

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("expr: inexact division by a common factor");
  return std::move(*q);
}

}  // namespace

Expr::Expr(const mpq_class& value) : num_(value.get_num()), den_(value.get_den()) {}

Expr Expr::variable(std::size_t index) {
  Expr e;
  e.num_ = Poly::variable(index);
  return e;
}

Expr Expr::fraction(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero();
  Expr e;
  if (num.is_zero()) return e;
  if (!den.is_one()) {
    const Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact_quotient(num, g);
      den = exact_quotient(den, g);
    }
    if (den.leading_sign() < 0) {
      num = -num;
      den = -den;
    }
  }
  e.num_ = std::move(num);
  e.den_ = std::move(den);
  return e;
}

mpq_class Expr::constant_value() const {
  if (!is_constant()) throw Error("expression is not constant");
  if (num_.is_zero()) return 0;
  mpq_class q(num_.leading().coef, den_.leading().coef);
  q.canonicalize();
  return q;
}

std::size_t Expr::var_span() const noexcept { return std::max(num_.var_span(), den_.var_span()); }

Expr Expr::operator-() const {
  Expr e = *this;
  e.num_ = -e.num_;
  return e;
}

Expr& Expr::operator+=(const Expr& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    if (den_.is_one()) {
      num_ += rhs.num_;
      return *this;
    }
    return *this = fraction(num_ + rhs.num_, den_);
  }
  const Poly g = gcd(den_, rhs.den_);
  const Poly left = exact_quotient(rhs.den_, g);
  const Poly right = exact_quotient(den_, g);
  return *this = fraction(num_ * left + rhs.num_ * right, den_ * left);
}

Expr& Expr::operator-=(const Expr& rhs) { return *this += -rhs; }

Expr& Expr::operator*=(const Expr& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = Expr();
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ = num_ * rhs.num_;
    return *this;
  }
  // Cross-cancel; both inputs are already reduced.
  const Poly g1 = gcd(num_, rhs.den_);
  const Poly g2 = gcd(rhs.num_, den_);
  Poly n = exact_quotient(num_, g1) * exact_quotient(rhs.num_, g2);
  Poly d = exact_quotient(den_, g2) * exact_quotient(rhs.den_, g1);
  if (d.leading_sign() < 0) {
    n = -n;
    d = -d;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

Expr& Expr::operator/=(const Expr& rhs) { return *this *= rhs.inverse(); }

Expr Expr::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Expr e;
  e.num_ = den_;
  e.den_ = num_;
  if (e.den_.leading_sign() < 0) {
    e.num_ = -e.num_;
    e.den_ = -e.den_;
  }
  return e;
}

Expr Expr::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Expr result(1);
  Expr base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Expr Expr::diff(std::size_t var) const {
  if (var >= kMaxVars) throw Error("variable index exceeds the supported variable count");
  if (den_.is_constant()) return fraction(num_.derivative(var), den_);
  Poly top = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  return fraction(std::move(top), den_ * den_);
}

mpq_class Expr::eval_at(std::span<const mpq_class> point) const {
  const mpq_class d = den_.evaluate(point);
  if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

namespace {

bool is_single_factor(const Poly& p) {
  if (!p.is_monomial()) return false;
  const Term& t = p.leading();
  if (t.mono.degree == 0) return true;
  if (t.coef != 1) return false;
  int vars = 0;
  for (auto e : t.mono.exps) vars += e != 0;
  return vars == 1;
}

}  // namespace

std::string to_string(const Expr& e, std::span<const std::string> names) {
  if (e.is_polynomial()) return to_string(e.numerator(), names);
  if (e.numerator().leading_sign() < 0) return "-" + to_string(-e, names);
  std::string out;
  const Poly& num = e.numerator();
  if (num.size() > 1) {
    out = "(" + to_string(num, names) + ")";
  } else {
    out = to_string(num, names);
  }
  out += '/';
  const Poly& den = e.denominator();
  if (is_single_factor(den)) {
    out += to_string(den, names);
  } else {
    out += "(" + to_string(den, names) + ")";
  }
  return out;
}

}  // namespace lcs
