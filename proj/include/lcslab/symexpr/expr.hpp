#pragma once

#include <cstddef>
#include <span>
#include <string>

#include <gmpxx.h>

#include "lcslab/symexpr/poly.hpp"

namespace lcs {

/// An element of the rational function field Q(x_0, ..., x_{k-1}).
///
/// Stored as numerator/denominator over Z[x] in canonical form: the two are
/// coprime, the denominator's graded-lex leading coefficient is positive and
/// zero is 0/1. Because the form is unique, `==` is exact field equality.
/// Variables are positional; names live in the chart that owns them.
class Expr {
 public:
  Expr() : den_(1) {}
  Expr(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit Expr(const mpz_class& value) : num_(value), den_(1) {}
  explicit Expr(const mpq_class& value);

  static Expr variable(std::size_t index);
  /// Canonicalizes num/den. Throws DivisionByZero for a zero denominator.
  static Expr fraction(Poly num, Poly den);

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  /// Rational value; requires is_constant().
  mpq_class constant_value() const;
  /// Term count of numerator plus denominator; used to rank pivots.
  std::size_t size() const noexcept { return num_.size() + den_.size(); }
  std::size_t var_span() const noexcept;

  Expr operator-() const;
  Expr& operator+=(const Expr& rhs);
  Expr& operator-=(const Expr& rhs);
  Expr& operator*=(const Expr& rhs);
  Expr& operator/=(const Expr& rhs);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(Expr a, const Expr& b) { return a *= b; }
  friend Expr operator/(Expr a, const Expr& b) { return a /= b; }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Expr inverse() const;
  Expr pow(long exponent) const;
  /// Exact partial derivative in the given variable.
  Expr diff(std::size_t var) const;
  /// Exact value at a rational point; throws PoleError if the denominator vanishes.
  mpq_class eval_at(std::span<const mpq_class> point) const;

  bool operator==(const Expr&) const = default;

 private:
  Poly num_;
  Poly den_;
};

/// Prints with the expression grammar (minimal parentheses). The output
/// parses back to the same canonical Expr.
std::string to_string(const Expr& e, std::span<const std::string> names);

}  // namespace lcs
