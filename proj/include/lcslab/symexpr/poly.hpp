#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lcs {

/// Upper bound on the number of variables a polynomial may mention.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector. Variables are identified by their declaration index.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exps{};
  std::uint32_t degree = 0;

  static Monomial one() { return {}; }
  static Monomial variable(std::size_t index, std::uint16_t power = 1);

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires `divisor.divides(*this)`.
  Monomial operator/(const Monomial& divisor) const;
  bool operator==(const Monomial&) const = default;
};

/// Graded lexicographic comparison: +1 if a > b, -1 if a < b, 0 if equal.
/// Lower variable indices are more significant among equal total degree.
int compare_grlex(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  mpz_class coef;
  bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial over the integers. Terms are kept in
/// strictly decreasing graded-lex order with nonzero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const mpz_class& constant);
  explicit Poly(long constant) : Poly(mpz_class(constant)) {}
  static Poly variable(std::size_t index);
  static Poly from_term(Term t);
  /// Sorts and merges arbitrary terms.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  /// Requires a nonzero polynomial.
  const Term& leading() const { return terms_.front(); }
  int leading_sign() const;

  bool uses(std::size_t var) const;
  std::uint32_t degree_in(std::size_t var) const;
  /// Smallest variable index occurring, or kMaxVars for constants.
  std::size_t lowest_var() const;
  /// Number of leading variable slots that can be nonzero (max index + 1).
  std::size_t var_span() const;

  /// gcd of all coefficients, positive; zero for the zero polynomial.
  mpz_class content() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const mpz_class& k);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  Poly times_term(const Term& t) const;
  /// Divides every coefficient by k; k must divide all of them.
  Poly divided_by(const mpz_class& k) const;

  /// Returns q with q * divisor == *this, or nullopt when the division is not exact.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  Poly derivative(std::size_t var) const;
  mpq_class evaluate(std::span<const mpq_class> point) const;

  /// Coefficients in `var`: result[d] multiplies var^d and does not mention var.
  std::vector<Poly> coefficients_in(std::size_t var) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, std::size_t var);

  bool operator==(const Poly&) const = default;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor over Z[x...], normalized to a positive leading
/// coefficient. gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

/// Renders with the expression grammar; `names[i]` names variable i.
std::string to_string(const Poly& p, std::span<const std::string> names);

}  // namespace lcs
