#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lcslab/symexpr/expr.hpp"
#include "lcslab/symexpr/parser.hpp"

namespace helpers {

inline const std::vector<std::string>& xyz() {
  static const std::vector<std::string> names{"x", "y", "z"};
  return names;
}

inline lcs::Expr ex(std::string_view text) { return lcs::parse(text, xyz()); }

inline std::string str(const lcs::Expr& e) { return lcs::to_string(e, xyz()); }

/// Random polynomial in x, y, z with up to `terms` terms, degree <= 3.
inline lcs::Expr random_poly(std::mt19937& rng, int terms = 3) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> count(1, terms);
  lcs::Expr out;
  for (int k = count(rng); k > 0; --k) {
    lcs::Expr t(coef(rng));
    for (std::size_t v = 0; v < 3; ++v) t *= lcs::Expr::variable(v).pow(exp(rng));
    out += t;
  }
  return out;
}

/// Random rational function; retries until the denominator is nonzero.
inline lcs::Expr random_rational(std::mt19937& rng) {
  lcs::Expr den;
  while (den.is_zero()) den = random_poly(rng, 2);
  return random_poly(rng) / den;
}

inline std::vector<mpq_class> random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<mpq_class> p;
  for (int v = 0; v < 3; ++v) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    p.push_back(q);
  }
  return p;
}

}  // namespace helpers
