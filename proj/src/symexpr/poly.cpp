#include "lcslab/symexpr/poly.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <limits>
#include <stdexcept>
#include <utility>

#include "lcslab/error.hpp"

namespace lcs {

Monomial Monomial::variable(std::size_t index, std::uint16_t power) {
  if (index >= kMaxVars) throw Error("variable index exceeds the supported variable count");
  Monomial m;
  m.exps[index] = power;
  m.degree = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps[i] > other.exps[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned(exps[i]) + other.exps[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw Error("monomial exponent overflow");
    m.exps[i] = static_cast<std::uint16_t>(e);
  }
  m.degree = degree + other.degree;
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.exps[i] = exps[i] - divisor.exps[i];
  m.degree = degree - divisor.degree;
  return m;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
  }
  return 0;
}

namespace {

bool grlex_greater(const Term& a, const Term& b) { return compare_grlex(a.mono, b.mono) > 0; }

// Merge two sorted term lists; `sign` is +1 for addition and -1 for subtraction.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const int c = compare_grlex(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coef = -out.back().coef;
    } else {
      mpz_class s = sign > 0 ? mpz_class(a[i].coef + b[j].coef) : mpz_class(a[i].coef - b[j].coef);
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coef = -out.back().coef;
  }
  return out;
}

}  // namespace

Poly::Poly(const mpz_class& constant) {
  if (constant != 0) terms_.push_back(Term{Monomial::one(), constant});
}

Poly Poly::variable(std::size_t index) { return from_term(Term{Monomial::variable(index), 1}); }

Poly Poly::from_term(Term t) {
  Poly p;
  if (t.coef != 0) p.terms_.push_back(std::move(t));
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), grlex_greater);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree == 0);
}

bool Poly::is_one() const noexcept {
  return terms_.size() == 1 && terms_[0].mono.degree == 0 && terms_[0].coef == 1;
}

int Poly::leading_sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coef); }

bool Poly::uses(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.mono.exps[var] != 0; });
}

std::uint32_t Poly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max<std::uint32_t>(d, t.mono.exps[var]);
  return d;
}

std::size_t Poly::lowest_var() const {
  std::size_t best = kMaxVars;
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < best; ++i) {
      if (t.mono.exps[i] != 0) {
        best = i;
        break;
      }
    }
  }
  return best;
}

std::size_t Poly::var_span() const {
  std::size_t span = 0;
  for (const auto& t : terms_) {
    for (std::size_t i = kMaxVars; i > span; --i) {
      if (t.mono.exps[i - 1] != 0) {
        span = i;
        break;
      }
    }
  }
  return span;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  terms_ = merge(terms_, rhs.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.is_zero()) return *this;
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const mpz_class& k) {
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= k;
  }
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  if (lhs.size() == 1) return rhs.times_term(lhs.terms_[0]);
  if (rhs.size() == 1) return lhs.times_term(rhs.terms_[0]);
  std::vector<Term> prods;
  prods.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) prods.push_back(Term{a.mono * b.mono, a.coef * b.coef});
  }
  return Poly::from_terms(std::move(prods));
}

Poly Poly::times_term(const Term& t) const {
  Poly p;
  if (t.coef == 0) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& a : terms_) p.terms_.push_back(Term{a.mono * t.mono, a.coef * t.coef});
  return p;
}

Poly Poly::divided_by(const mpz_class& k) const {
  Poly p = *this;
  for (auto& t : p.terms_) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), k.get_mpz_t());
  return p;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (is_zero()) return Poly{};
  if (divisor.is_one()) return *this;
  if (divisor.is_constant()) {
    const mpz_class& k = divisor.terms_[0].coef;
    for (const auto& t : terms_) {
      if (!mpz_divisible_p(t.coef.get_mpz_t(), k.get_mpz_t())) return std::nullopt;
    }
    return divided_by(k);
  }
  const Term& ld = divisor.leading();
  std::vector<Term> quotient;
  Poly rem = *this;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading();
    if (!ld.mono.divides(lt.mono)) return std::nullopt;
    if (!mpz_divisible_p(lt.coef.get_mpz_t(), ld.coef.get_mpz_t())) return std::nullopt;
    Term q{lt.mono / ld.mono, 0};
    mpz_divexact(q.coef.get_mpz_t(), lt.coef.get_mpz_t(), ld.coef.get_mpz_t());
    rem -= divisor.times_term(q);
    quotient.push_back(std::move(q));
  }
  Poly out;
  out.terms_ = std::move(quotient);  // generated in decreasing order
  return out;
}

Poly Poly::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const auto e = t.mono.exps[var];
    if (e == 0) continue;
    Term d{t.mono, t.coef * e};
    d.mono.exps[var] = e - 1;
    d.mono.degree -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(std::move(out));
}

mpq_class Poly::evaluate(std::span<const mpq_class> point) const {
  mpq_class sum = 0;
  for (const auto& t : terms_) {
    mpq_class v = t.coef;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (t.mono.exps[i] == 0) continue;
      if (i >= point.size()) throw Error("evaluation point does not assign every variable");
      mpq_class p;
      mpz_pow_ui(mpq_numref(p.get_mpq_t()), mpq_numref(point[i].get_mpq_t()), t.mono.exps[i]);
      mpz_pow_ui(mpq_denref(p.get_mpq_t()), mpq_denref(point[i].get_mpq_t()), t.mono.exps[i]);
      p.canonicalize();
      v *= p;
    }
    sum += v;
  }
  return sum;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& t : terms_) {
    Term c = t;
    const auto e = c.mono.exps[var];
    c.mono.exps[var] = 0;
    c.mono.degree -= e;
    buckets[e].push_back(std::move(c));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, std::size_t var) {
  std::vector<Term> all;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& t : coeffs[d].terms()) {
      Term s = t;
      if (d > std::numeric_limits<std::uint16_t>::max()) throw Error("monomial exponent overflow");
      s.mono.exps[var] = static_cast<std::uint16_t>(d);
      s.mono.degree += static_cast<std::uint32_t>(d);
      all.push_back(std::move(s));
    }
  }
  return from_terms(std::move(all));
}

// ---------------------------------------------------------------------------
// gcd: recursive primitive polynomial remainder sequences, one variable at a
// time, with integer content handled at the base.

namespace {

using Univariate = std::vector<Poly>;  // coefficient of var^d at index d

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly normalize_sign(Poly p) { return p.leading_sign() < 0 ? -p : p; }

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::logic_error("gcd: inexact division");
  return std::move(*q);
}

Poly content_of(const Univariate& u) {
  Poly g;
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

void make_primitive(Univariate& u) {
  const Poly c = content_of(u);
  if (c.is_one() || c.is_zero()) return;
  for (auto& coef : u) coef = exact(coef, c);
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Univariate pseudo_remainder(Univariate a, const Univariate& b) {
  const std::size_t db = b.size() - 1;
  const Poly& lcb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Poly lca = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lcb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= lca * b[k];
    trim(a);
  }
  return a;
}

Poly monomial_gcd(const Term& m, const Poly& p) {
  mpz_class g = m.coef;
  Monomial mono = m.mono;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    for (std::size_t i = 0; i < kMaxVars; ++i) mono.exps[i] = std::min(mono.exps[i], t.mono.exps[i]);
  }
  mono.degree = 0;
  for (auto e : mono.exps) mono.degree += e;
  return Poly::from_term(Term{mono, abs(g)});
}

// Images mod a 61-bit prime, used to bound gcd degrees before running the PRS.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mul_mod(a, a)) {
    if (e & 1) r = mul_mod(r, a);
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

using ModPoly = std::vector<std::uint64_t>;
using Point = std::array<std::uint64_t, kMaxVars>;

ModPoly image_in(const Poly& p, std::size_t var, const Point& at) {
  ModPoly out(p.degree_in(var) + 1, 0);
  for (const auto& t : p.terms()) {
    std::uint64_t v = mpz_fdiv_ui(t.coef.get_mpz_t(), kPrime);
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (i != var && t.mono.exps[i] != 0) v = mul_mod(v, pow_mod(at[i], t.mono.exps[i]));
    }
    auto& slot = out[t.mono.exps[var]];
    slot = (slot + v) % kPrime;
  }
  return out;
}

void trim_mod(ModPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::size_t gcd_degree_mod(ModPoly a, ModPoly b) {
  trim_mod(a);
  trim_mod(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = inv_mod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul_mod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] = (a[k + shift] + kPrime - mul_mod(f, b[k])) % kPrime;
      trim_mod(a);
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

// Upper bound on deg_var gcd(a, b): reduction at a point that keeps both
// leading coefficients nonzero maps the true gcd onto a divisor of the image
// gcd without lowering its degree. Returns nullopt if no such point was hit.
std::optional<std::size_t> gcd_degree_bound(const Poly& a, const Poly& b, std::size_t var, std::mt19937_64& rng) {
  if (!a.uses(var) || !b.uses(var)) return 0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Point at{};
    for (auto& v : at) v = rng() % kPrime;
    const ModPoly ia = image_in(a, var, at);
    const ModPoly ib = image_in(b, var, at);
    if (ia.back() == 0 || ib.back() == 0) continue;
    return gcd_degree_mod(ia, ib);
  }
  return std::nullopt;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  if (a.is_constant() || b.is_constant()) {
    mpz_class g;
    const mpz_class ca = a.content(), cb = b.content();
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return Poly(g);
  }
  if (a.is_monomial()) return monomial_gcd(a.leading(), b);
  if (b.is_monomial()) return monomial_gcd(b.leading(), a);
  if (a == b) return normalize_sign(a);
  if (b.divide_exact(a)) return normalize_sign(a);
  if (a.divide_exact(b)) return normalize_sign(b);

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (a.terms().size() * 131 + b.terms().size()));
  std::size_t var = kMaxVars;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (!a.uses(v) && !b.uses(v)) continue;
    const auto bound = gcd_degree_bound(a, b, v, rng);
    if (bound && *bound == 0) {
      // The gcd is free of v, so it is the gcd of the contents in v.
      return gcd(content_of(a.coefficients_in(v)), content_of(b.coefficients_in(v)));
    }
    const std::size_t cost = std::max(a.degree_in(v), b.degree_in(v));
    if (a.uses(v) && b.uses(v) && cost < best) {
      best = cost;
      var = v;
    }
  }
  if (var == kMaxVars) var = std::min(a.lowest_var(), b.lowest_var());
  Univariate ua = a.coefficients_in(var);
  Univariate ub = b.coefficients_in(var);
  if (ua.size() == 1) return gcd(a, content_of(ub));
  if (ub.size() == 1) return gcd(b, content_of(ua));

  const Poly ca = content_of(ua);
  const Poly cb = content_of(ub);
  const Poly content_gcd = gcd(ca, cb);
  make_primitive(ua);
  make_primitive(ub);
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (!ub.empty()) {
    if (ub.size() == 1) {
      // Nonzero constant in var: primitive parts are coprime.
      ua = Univariate{Poly(1)};
      break;
    }
    Univariate r = pseudo_remainder(ua, ub);
    make_primitive(r);
    ua = std::move(ub);
    ub = std::move(r);
  }
  return normalize_sign(content_gcd * Poly::from_coefficients(ua, var));
}

// ---------------------------------------------------------------------------

namespace {

void append_monomial(std::string& out, const Monomial& m, std::span<const std::string> names) {
  bool first = true;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m.exps[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (m.exps[i] > 1) out += '^' + std::to_string(m.exps[i]);
  }
}

}  // namespace

std::string to_string(const Poly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coef < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const mpz_class mag = abs(t.coef);
    if (t.mono.degree == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      append_monomial(out, t.mono, names);
    }
  }
  return out;
}

}  // namespace lcs
