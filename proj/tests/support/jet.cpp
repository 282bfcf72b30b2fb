#include "jet.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

void enumerate(std::size_t vars, int left, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == vars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= left; ++e) {
    cur.push_back(e);
    enumerate(vars, left - e, cur, out);
    cur.pop_back();
  }
}

}  // namespace

JetSpace::JetSpace(std::size_t vars_, int order_) : vars(vars_), order(order_) {
  std::vector<int> cur;
  enumerate(vars, order, cur, monos);
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    index[monos[i]] = static_cast<int>(i);
    int d = 0;
    for (int e : monos[i]) d += e;
    degree.push_back(d);
  }
  // constant term first
  const std::size_t n = monos.size();
  mul.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (degree[a] + degree[b] > order) continue;
      std::vector<int> m(vars);
      for (std::size_t v = 0; v < vars; ++v) m[v] = monos[a][v] + monos[b][v];
      mul[a * n + b] = index.at(m);
    }
  }
  raise.assign(vars * n, -1);
  for (std::size_t v = 0; v < vars; ++v) {
    for (std::size_t a = 0; a < n; ++a) {
      if (degree[a] + 1 > order) continue;
      std::vector<int> m = monos[a];
      ++m[v];
      raise[v * n + a] = index.at(m);
    }
  }
}

Jet::Jet(std::shared_ptr<const JetSpace> space, const mpq_class& constant)
    : sp_(std::move(space)), c_(sp_->size()), valid_(sp_->order) {
  c_[0] = constant;
}

Jet Jet::coordinate(std::shared_ptr<const JetSpace> space, std::size_t var, const mpq_class& at) {
  Jet j(space, at);
  j.c_[space->raise[var * space->size() + 0]] = 1;
  return j;
}

const mpq_class& Jet::value() const {
  if (valid_ < 0) throw std::logic_error("jet has no exact constant term left");
  return c_[0];
}

Jet Jet::operator-() const {
  Jet r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Jet& Jet::operator+=(const Jet& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  valid_ = std::min(valid_, o.valid_);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  valid_ = std::min(valid_, o.valid_);
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const std::size_t n = a.sp_->size();
  Jet r(a.sp_, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const int k = a.sp_->mul[i * n + j];
      if (k >= 0 && b.c_[j] != 0) r.c_[k] += a.c_[i] * b.c_[j];
    }
  }
  r.valid_ = std::min(a.valid_, b.valid_);
  return r;
}

Jet Jet::inverse() const {
  if (has_pole()) throw std::domain_error("jet inverse at a pole");
  // 1/(c0 + h) = (1/c0) sum_k (-h/c0)^k
  const mpq_class inv0 = 1 / c_[0];
  Jet h = *this;
  h.c_[0] = 0;
  Jet step = h * Jet(sp_, -inv0);
  Jet term(sp_, 1);
  Jet sum(sp_, 1);
  for (int k = 1; k <= sp_->order; ++k) {
    term = term * step;
    sum += term;
  }
  Jet r = sum * Jet(sp_, inv0);
  r.valid_ = valid_;
  return r;
}

Jet Jet::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Jet r(sp_, 1);
  r.valid_ = valid_;
  for (long i = 0; i < e; ++i) r = r * *this;
  return r;
}

Jet Jet::diff(std::size_t var) const {
  const std::size_t n = sp_->size();
  Jet r(sp_, 0);
  // d/dh_v of c_m h^m: coefficient of m lands at m - e_v with factor m_v
  for (std::size_t a = 0; a < n; ++a) {
    const int up = sp_->raise[var * n + a];
    if (up < 0) continue;
    r.c_[a] = c_[up] * (sp_->monos[up][var]);
  }
  r.valid_ = valid_ - 1;
  return r;
}

namespace {

class Reader {
 public:
  Reader(std::string_view text, std::span<const std::string> names, std::span<const mpq_class> point,
         const std::shared_ptr<const JetSpace>& space)
      : s_(text), names_(names), point_(point), sp_(space) {}

  Jet run() {
    Jet v = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("oracle reader: " + what + " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Jet expr() {
    Jet v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }
  Jet term() {
    Jet v = factor();
    for (;;) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        v = v / factor();
      } else {
        return v;
      }
    }
  }
  long exponent() {
    if (eat('(')) {
      const long e = exponent();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    const bool neg = eat('-');
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected an exponent");
    const long e = std::stol(std::string(s_.substr(start, i_ - start)));
    return neg ? -e : e;
  }
  Jet factor() {
    Jet b = base();
    if (eat('^')) b = b.pow(exponent());
    return b;
  }
  Jet base() {
    if (eat('-')) return -factor();
    if (eat('(')) {
      Jet v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    const std::size_t start = i_;
    if (std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Jet(sp_, mpq_class(mpz_class(std::string(s_.substr(start, i_ - start)))));
    }
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    const std::string_view name = s_.substr(start, i_ - start);
    for (std::size_t v = 0; v < names_.size(); ++v) {
      if (names_[v] == name) return Jet::coordinate(sp_, v, point_[v]);
    }
    fail("unknown token");
  }

  std::string_view s_;
  std::span<const std::string> names_;
  std::span<const mpq_class> point_;
  std::shared_ptr<const JetSpace> sp_;
  std::size_t i_ = 0;
};

}  // namespace

Jet eval_text(std::string_view text, std::span<const std::string> names, std::span<const mpq_class> point,
              const std::shared_ptr<const JetSpace>& space) {
  return Reader(text, names, point, space).run();
}

}  // namespace oracle
