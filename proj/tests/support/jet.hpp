#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Monomials of total degree <= order in `vars` variables, with product and
/// derivative tables.
struct JetSpace {
  std::size_t vars = 0;
  int order = 0;
  std::vector<std::vector<int>> monos;
  std::vector<int> degree;
  // mul[a * size + b] = index of mono a * mono b, or -1 past the order.
  std::vector<int> mul;
  // raise[v * size + a] = index of mono a * x_v, or -1.
  std::vector<int> raise;

  JetSpace(std::size_t vars, int order);
  std::size_t size() const { return monos.size(); }
};

/// Truncated Taylor expansion f(p + h) = sum c_m h^m around a rational
/// point. `valid` is the highest degree whose coefficients are exact; it
/// drops by one per derivative.
class Jet {
 public:
  Jet() = default;
  Jet(std::shared_ptr<const JetSpace> space, const mpq_class& constant);
  static Jet coordinate(std::shared_ptr<const JetSpace> space, std::size_t var, const mpq_class& at);

  const mpq_class& value() const;
  bool has_pole() const { return c_[0] == 0; }
  int valid() const { return valid_; }

  Jet operator-() const;
  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }
  Jet inverse() const;
  Jet pow(long e) const;
  Jet diff(std::size_t var) const;

 private:
  std::shared_ptr<const JetSpace> sp_;
  std::vector<mpq_class> c_;
  int valid_ = 0;
};

/// Evaluates expression text directly to a jet at `point`. A separate
/// recursive-descent reader, so the oracle never touches the engine parser.
Jet eval_text(std::string_view text, std::span<const std::string> names, std::span<const mpq_class> point,
              const std::shared_ptr<const JetSpace>& space);

}  // namespace oracle
