#include <random>

#include <doctest.h>

#include "corpus.hpp"
#include "helpers.hpp"
#include "lcslab/error.hpp"
#include "lcslab/geometry/curvature.hpp"

using helpers::ex;
using lcs::Expr;

namespace {

const lcs::Geometry& example51() {
  static const lcs::Geometry geo = corpus::geometry(corpus::builtin("example51"));
  return geo;
}

std::vector<Expr> vec(const char* a, const char* b, const char* c) { return {ex(a), ex(b), ex(c)}; }

std::vector<Expr> row(const lcs::FrameTensor& t, std::size_t i, std::size_t j) {
  return {t(i, j, 0), t(i, j, 1), t(i, j, 2)};
}

std::vector<Expr> row(const lcs::FrameTensor& t, std::size_t i, std::size_t j, std::size_t k) {
  return {t(i, j, k, 0), t(i, j, k, 1), t(i, j, k, 2)};
}

}  // namespace

TEST_CASE("example51 brackets as printed") {
  const auto& c = example51().brackets();
  CHECK(row(c, 0, 1) == vec("0", "-z", "0"));
  CHECK(row(c, 0, 2) == vec("-1/z", "0", "0"));
  CHECK(row(c, 1, 2) == vec("0", "-1/z", "0"));
}

TEST_CASE("example51 connection as printed") {
  const auto& g = example51().connection().gamma;
  // row(g, i, j) = nabla_{E_{i+1}} E_{j+1}
  CHECK(row(g, 0, 0) == vec("0", "0", "-1/z"));
  CHECK(row(g, 1, 0) == vec("0", "z", "0"));
  CHECK(row(g, 2, 0) == vec("0", "0", "0"));
  CHECK(row(g, 0, 1) == vec("0", "0", "0"));
  CHECK(row(g, 1, 1) == vec("-z", "0", "-1/z"));
  CHECK(row(g, 2, 1) == vec("0", "0", "0"));
  CHECK(row(g, 0, 2) == vec("-1/z", "0", "0"));
  CHECK(row(g, 1, 2) == vec("0", "-1/z", "0"));
  CHECK(row(g, 2, 2) == vec("0", "0", "0"));
}

TEST_CASE("example51 curvature as printed") {
  const auto& r = example51().curvature().riemann13;
  CHECK(row(r, 1, 2, 2) == vec("0", "-2/z^2", "0"));
  CHECK(row(r, 0, 2, 2) == vec("-2/z^2", "0", "0"));
  CHECK(row(r, 0, 1, 1) == vec("1/z^2 - z^2", "0", "0"));
  CHECK(row(r, 1, 2, 1) == vec("0", "0", "-2/z^2"));
  CHECK(row(r, 0, 1, 0) == vec("0", "z^2 - 1/z^2", "0"));
  CHECK(row(r, 0, 2, 0) == vec("0", "0", "-2/z^2"));
}

TEST_CASE("example51 Ricci tensor and scalar curvature (frozen)") {
  const auto& st = example51().curvature();
  CHECK(st.ricci(2, 2) == ex("-4/z^2"));
  // the printed value -(z^2 + 1/z^2) is not the trace of the printed curvature
  CHECK(st.ricci(0, 0) == ex("-(z^4 - 3)/z^2"));
  CHECK(st.ricci(1, 1) == ex("-(z^4 - 3)/z^2"));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) CHECK(st.ricci(i, j).is_zero());
    }
  }
  CHECK(st.scalar == ex("-(2*z^4 - 10)/z^2"));
}

TEST_CASE("Ricci tensor equals the direct contraction of R") {
  const auto& geo = example51();
  const auto& st = geo.curvature();
  const auto& ginv = geo.metric().inverse();
  for (std::size_t y = 0; y < 3; ++y) {
    for (std::size_t z = 0; z < 3; ++z) {
      Expr s;
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) s += ginv(a, b) * st.riemann04(a, y, z, b);
      }
      CHECK(st.ricci(y, z) == s);
    }
  }
  // S(Y,Z) = sum_a R(E_a,Y)Z component a, the plain trace
  for (std::size_t y = 0; y < 3; ++y) {
    Expr tr;
    for (std::size_t a = 0; a < 3; ++a) tr += st.riemann13(a, y, y, a);
    CHECK(st.ricci(y, y) == tr);
  }
}

TEST_CASE("example51 nabla S (frozen)") {
  const auto& ds = example51().nabla_ricci();
  // hand: -S(nabla_1 E1, E3) - S(E1, nabla_1 E3) = -4/z^3 + (3/z^2 - z^2)/z
  CHECK(ds(0, 0, 2) == ex("-(z^4 + 1)/z^3"));
  CHECK(ds(0, 2, 0) == ds(0, 0, 2));
  CHECK(ds(1, 1, 2) == ds(0, 0, 2));
  CHECK(ds(2, 0, 0) == ex("-(2*z^4 + 6)/z^3"));
  CHECK(ds(2, 1, 1) == ex("-(2*z^4 + 6)/z^3"));
  CHECK(ds(2, 2, 2) == ex("8/z^3"));
}

TEST_CASE("bracket antisymmetry and Jacobi on the corpus") {
  for (const auto& def : corpus::all()) {
    CAPTURE(def.name);
    const auto geo = corpus::geometry(def);
    const auto& c = geo.brackets();
    const auto& f = geo.frame();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) CHECK(c(i, j, k) == -c(j, i, k));
        const auto lhs = lcs::lie_bracket(f[i], f[j]);
        const auto rhs = f.recompose(row(c, i, j));
        CHECK(lhs == rhs);
        for (std::size_t k = 0; k < 3; ++k) {
          const auto a = lcs::lie_bracket(lcs::lie_bracket(f[i], f[j]), f[k]);
          const auto b = lcs::lie_bracket(lcs::lie_bracket(f[j], f[k]), f[i]);
          const auto d = lcs::lie_bracket(lcs::lie_bracket(f[k], f[i]), f[j]);
          for (std::size_t m = 0; m < 3; ++m) CHECK((a.coeffs[m] + b.coeffs[m] + d.coeffs[m]).is_zero());
        }
      }
    }
  }
}

TEST_CASE("decompose inverts recompose") {
  std::mt19937 rng(23);
  for (const auto& def : corpus::all()) {
    CAPTURE(def.name);
    const auto geo = corpus::geometry(def);
    for (int trial = 0; trial < 5; ++trial) {
      const std::vector<Expr> c{helpers::random_rational(rng), helpers::random_poly(rng), helpers::random_poly(rng)};
      const auto x = geo.frame().recompose(c);
      CHECK(lcs::decompose(x, geo.frame()) == c);
      CHECK(geo.frame().components_of(x) == c);
    }
  }
}

TEST_CASE("singular frames are rejected") {
  lcs::VectorField a{{ex("x"), ex("y"), Expr()}};
  lcs::VectorField b{{ex("2*x"), ex("2*y"), Expr()}};
  lcs::VectorField c{{Expr(), Expr(), Expr(1)}};
  CHECK_THROWS_AS(lcs::Frame({a, b, c}), lcs::SingularMatrix);
}

TEST_CASE("Levi-Civita connection is torsion free and metric on the corpus") {
  for (const auto& def : corpus::all()) {
    CAPTURE(def.name);
    const auto geo = corpus::geometry(def);
    CHECK(lcs::torsion(geo.connection(), geo.brackets()).is_zero());
    CHECK(lcs::metricity_defect(geo.frame(), geo.metric(), geo.connection()).is_zero());
  }
}

TEST_CASE("curvature identities hold on the corpus") {
  for (const auto& def : corpus::all()) {
    CAPTURE(def.name);
    const auto geo = corpus::geometry(def);
    for (const auto& c : lcs::curvature_identities(geo.curvature(), geo.nabla_riemann(), geo.metric())) {
      CAPTURE(c.id);
      CHECK(c.passed());
    }
  }
}

TEST_CASE("serial and parallel kernels agree exactly") {
  for (const auto& def : corpus::all()) {
    CAPTURE(def.name);
    const auto s = corpus::geometry(def, lcs::Exec::serial);
    const auto p = corpus::geometry(def, lcs::Exec::parallel);
    CHECK(s.brackets() == p.brackets());
    CHECK(s.connection().gamma == p.connection().gamma);
    CHECK(s.curvature().riemann13 == p.curvature().riemann13);
    CHECK(s.curvature().riemann04 == p.curvature().riemann04);
    CHECK(s.curvature().ricci == p.curvature().ricci);
    CHECK(s.curvature().scalar == p.curvature().scalar);
    CHECK(s.nabla_riemann() == p.nabla_riemann());
    CHECK(s.nabla_ricci() == p.nabla_ricci());
    const auto& st = s.curvature();
    CHECK(lcs::m_projective(st, s.metric(), lcs::Exec::serial) ==
          lcs::m_projective(st, s.metric(), lcs::Exec::parallel));
    CHECK(lcs::concircular(st, s.metric(), lcs::Exec::serial) ==
          lcs::concircular(st, s.metric(), lcs::Exec::parallel));
  }
}

TEST_CASE("constant curvature frame: R = g(Y,Z)X - g(X,Z)Y, C = 0, M = 0") {
  const auto geo = corpus::geometry(corpus::builtin("const-curv3"));
  const auto& st = geo.curvature();
  const auto& g = geo.g();
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      for (std::size_t z = 0; z < 3; ++z) {
        for (std::size_t l = 0; l < 3; ++l) {
          Expr want;
          if (l == x) want += g(y, z);
          if (l == y) want -= g(x, z);
          CHECK(st.riemann13(x, y, z, l) == want);
        }
      }
    }
  }
  CHECK(st.scalar == Expr(6));
  CHECK(lcs::concircular(st, geo.metric()).is_zero());
  CHECK(lcs::m_projective(st, geo.metric()).is_zero());
  CHECK(geo.nabla_riemann().is_zero());
}

TEST_CASE("example51 concircular and M-projective tensors do not vanish") {
  const auto& geo = example51();
  CHECK(lcs::concircular(geo.curvature(), geo.metric()).nonzero_count() > 0);
  CHECK(lcs::m_projective(geo.curvature(), geo.metric()).nonzero_count() > 0);
}

TEST_CASE("flat frame has zero curvature") {
  const auto geo = corpus::geometry(corpus::builtin("flat3"));
  CHECK(geo.brackets().is_zero());
  CHECK(geo.connection().gamma.is_zero());
  CHECK(geo.curvature().riemann13.is_zero());
}

TEST_CASE("Lie derivative of g along xi on example51") {
  const auto& geo = example51();
  const auto lie = lcs::lie_derivative_metric(geo.frame(), geo.metric(), geo.brackets(), vec("0", "0", "1"));
  CHECK(lie(0, 0) == ex("-2/z"));
  CHECK(lie(1, 1) == ex("-2/z"));
  CHECK(lie(2, 2).is_zero());
  CHECK(lie(0, 1).is_zero());
}

TEST_CASE("covariant derivative rejects unsupported valence") {
  const auto& geo = example51();
  CHECK_THROWS_AS(lcs::FrameTensor(3, lcs::Valence{2, 0}), lcs::Error);
  const lcs::FrameTensor t(3, lcs::Valence{0, 4});
  CHECK_THROWS_AS(lcs::cov_deriv_tensor(geo.frame(), geo.connection(), t), lcs::Error);
}
