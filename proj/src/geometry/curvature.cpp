#include "lcslab/geometry/curvature.hpp"

#include "lcslab/error.hpp"

namespace lcs {

FrameTensor riemann(const Frame& frame, const ConnectionCoeffs& conn, const FrameTensor& brackets, Exec exec) {
  const std::size_t n = frame.dim();
  FrameTensor r(n, Valence{1, 3});
  // gamma(i,j,k) is Gamma^k_{ij}.
  for_each_index(r.size(), exec, [&](std::size_t f) {
    const auto idx = r.unflat(f);
    const std::size_t i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    if (i == j) return;
    Expr acc = apply(frame[i], conn(j, k, l)) - apply(frame[j], conn(i, k, l));
    for (std::size_t m = 0; m < n; ++m) {
      if (!conn(j, k, m).is_zero() && !conn(i, m, l).is_zero()) acc += conn(j, k, m) * conn(i, m, l);
      if (!conn(i, k, m).is_zero() && !conn(j, m, l).is_zero()) acc -= conn(i, k, m) * conn(j, m, l);
      if (!brackets(i, j, m).is_zero() && !conn(m, k, l).is_zero()) acc -= brackets(i, j, m) * conn(m, k, l);
    }
    r.comps()[f] = std::move(acc);
  });
  return r;
}

FrameTensor lower_riemann(const FrameTensor& riemann13, const FrameMetric& g, Exec exec) {
  const std::size_t n = riemann13.dim();
  FrameTensor out(n, Valence{0, 4});
  for_each_index(out.size(), exec, [&](std::size_t f) {
    const auto idx = out.unflat(f);
    Expr acc;
    for (std::size_t l = 0; l < n; ++l) {
      const Expr& c = riemann13(idx[0], idx[1], idx[2], l);
      if (!c.is_zero() && !g(l, idx[3]).is_zero()) acc += c * g(l, idx[3]);
    }
    out.comps()[f] = std::move(acc);
  });
  return out;
}

FrameTensor ricci(const FrameTensor& riemann13, const FrameMetric& g) {
  // sum_{a,b} g^{ab} g(R(E_a,Y)Z, E_b) = sum_a R(E_a,Y)Z^a
  const std::size_t n = riemann13.dim();
  if (g.dim() != n) throw Error("metric and tensor dimensions differ");
  FrameTensor s(n, Valence{0, 2});
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t z = 0; z < n; ++z) {
      Expr acc;
      for (std::size_t a = 0; a < n; ++a) acc += riemann13(a, y, z, a);
      s(y, z) = std::move(acc);
    }
  }
  return s;
}

Expr scalar_curvature(const FrameTensor& ricci, const FrameMetric& g) {
  const ExprMatrix& ginv = g.inverse();
  Expr acc;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (!ginv(a, b).is_zero() && !ricci(a, b).is_zero()) acc += ginv(a, b) * ricci(a, b);
    }
  }
  return acc;
}

FrameTensor ricci_operator(const FrameTensor& ricci, const FrameMetric& g) {
  const std::size_t n = g.dim();
  const ExprMatrix& ginv = g.inverse();
  FrameTensor q(n, Valence{1, 1});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < n; ++l) {
      Expr acc;
      for (std::size_t b = 0; b < n; ++b) {
        if (!ricci(i, b).is_zero() && !ginv(b, l).is_zero()) acc += ricci(i, b) * ginv(b, l);
      }
      q(i, l) = std::move(acc);
    }
  }
  return q;
}

CurvatureStack curvature_stack(const Frame& frame, const FrameMetric& g, const ConnectionCoeffs& conn,
                               const FrameTensor& brackets, Exec exec) {
  CurvatureStack s;
  s.riemann13 = riemann(frame, conn, brackets, exec);
  s.riemann04 = lower_riemann(s.riemann13, g, exec);
  s.ricci = ricci(s.riemann13, g);
  s.q_operator = ricci_operator(s.ricci, g);
  s.scalar = scalar_curvature(s.ricci, g);
  return s;
}

FrameTensor m_projective(const CurvatureStack& stack, const FrameMetric& g, Exec exec) {
  const std::size_t n = g.dim();
  if (n < 2) throw PreconditionError("M-projective tensor needs n >= 2");
  const Expr c = Expr(mpq_class(1, 2 * (static_cast<long>(n) - 1)));
  const FrameTensor& s = stack.ricci;
  const FrameTensor& q = stack.q_operator;
  FrameTensor out(n, Valence{1, 3});
  for_each_index(out.size(), exec, [&](std::size_t f) {
    const auto idx = out.unflat(f);
    const std::size_t x = idx[0], y = idx[1], z = idx[2], l = idx[3];
    Expr bracket;
    if (x == l) bracket += s(y, z);
    if (y == l) bracket -= s(x, z);
    if (!g(y, z).is_zero()) bracket += g(y, z) * q(x, l);
    if (!g(x, z).is_zero()) bracket -= g(x, z) * q(y, l);
    out.comps()[f] = stack.riemann13.comps()[f] - c * bracket;
  });
  return out;
}

FrameTensor concircular(const CurvatureStack& stack, const FrameMetric& g, Exec exec) {
  const std::size_t n = g.dim();
  if (n < 2) throw PreconditionError("concircular tensor needs n >= 2");
  const long nn = static_cast<long>(n);
  const Expr c = stack.scalar * Expr(mpq_class(1, nn * (nn - 1)));
  FrameTensor out(n, Valence{1, 3});
  for_each_index(out.size(), exec, [&](std::size_t f) {
    const auto idx = out.unflat(f);
    const std::size_t x = idx[0], y = idx[1], w = idx[2], l = idx[3];
    Expr bracket;
    if (x == l) bracket += g(y, w);
    if (y == l) bracket -= g(x, w);
    out.comps()[f] = stack.riemann13.comps()[f] - c * bracket;
  });
  return out;
}

FrameTensor nabla_riemann(const Frame& frame, const ConnectionCoeffs& conn, const FrameTensor& riemann13,
                          Exec exec) {
  return cov_deriv_tensor(frame, conn, riemann13, exec);
}

std::vector<Check> curvature_identities(const CurvatureStack& stack, const FrameTensor& nabla_r,
                                        const FrameMetric& g) {
  const std::size_t n = g.dim();
  const FrameTensor& r13 = stack.riemann13;
  const FrameTensor& r04 = stack.riemann04;
  FrameTensor anti_first(n, Valence{1, 3}), bianchi1(n, Valence{1, 3});
  FrameTensor anti_last(n, Valence{0, 4}), pair(n, Valence{0, 4});
  FrameTensor bianchi2(n, Valence{1, 4});
  FrameTensor ricci_sym(n, Valence{0, 2}), q_def(n, Valence{0, 2});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          anti_first(i, j, k, l) = r13(i, j, k, l) + r13(j, i, k, l);
          bianchi1(i, j, k, l) = r13(i, j, k, l) + r13(j, k, i, l) + r13(k, i, j, l);
          anti_last(i, j, k, l) = r04(i, j, k, l) + r04(i, j, l, k);
          pair(i, j, k, l) = r04(i, j, k, l) - r04(k, l, i, j);
          for (std::size_t m = 0; m < n; ++m) {
            // cyclic over (w, x, y) = (i, j, k), Z = l, output m
            bianchi2(i, j, k, l, m) = nabla_r(i, j, k, l, m) + nabla_r(j, k, i, l, m) + nabla_r(k, i, j, l, m);
          }
        }
      }
      ricci_sym(i, j) = stack.ricci(i, j) - stack.ricci(j, i);
      Expr gq;
      for (std::size_t l = 0; l < n; ++l) {
        if (!stack.q_operator(i, l).is_zero()) gq += stack.q_operator(i, l) * g(l, j);
      }
      q_def(i, j) = gq - stack.ricci(i, j);
    }
  }
  std::vector<Check> out;
  out.push_back(make_check("riemann.antisym12", "R(X,Y)Z + R(Y,X)Z = 0", std::move(anti_first)));
  out.push_back(make_check("riemann.antisym34", "R(X,Y,Z,W) + R(X,Y,W,Z) = 0", std::move(anti_last)));
  out.push_back(make_check("riemann.pair", "R(X,Y,Z,W) - R(Z,W,X,Y) = 0", std::move(pair)));
  out.push_back(make_check("riemann.bianchi1", "R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0", std::move(bianchi1)));
  out.push_back(make_check("riemann.bianchi2", "cyclic_{W,X,Y} (nabla_W R)(X,Y)Z = 0", std::move(bianchi2)));
  out.push_back(make_check("ricci.symmetric", "S(X,Y) - S(Y,X) = 0", std::move(ricci_sym)));
  out.push_back(make_check("ricci.operator", "g(QX,Y) - S(X,Y) = 0", std::move(q_def)));
  return out;
}

}  // namespace lcs
