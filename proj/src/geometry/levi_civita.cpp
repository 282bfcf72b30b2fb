#include "lcslab/geometry/levi_civita.hpp"

#include "lcslab/error.hpp"

namespace lcs {

namespace {

// g([E_i,E_j], E_k) from structure constants.
Expr bracket_pair(const FrameTensor& c, const FrameMetric& g, std::size_t i, std::size_t j, std::size_t k) {
  Expr acc;
  for (std::size_t m = 0; m < g.dim(); ++m) {
    const Expr& cm = c(i, j, m);
    if (!cm.is_zero() && !g(m, k).is_zero()) acc += cm * g(m, k);
  }
  return acc;
}

void require_same_dim(const Frame& frame, std::size_t n) {
  if (frame.dim() != n) throw Error("frame and tensor dimensions differ");
}

}  // namespace

FrameTensor structure_constants(const Frame& frame, Exec exec) {
  const std::size_t n = frame.dim();
  FrameTensor c(n, Valence{1, 2});
  std::vector<std::vector<Expr>> pairs(n * n);
  for_each_index(n * n, exec, [&](std::size_t p) {
    const std::size_t i = p / n, j = p % n;
    if (i >= j) return;
    pairs[p] = frame.components_of(lie_bracket(frame[i], frame[j]));
  });
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        c(i, j, k) = pairs[i * n + j][k];
        c(j, i, k) = -pairs[i * n + j][k];
      }
    }
  }
  return c;
}

ConnectionCoeffs koszul(const Frame& frame, const FrameMetric& g, const FrameTensor& brackets, Exec exec) {
  const std::size_t n = frame.dim();
  if (g.dim() != n || brackets.dim() != n) throw Error("frame, metric and brackets disagree on dimension");
  // lowered(i,j,k) = g(nabla_{E_i} E_j, E_k)
  FrameTensor lowered(n, Valence{0, 3});
  const Expr half = Expr(mpq_class(1, 2));
  for_each_index(lowered.size(), exec, [&](std::size_t f) {
    const std::size_t i = f / (n * n), j = (f / n) % n, k = f % n;
    Expr twice = apply(frame[i], g(j, k)) + apply(frame[j], g(i, k)) - apply(frame[k], g(i, j)) +
                 bracket_pair(brackets, g, i, j, k) - bracket_pair(brackets, g, i, k, j) -
                 bracket_pair(brackets, g, j, k, i);
    lowered.comps()[f] = twice * half;
  });
  ConnectionCoeffs conn{FrameTensor(n, Valence{1, 2})};
  const ExprMatrix& ginv = g.inverse();
  for_each_index(conn.gamma.size(), exec, [&](std::size_t f) {
    const std::size_t i = f / (n * n), j = (f / n) % n, k = f % n;
    Expr acc;
    for (std::size_t l = 0; l < n; ++l) {
      const Expr& low = lowered(i, j, l);
      if (!low.is_zero() && !ginv(k, l).is_zero()) acc += ginv(k, l) * low;
    }
    conn.gamma.comps()[f] = std::move(acc);
  });
  return conn;
}

ConnectionCoeffs koszul(const Frame& frame, const FrameMetric& g, Exec exec) {
  return koszul(frame, g, structure_constants(frame, exec), exec);
}

std::vector<Expr> cov_deriv_vector(const Frame& frame, const ConnectionCoeffs& conn, std::span<const Expr> x,
                                   std::span<const Expr> y) {
  const std::size_t n = frame.dim();
  if (x.size() != n || y.size() != n) throw Error("component list length mismatch");
  std::vector<Expr> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      Expr term = apply(frame[i], y[k]);
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j].is_zero() && !conn(i, j, k).is_zero()) term += y[j] * conn(i, j, k);
      }
      if (!term.is_zero()) out[k] += x[i] * term;
    }
  }
  return out;
}

namespace {

// (nabla_{E_a} T)(idx) for the tensor index `idx` of T.
Expr covariant_component(const Frame& frame, const ConnectionCoeffs& conn, const FrameTensor& t, std::size_t a,
                         std::vector<std::size_t> idx) {
  const std::size_t n = t.dim();
  const std::size_t down = t.valence().down;
  Expr acc = apply(frame[a], t.at(idx));
  for (std::size_t slot = 0; slot < down; ++slot) {
    const std::size_t b = idx[slot];
    for (std::size_t m = 0; m < n; ++m) {
      const Expr& gam = conn(a, b, m);
      if (gam.is_zero()) continue;
      idx[slot] = m;
      const Expr& tm = t.at(idx);
      if (!tm.is_zero()) acc -= gam * tm;
    }
    idx[slot] = b;
  }
  if (t.valence().up == 1) {
    const std::size_t l = idx.back();
    for (std::size_t m = 0; m < n; ++m) {
      const Expr& gam = conn(a, m, l);
      if (gam.is_zero()) continue;
      idx.back() = m;
      const Expr& tm = t.at(idx);
      if (!tm.is_zero()) acc += gam * tm;
    }
  }
  return acc;
}

}  // namespace

FrameTensor cov_deriv_tensor(const Frame& frame, const ConnectionCoeffs& conn, const FrameTensor& t, Exec exec) {
  require_same_dim(frame, t.dim());
  const Valence v = t.valence();
  if (v.up > 1 || v.down + 1 > 4) {
    throw Error("covariant derivative of a (" + std::to_string(v.up) + "," + std::to_string(v.down) +
                ") tensor is not supported");
  }
  FrameTensor out(t.dim(), Valence{v.up, v.down + 1});
  const std::size_t block = t.size();
  for_each_index(out.size(), exec, [&](std::size_t f) {
    out.comps()[f] = covariant_component(frame, conn, t, f / block, t.unflat(f % block));
  });
  return out;
}

FrameTensor cov_deriv_tensor_along(const Frame& frame, const ConnectionCoeffs& conn, const FrameTensor& t,
                                   std::span<const Expr> w, Exec exec) {
  require_same_dim(frame, t.dim());
  if (w.size() != t.dim()) throw Error("direction has the wrong number of components");
  FrameTensor out(t.dim(), t.valence());
  for_each_index(out.size(), exec, [&](std::size_t f) {
    const auto idx = t.unflat(f);
    Expr acc;
    for (std::size_t a = 0; a < t.dim(); ++a) {
      if (!w[a].is_zero()) acc += w[a] * covariant_component(frame, conn, t, a, idx);
    }
    out.comps()[f] = std::move(acc);
  });
  return out;
}

FrameTensor lie_derivative_metric(const Frame& frame, const FrameMetric& g, const FrameTensor& brackets,
                                  std::span<const Expr> v) {
  const std::size_t n = frame.dim();
  if (v.size() != n) throw Error("direction has the wrong number of components");
  // bracket_with_v[i][k] = [V, E_i]^k
  std::vector<std::vector<Expr>> vb(n, std::vector<Expr>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Expr acc = -apply(frame[i], v[k]);
      for (std::size_t a = 0; a < n; ++a) {
        if (!v[a].is_zero() && !brackets(a, i, k).is_zero()) acc += v[a] * brackets(a, i, k);
      }
      vb[i][k] = std::move(acc);
    }
  }
  FrameTensor out(n, Valence{0, 2});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Expr acc;
      for (std::size_t a = 0; a < n; ++a) {
        if (!v[a].is_zero()) acc += v[a] * apply(frame[a], g(i, j));
      }
      acc -= metric_pair(g, vb[i], basis_vector(n, j));
      acc -= metric_pair(g, basis_vector(n, i), vb[j]);
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

FrameTensor metric_tensor(const FrameMetric& g) {
  FrameTensor t(g.dim(), Valence{0, 2});
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) t(i, j) = g(i, j);
  }
  return t;
}

FrameTensor torsion(const ConnectionCoeffs& conn, const FrameTensor& brackets) {
  const std::size_t n = conn.dim();
  FrameTensor t(n, Valence{1, 2});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = conn(i, j, k) - conn(j, i, k) - brackets(i, j, k);
    }
  }
  return t;
}

FrameTensor metricity_defect(const Frame& frame, const FrameMetric& g, const ConnectionCoeffs& conn) {
  const std::size_t n = frame.dim();
  FrameTensor t(n, Valence{0, 3});
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Expr acc = apply(frame[k], g(i, j));
        for (std::size_t m = 0; m < n; ++m) {
          if (!conn(k, i, m).is_zero()) acc -= conn(k, i, m) * g(m, j);
          if (!conn(k, j, m).is_zero()) acc -= g(i, m) * conn(k, j, m);
        }
        t(k, i, j) = std::move(acc);
      }
    }
  }
  return t;
}

}  // namespace lcs
