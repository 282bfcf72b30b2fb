#include "lcslab/lcs_structure.hpp"

#include <utility>

#include "lcslab/error.hpp"
#include "lcslab/geometry/linalg.hpp"

namespace lcs {

namespace {

std::string frame_name(std::size_t i) { return "E" + std::to_string(i + 1); }

Expr delta(std::size_t a, std::size_t b) { return a == b ? Expr(1) : Expr(); }

}  // namespace

LcsCandidate extract_candidate(const Geometry& geo, std::size_t xi_index) {
  const std::size_t n = geo.dim();
  if (xi_index >= n) throw PreconditionError("xi index out of range");
  const ConnectionCoeffs& conn = geo.connection();
  LcsCandidate out;
  LcsStructure& s = out.structure;
  s.xi_index = xi_index;
  s.xi = basis_vector(n, xi_index);
  s.eta = FrameTensor(n, Valence{0, 1});
  for (std::size_t a = 0; a < n; ++a) s.eta(a) = geo.metric()(a, xi_index);

  if (geo.metric()(xi_index, xi_index) != Expr(-1)) {
    out.problems.push_back("g(xi,xi) != -1: " + frame_name(xi_index) + " is not unit timelike");
  }

  // nabla_{E_a} xi = alpha (E_a + eta(E_a) xi) for every a.
  std::optional<Expr> alpha;
  bool consistent = true;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Expr> target = basis_vector(n, a);
    target[xi_index] += s.eta(a);
    std::vector<Expr> grad(n);
    for (std::size_t k = 0; k < n; ++k) grad[k] = conn(a, xi_index, k);
    std::optional<std::size_t> pivot;
    for (std::size_t k = 0; k < n && !pivot; ++k) {
      if (!target[k].is_zero()) pivot = k;
    }
    if (!pivot) {
      bool zero = true;
      for (const auto& e : grad) zero = zero && e.is_zero();
      if (!zero) out.problems.push_back("nabla_" + frame_name(a) + " xi does not vanish");
      continue;
    }
    const Expr candidate = grad[*pivot] / target[*pivot];
    bool proportional = true;
    for (std::size_t k = 0; k < n; ++k) proportional = proportional && grad[k] == candidate * target[k];
    if (!proportional) {
      out.problems.push_back("nabla_" + frame_name(a) + " xi is not proportional to " + frame_name(a) +
                             " + eta(" + frame_name(a) + ") xi");
      consistent = false;
      continue;
    }
    if (!alpha) {
      alpha = candidate;
    } else if (*alpha != candidate) {
      consistent = false;
    }
  }
  if (!consistent) out.problems.push_back("no single alpha satisfies nabla_X xi = alpha (X + eta(X) xi)");
  s.alpha = alpha.value_or(Expr());
  if (s.alpha.is_zero()) out.problems.push_back("alpha vanishes identically");

  s.rho = -geo.derivative(xi_index, s.alpha);
  for (std::size_t a = 0; a < n; ++a) {
    if (geo.derivative(a, s.alpha) != s.rho * s.eta(a)) {
      out.problems.push_back("d(alpha) is not proportional to eta");
      break;
    }
  }
  // d(rho)(xi) = beta eta(xi) = -beta when g(xi,xi) = -1.
  const Expr eta_xi = s.eta(xi_index);
  s.beta = eta_xi.is_zero() ? Expr() : geo.derivative(xi_index, s.rho) / eta_xi;
  for (std::size_t a = 0; a < n; ++a) {
    if (geo.derivative(a, s.rho) != s.beta * s.eta(a)) {
      out.problems.push_back("d(rho) is not proportional to eta");
      break;
    }
  }

  // phi X = (1/alpha) nabla_X xi when alpha != 0, else the algebraic form X + eta(X) xi.
  s.phi = FrameTensor(n, Valence{1, 1});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t l = 0; l < n; ++l) {
      if (!s.alpha.is_zero()) {
        s.phi(a, l) = conn(a, xi_index, l) / s.alpha;
      } else {
        s.phi(a, l) = delta(a, l) + (l == xi_index ? s.eta(a) : Expr());
      }
    }
  }
  return out;
}

LcsStructure derive_structure(const Geometry& geo, std::size_t xi_index) {
  if (xi_index >= geo.dim()) throw PreconditionError("xi index out of range");
  if (geo.metric()(xi_index, xi_index) != Expr(-1)) {
    throw PreconditionError("designated frame field E" + std::to_string(xi_index + 1) + " is not unit timelike");
  }
  LcsCandidate c = extract_candidate(geo, xi_index);
  if (!c.valid()) throw NotLcsError("not an (LCS)_n manifold: " + c.problems.front());
  return std::move(c.structure);
}

std::vector<Check> verify_axioms(const Geometry& geo, const LcsStructure& s) {
  const std::size_t n = geo.dim();
  const std::size_t x = s.xi_index;
  const FrameTensor& g = geo.g();
  const FrameTensor& eta = s.eta;
  const FrameTensor& phi = s.phi;
  const FrameTensor& r13 = geo.curvature().riemann13;
  const FrameTensor& ric = geo.curvature().ricci;
  const ConnectionCoeffs& conn = geo.connection();
  const Expr& alpha = s.alpha;
  const Expr k = s.alpha2_minus_rho();
  const Expr nm1 = Expr(static_cast<long>(n) - 1);

  std::vector<Check> out;
  auto add = [&](std::string id, std::string statement, FrameTensor residual, bool scalar = false) {
    Check c = make_check(std::move(id), std::move(statement), std::move(residual));
    c.scalar = scalar;
    out.push_back(std::move(c));
  };

  add("lcs.xi_unit", "g(xi,xi) = -1", scalar_residual(g(x, x) + Expr(1)), true);

  {
    FrameTensor r(n, Valence{0, 1});
    for (std::size_t a = 0; a < n; ++a) r(a) = g(a, x) - eta(a);
    add("lcs.eta_dual", "g(X,xi) = eta(X)", std::move(r));
  }
  {
    const FrameTensor d_eta = cov_deriv_tensor(geo.frame(), conn, eta);
    FrameTensor r(n, Valence{0, 2});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) r(a, b) = d_eta(a, b) - alpha * (g(a, b) + eta(a) * eta(b));
    }
    Check c = make_check("lcs.nabla_eta", "(nabla_X eta)(Y) = alpha {g(X,Y) + eta(X) eta(Y)}, alpha != 0", std::move(r));
    if (alpha.is_zero()) {
      c.condition_ok = false;
      c.note = "alpha vanishes identically";
    }
    out.push_back(std::move(c));
  }
  {
    FrameTensor r(n, Valence{0, 1});
    for (std::size_t a = 0; a < n; ++a) r(a) = geo.derivative(a, alpha) - s.rho * eta(a);
    Check c = make_check("lcs.d_alpha", "d(alpha)(X) = rho eta(X), rho = -xi(alpha)", std::move(r));
    if (s.rho != -geo.derivative(x, alpha)) {
      c.condition_ok = false;
      c.note = "rho differs from -xi(alpha)";
    }
    out.push_back(std::move(c));
  }
  {
    FrameTensor r(n, Valence{1, 1});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t l = 0; l < n; ++l) r(a, l) = alpha * phi(a, l) - conn(a, x, l);
    }
    add("lcs.nabla_xi", "alpha phi(X) = nabla_X xi", std::move(r));
  }
  {
    FrameTensor r(n, Valence{1, 1});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t l = 0; l < n; ++l) r(a, l) = phi(a, l) - delta(a, l) - (l == x ? eta(a) : Expr());
    }
    add("lcs.phi_def", "phi X = X + eta(X) xi", std::move(r));
  }
  {
    FrameTensor r(n, Valence{1, 1});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t l = 0; l < n; ++l) {
        Expr sq;
        for (std::size_t m = 0; m < n; ++m) sq += phi(a, m) * phi(m, l);
        r(a, l) = sq - delta(a, l) - (l == x ? eta(a) : Expr());
      }
    }
    add("lcs.phi_square", "phi^2 = I + eta (x) xi", std::move(r));
  }
  add("lcs.eta_xi", "eta(xi) = -1", scalar_residual(eta(x) + Expr(1)), true);
  {
    FrameTensor r(n, Valence{1, 0});
    for (std::size_t l = 0; l < n; ++l) r(l) = phi(x, l);
    add("lcs.phi_xi", "phi xi = 0", std::move(r));
  }
  {
    FrameTensor r(n, Valence{0, 1});
    for (std::size_t a = 0; a < n; ++a) {
      Expr acc;
      for (std::size_t l = 0; l < n; ++l) acc += phi(a, l) * eta(l);
      r(a) = std::move(acc);
    }
    add("lcs.eta_phi", "eta o phi = 0", std::move(r));
  }
  {
    FrameTensor r(n, Valence{0, 2});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Expr acc;
        for (std::size_t m = 0; m < n; ++m) {
          if (phi(a, m).is_zero()) continue;
          for (std::size_t p = 0; p < n; ++p) {
            if (!phi(b, p).is_zero() && !g(m, p).is_zero()) acc += phi(a, m) * g(m, p) * phi(b, p);
          }
        }
        r(a, b) = acc - g(a, b) - eta(a) * eta(b);
      }
    }
    add("lcs.phi_metric", "g(phi X, phi Y) = g(X,Y) + eta(X) eta(Y)", std::move(r));
  }
  {
    const FrameTensor d_phi = cov_deriv_tensor(geo.frame(), conn, phi);
    FrameTensor r(n, Valence{1, 2});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t l = 0; l < n; ++l) {
          Expr rhs;
          if (l == x) rhs += g(a, b) + Expr(2) * eta(a) * eta(b);
          if (l == a) rhs += eta(b);
          r(a, b, l) = d_phi(a, b, l) - alpha * rhs;
        }
      }
    }
    add("lcs.nabla_phi", "(nabla_X phi)Y = alpha {g(X,Y) xi + 2 eta(X) eta(Y) xi + eta(Y) X}", std::move(r));
  }
  {
    FrameTensor r(n, Valence{0, 3});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          Expr lhs;
          for (std::size_t l = 0; l < n; ++l) {
            if (!r13(a, b, c, l).is_zero() && !eta(l).is_zero()) lhs += r13(a, b, c, l) * eta(l);
          }
          r(a, b, c) = lhs - k * (g(b, c) * eta(a) - g(a, c) * eta(b));
        }
      }
    }
    add("lcs.eta_R", "eta(R(X,Y)Z) = (alpha^2 - rho) {g(Y,Z) eta(X) - g(X,Z) eta(Y)}", std::move(r));
  }
  {
    FrameTensor r(n, Valence{1, 2});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t l = 0; l < n; ++l) {
          Expr rhs;
          if (l == a) rhs += eta(b);
          if (l == b) rhs -= eta(a);
          r(a, b, l) = r13(a, b, x, l) - k * rhs;
        }
      }
    }
    add("lcs.R_xi", "R(X,Y)xi = (alpha^2 - rho) {eta(Y) X - eta(X) Y}", std::move(r));
  }
  {
    FrameTensor r(n, Valence{1, 2});
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t l = 0; l < n; ++l) {
          Expr rhs;
          if (l == x) rhs += g(a, b);
          if (l == a) rhs -= eta(b);
          r(a, b, l) = r13(x, a, b, l) - k * rhs;
        }
      }
    }
    add("lcs.R_xi_X", "R(xi,X)Y = (alpha^2 - rho) {g(X,Y) xi - eta(Y) X}", std::move(r));
  }
  {
    FrameTensor r(n, Valence{0, 1});
    for (std::size_t a = 0; a < n; ++a) r(a) = ric(a, x) - nm1 * k * eta(a);
    add("lcs.S_xi", "S(X,xi) = (n-1)(alpha^2 - rho) eta(X)", std::move(r));
  }
  {
    FrameTensor r(n, Valence{0, 1});
    for (std::size_t a = 0; a < n; ++a) r(a) = geo.derivative(a, s.rho) - s.beta * eta(a);
    add("lcs.beta", "d(rho)(X) = beta eta(X)", std::move(r));
  }
  return out;
}

std::string to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::einstein:
      return "Einstein";
    case ClassKind::eta_einstein:
      return "eta-Einstein";
    case ClassKind::neither:
      return "neither";
  }
  return "neither";
}

ClassifierVerdict classify(const FrameTensor& ricci, const FrameTensor& g, const FrameTensor& eta) {
  const std::size_t n = g.dim();
  ExprMatrix a(n * n, 2);
  std::vector<Expr> rhs(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i * n + j, 0) = g(i, j);
      a(i * n + j, 1) = eta(i) * eta(j);
      rhs[i * n + j] = ricci(i, j);
    }
  }
  const LinearSolution sol = solve_system(a, rhs);
  ClassifierVerdict v;
  if (!sol.values) {
    v.witness = std::vector<std::size_t>{*sol.inconsistent_row / n, *sol.inconsistent_row % n};
    return v;
  }
  v.a = (*sol.values)[0];
  v.b = (*sol.values)[1];
  v.kind = v.b.is_zero() ? ClassKind::einstein : ClassKind::eta_einstein;
  return v;
}

}  // namespace lcs
