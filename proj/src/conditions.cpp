#include "lcslab/conditions.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "lcslab/error.hpp"
#include "lcslab/geometry/curvature.hpp"
#include "lcslab/geometry/linalg.hpp"

namespace lcs {

namespace {

Expr n_expr(std::size_t n) { return Expr(static_cast<long>(n)); }

FrameTensor one_form(const std::vector<Expr>& comps) {
  FrameTensor t(comps.size(), Valence{0, 1});
  t.comps() = comps;
  return t;
}

std::vector<Expr> raise(const FrameMetric& g, const FrameTensor& form) {
  const std::size_t n = g.dim();
  const ExprMatrix& ginv = g.inverse();
  std::vector<Expr> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t a = 0; a < n; ++a) {
      if (!form(a).is_zero() && !ginv(a, k).is_zero()) out[k] += form(a) * ginv(a, k);
    }
  }
  return out;
}

/// S - (r/n) g: zero exactly when the manifold is Einstein.
FrameTensor trace_free_ricci(const Geometry& geo) {
  const std::size_t n = geo.dim();
  const Expr c = geo.curvature().scalar / n_expr(n);
  FrameTensor out(n, Valence{0, 2});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = geo.curvature().ricci(i, j) - c * geo.g()(i, j);
  }
  return out;
}

GatedCheck gated(Check conclusion, bool holds, std::string gate) {
  GatedCheck g;
  g.conclusion = std::move(conclusion);
  g.hypothesis_holds = holds;
  g.gate = std::move(gate);
  return g;
}

}  // namespace

std::string to_string(RecurrenceKind kind) {
  switch (kind) {
    case RecurrenceKind::sgr:
      return "SGR";
    case RecurrenceKind::sgrr:
      return "SGRR";
    case RecurrenceKind::sgpr:
      return "SGPR";
  }
  return "SGR";
}

std::optional<RecurrenceKind> parse_recurrence_kind(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  if (up == "SGR") return RecurrenceKind::sgr;
  if (up == "SGRR") return RecurrenceKind::sgrr;
  if (up == "SGPR") return RecurrenceKind::sgpr;
  return std::nullopt;
}

RecurrenceForms make_forms(const Geometry& geo, std::vector<Expr> a, std::vector<Expr> b) {
  if (a.size() != geo.dim() || b.size() != geo.dim()) {
    throw PreconditionError("recurrence forms need " + std::to_string(geo.dim()) + " components each");
  }
  RecurrenceForms f;
  f.a = one_form(a);
  f.b = one_form(b);
  f.rho1 = raise(geo.metric(), f.a);
  f.rho2 = raise(geo.metric(), f.b);
  return f;
}

FrameTensor recurrence_residual(RecurrenceKind kind, const Geometry& geo, const RecurrenceForms& forms,
                                const LcsStructure* lcs) {
  const std::size_t n = geo.dim();
  const FrameTensor& g = geo.g();
  const FrameTensor& a = forms.a;
  const FrameTensor& b = forms.b;
  if (kind == RecurrenceKind::sgrr) {
    const FrameTensor& ds = geo.nabla_ricci();
    const FrameTensor& s = geo.curvature().ricci;
    FrameTensor out(n, Valence{0, 3});
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          out(x, y, z) = ds(x, y, z) - a(x) * s(y, z) - n_expr(n) * b(x) * g(y, z);
        }
      }
    }
    return out;
  }
  if (kind == RecurrenceKind::sgpr && lcs == nullptr) {
    throw PreconditionError("SGPR residual needs the (LCS)_n structure");
  }
  // phi^2 = I + eta (x) xi, applied to the output slot.
  FrameTensor phi2;
  if (kind == RecurrenceKind::sgpr) {
    phi2 = FrameTensor(n, Valence{1, 1});
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t l = 0; l < n; ++l) {
        Expr acc;
        for (std::size_t p = 0; p < n; ++p) acc += lcs->phi(m, p) * lcs->phi(p, l);
        phi2(m, l) = std::move(acc);
      }
    }
  }
  const FrameTensor& dr = geo.nabla_riemann();
  const FrameTensor& r = geo.curvature().riemann13;
  FrameTensor out(n, Valence{1, 4});
  for (std::size_t f = 0; f < out.size(); ++f) {
    const auto idx = out.unflat(f);
    const std::size_t w = idx[0], x = idx[1], y = idx[2], z = idx[3], l = idx[4];
    Expr lhs;
    if (kind == RecurrenceKind::sgpr) {
      for (std::size_t m = 0; m < n; ++m) {
        if (!dr(w, x, y, z, m).is_zero() && !phi2(m, l).is_zero()) lhs += dr(w, x, y, z, m) * phi2(m, l);
      }
    } else {
      lhs = dr.comps()[f];
    }
    Expr rhs = a(w) * r(x, y, z, l);
    if (x == l) rhs += b(w) * g(y, z);
    out.comps()[f] = lhs - rhs;
  }
  return out;
}

FitResult recurrence_fit(RecurrenceKind kind, const Geometry& geo, Exec exec) {
  if (kind == RecurrenceKind::sgpr) throw PreconditionError("the SGPR relation is not fitted");
  const std::size_t n = geo.dim();
  const FrameTensor& g = geo.g();
  const bool ricci = kind == RecurrenceKind::sgrr;
  const FrameTensor& lhs = ricci ? geo.nabla_ricci() : geo.nabla_riemann();
  const FrameTensor& base = ricci ? geo.curvature().ricci : geo.curvature().riemann13;

  // Each direction is an independent system in (A(E_x), B(E_x)).
  const std::size_t rows = base.size();
  std::vector<LinearSolution> solutions(n);
  for_each_index(n, exec, [&](std::size_t x) {
    ExprMatrix m(rows, 2);
    std::vector<Expr> rhs(rows);
    for (std::size_t f = 0; f < rows; ++f) {
      const auto idx = base.unflat(f);
      m(f, 0) = base.comps()[f];
      if (ricci) {
        m(f, 1) = n_expr(n) * g(idx[0], idx[1]);
      } else if (idx[0] == idx[3]) {
        m(f, 1) = g(idx[1], idx[2]);
      }
      rhs[f] = lhs.comps()[x * rows + f];
    }
    solutions[x] = solve_system(m, rhs);
  });

  FitResult result;
  std::vector<Expr> a(n), b(n);
  for (std::size_t x = 0; x < n; ++x) {
    const LinearSolution& s = solutions[x];
    if (!s.values) {
      result.inconsistent = base.unflat(*s.inconsistent_row);
      result.inconsistent.insert(result.inconsistent.begin(), x);
      return result;
    }
    a[x] = (*s.values)[0];
    b[x] = (*s.values)[1];
  }
  RecurrenceForms forms = make_forms(geo, std::move(a), std::move(b));
  const FrameTensor residual = recurrence_residual(kind, geo, forms);
  if (const auto bad = residual.first_nonzero()) {
    result.inconsistent = residual.unflat(*bad);
    return result;
  }
  result.forms = std::move(forms);
  return result;
}

SgrPredictions sgr_predictions(const Geometry& geo, const LcsStructure& lcs, const RecurrenceForms& forms) {
  const std::size_t n = geo.dim();
  const std::size_t x = lcs.xi_index;
  SgrPredictions out;
  out.r = geo.curvature().scalar;
  out.r_nonzero_constant = !out.r.is_zero() && geo.is_constant(out.r);
  const Expr& a_xi = forms.a(x);
  if (!a_xi.is_zero()) {
    Expr eta_rho1;
    for (std::size_t l = 0; l < n; ++l) eta_rho1 += forms.rho1[l] * lcs.eta(l);
    const Expr nn = n_expr(n);
    out.r_pred = (Expr(2) * (nn - Expr(1)) * lcs.alpha2_minus_rho() * eta_rho1 - (nn * nn + Expr(2)) * forms.b(x)) /
                 a_xi;
  }
  if (!out.r.is_zero()) {
    const Expr c = n_expr(n * n) / out.r;
    FrameTensor opp(n, Valence{0, 1});
    for (std::size_t i = 0; i < n; ++i) opp(i) = forms.a(i) + c * forms.b(i);
    out.opposition = std::move(opp);
  }
  return out;
}

FrameTensor sgpr4_residual(const Geometry& geo, const LcsStructure& lcs, int beta_sign) {
  const std::size_t n = geo.dim();
  const std::size_t x = lcs.xi_index;
  const FrameTensor& dr = geo.nabla_riemann();
  const FrameTensor& g = geo.g();
  const FrameTensor& eta = lcs.eta;
  const Expr beta = beta_sign < 0 ? -lcs.beta : lcs.beta;
  const Expr c = Expr(2) * lcs.alpha * lcs.rho - beta;
  FrameTensor out(n, Valence{0, 3});
  for (std::size_t w = 0; w < n; ++w) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Expr lhs;
        for (std::size_t l = 0; l < n; ++l) {
          if (!dr(w, x, y, z, l).is_zero() && !eta(l).is_zero()) lhs += dr(w, x, y, z, l) * eta(l);
        }
        out(w, y, z) = lhs + c * (g(y, z) + eta(y) * eta(z)) * eta(w);
      }
    }
  }
  return out;
}

Sgpr4Result sgpr4_identity_check(const Geometry& geo, const LcsStructure& lcs) {
  Sgpr4Result out;
  out.check = make_check("sgpr.identity",
                         "g((nabla_W R)(xi,Y)Z, xi) = -(2 alpha rho - beta){g(Y,Z) + eta(Y)eta(Z)} eta(W)",
                         sgpr4_residual(geo, lcs, 1));
  if (!out.check.residual.is_zero()) {
    FrameTensor flipped = sgpr4_residual(geo, lcs, -1);
    if (flipped.is_zero()) {
      out.sign_flipped = true;
      out.check.note = "fails with beta from d(rho) = beta eta; holds with beta replaced by -beta";
    }
  }
  return out;
}

LambdaValues soliton_lambda(const Expr& alpha, const Expr& p, std::size_t n) {
  if (n < 2) throw PreconditionError("soliton lambda needs n >= 2");
  const long nn = static_cast<long>(n);
  const Expr half_p = p * Expr(mpq_class(1, 2));
  return LambdaValues{half_p + Expr(mpq_class(nn + 1, nn)) * alpha, half_p + Expr(mpq_class(nn - 1, nn)) * alpha};
}

Expr soliton_k(const SolitonParams& params, const Expr& alpha, std::size_t n) {
  const long nn = static_cast<long>(n);
  return params.lambda - (params.p * Expr(mpq_class(1, 2)) + Expr(mpq_class(1, nn))) - alpha;
}

FrameTensor soliton_residual(const Geometry& geo, const std::vector<Expr>& v, const SolitonParams& params) {
  const std::size_t n = geo.dim();
  if (v.size() != n) throw PreconditionError("soliton field needs " + std::to_string(n) + " frame components");
  const long nn = static_cast<long>(n);
  const FrameTensor lie = lie_derivative_metric(geo.frame(), geo.metric(), geo.brackets(), v);
  const Expr c = Expr(2) * params.lambda - (params.p + Expr(mpq_class(2, nn)));
  FrameTensor out(n, Valence{0, 2});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = lie(i, j) + Expr(2) * geo.curvature().ricci(i, j) - c * geo.g()(i, j);
    }
  }
  return out;
}

FrameTensor eta_einstein_residual(const Geometry& geo, const LcsStructure& lcs, const SolitonParams& params) {
  const std::size_t n = geo.dim();
  const Expr k = soliton_k(params, lcs.alpha, n);
  FrameTensor out(n, Valence{0, 2});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = geo.curvature().ricci(i, j) - k * geo.g()(i, j) + lcs.alpha * lcs.eta(i) * lcs.eta(j);
    }
  }
  return out;
}

DerivedConditions derived_condition_residuals(const Geometry& geo, const LcsStructure& lcs, Exec exec) {
  const std::size_t n = geo.dim();
  const std::size_t xi = lcs.xi_index;
  const FrameTensor& eta = lcs.eta;
  const FrameTensor& r13 = geo.curvature().riemann13;
  const FrameTensor& s = geo.curvature().ricci;

  DerivedConditions dc;
  dc.m_projective = m_projective(geo.curvature(), geo.metric(), exec);
  dc.concircular = concircular(geo.curvature(), geo.metric(), exec);
  const FrameTensor& mp = dc.m_projective;
  const FrameTensor& cc = dc.concircular;

  // eta of the output slot: eta_m(a,b,c) = eta(M(E_a,E_b)E_c), eta_r(x,m) = eta(R(xi,E_x)E_m).
  FrameTensor eta_m(n, Valence{0, 3});
  for (std::size_t f = 0; f < eta_m.size(); ++f) {
    const auto idx = eta_m.unflat(f);
    Expr acc;
    for (std::size_t l = 0; l < n; ++l) acc += mp(idx[0], idx[1], idx[2], l) * eta(l);
    eta_m.comps()[f] = std::move(acc);
  }
  FrameTensor eta_r(n, Valence{0, 2});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t m = 0; m < n; ++m) {
      Expr acc;
      for (std::size_t l = 0; l < n; ++l) acc += r13(xi, x, m, l) * eta(l);
      eta_r(x, m) = std::move(acc);
    }
  }

  dc.rxm = FrameTensor(n, Valence{0, 4});
  for_each_index(dc.rxm.size(), exec, [&](std::size_t f) {
    const auto idx = dc.rxm.unflat(f);
    const std::size_t x = idx[0], u = idx[1], v = idx[2], w = idx[3];
    Expr acc;
    for (std::size_t m = 0; m < n; ++m) {
      if (!mp(u, v, w, m).is_zero() && !eta_r(x, m).is_zero()) acc += mp(u, v, w, m) * eta_r(x, m);
      if (!r13(xi, x, u, m).is_zero()) acc -= r13(xi, x, u, m) * eta_m(m, v, w);
      if (!r13(xi, x, v, m).is_zero()) acc -= r13(xi, x, v, m) * eta_m(u, m, w);
      if (!r13(xi, x, w, m).is_zero()) acc -= r13(xi, x, w, m) * eta_m(u, v, m);
    }
    dc.rxm.comps()[f] = std::move(acc);
  });

  dc.cxs = FrameTensor(n, Valence{0, 3});
  for_each_index(dc.cxs.size(), exec, [&](std::size_t f) {
    const auto idx = dc.cxs.unflat(f);
    const std::size_t x = idx[0], y = idx[1], z = idx[2];
    Expr acc;
    for (std::size_t m = 0; m < n; ++m) {
      if (!cc(xi, x, y, m).is_zero()) acc += cc(xi, x, y, m) * s(m, z);
      if (!cc(xi, x, z, m).is_zero()) acc += cc(xi, x, z, m) * s(y, m);
    }
    dc.cxs.comps()[f] = std::move(acc);
  });

  dc.eta_m_xi = FrameTensor(n, Valence{0, 2});
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) dc.eta_m_xi(x, y) = eta_m(x, y, xi);
  }
  return dc;
}

FrameTensor einstein_lcs_residual(const Geometry& geo, const LcsStructure& lcs) {
  const std::size_t n = geo.dim();
  const Expr c = (n_expr(n) - Expr(1)) * lcs.alpha2_minus_rho();
  FrameTensor out(n, Valence{0, 2});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = geo.curvature().ricci(i, j) - c * geo.g()(i, j);
  }
  return out;
}

std::vector<GatedCheck> sgr_theorem_checks(const Geometry& geo, const LcsStructure& lcs,
                                           const RecurrenceForms& forms) {
  const bool sgr = recurrence_residual(RecurrenceKind::sgr, geo, forms).is_zero();
  const SgrPredictions pred = sgr_predictions(geo, lcs, forms);
  std::vector<GatedCheck> out;

  const std::string stmt3 = "r = (1/A(xi)){2(n-1)(alpha^2 - rho) eta(rho1) - (n^2+2) B(xi)}";
  if (pred.r_pred) {
    std::string gate = sgr ? "SGR relation holds, A(xi) != 0" : "SGR relation does not hold";
    out.push_back(gated(make_check("sgr.scalar", stmt3, scalar_residual(*pred.r_pred - pred.r)), sgr, std::move(gate)));
  } else {
    Check c = make_check("sgr.scalar", stmt3, scalar_residual(Expr()));
    c.note = "A(xi) = 0: formula undefined";
    out.push_back(gated(std::move(c), false, "A(xi) = 0"));
  }

  const std::string stmt8 = "A(X) = -(n^2/r) B(X)";
  if (pred.opposition) {
    const bool holds = sgr && pred.r_nonzero_constant;
    std::string gate = !sgr ? "SGR relation does not hold"
                            : (pred.r_nonzero_constant ? "SGR relation holds, r nonzero constant"
                                                       : "scalar curvature is not constant");
    Check c = make_check("sgr.opposition", stmt8, *pred.opposition);
    if (pred.r_nonzero_constant) c.note = pred.r.constant_value() > 0 ? "r > 0" : "r < 0";
    out.push_back(gated(std::move(c), holds, std::move(gate)));
  } else {
    Check c = make_check("sgr.opposition", stmt8, scalar_residual(Expr()));
    c.note = "r = 0: formula undefined";
    out.push_back(gated(std::move(c), false, "scalar curvature vanishes"));
  }
  return out;
}

GatedCheck sgpr_theorem_check(const Geometry& geo, const LcsStructure& lcs, const RecurrenceForms& forms) {
  const bool holds = recurrence_residual(RecurrenceKind::sgpr, geo, forms, &lcs).is_zero();
  return gated(make_check("sgpr.einstein", "S(Y,W) = (n-1)(alpha^2 - rho) g(Y,W)", einstein_lcs_residual(geo, lcs)), holds,
               holds ? "SGPR relation holds" : "SGPR relation does not hold");
}

GatedCheck sgrr_theorem_check(const Geometry& geo, const LcsStructure& lcs, const RecurrenceForms& forms) {
  const bool holds = recurrence_residual(RecurrenceKind::sgrr, geo, forms).is_zero();
  return gated(make_check("sgrr.einstein", "S(X,Y) = (n-1)(alpha^2 - rho) g(X,Y)", einstein_lcs_residual(geo, lcs)), holds,
               holds ? "SGRR relation holds" : "SGRR relation does not hold");
}

std::vector<GatedCheck> derived_theorem_checks(const Geometry& geo, const LcsStructure& lcs,
                                               const DerivedConditions& dc) {
  const std::size_t n = geo.dim();
  const Expr k = lcs.alpha2_minus_rho();
  std::vector<GatedCheck> out;
  {
    const bool hyp = dc.rxm.is_zero();
    const bool guard = !k.is_zero();
    std::string gate = !hyp ? "R(xi,X).M does not vanish" : (guard ? "R(xi,X).M = 0, alpha^2 - rho != 0"
                                                                   : "alpha^2 - rho = 0");
    out.push_back(gated(make_check("rxm.einstein", "R(xi,X).M = 0 implies S = (r/n) g", trace_free_ricci(geo)),
                        hyp && guard, std::move(gate)));
  }
  {
    const long nn = static_cast<long>(n);
    const Expr guard_value = Expr(nn * (nn - 1)) * k + Expr(1);
    const bool hyp = dc.cxs.is_zero();
    const bool guard = !guard_value.is_zero();
    std::string gate = !hyp ? "C(xi,X).S does not vanish"
                            : (guard ? "C(xi,X).S = 0, n(n-1)(alpha^2 - rho) + 1 != 0"
                                     : "n(n-1)(alpha^2 - rho) + 1 = 0");
    out.push_back(gated(make_check("cxs.einstein", "C(xi,X).S = 0 implies S = (r/n) g", trace_free_ricci(geo)),
                        hyp && guard, std::move(gate)));
  }
  return out;
}

}  // namespace lcs
