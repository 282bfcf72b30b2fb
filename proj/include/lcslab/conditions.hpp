#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcslab/check.hpp"
#include "lcslab/geometry/manifold.hpp"
#include "lcslab/lcs_structure.hpp"

namespace lcs {

/// SGR:  (nabla_X R)(Y,Z)W = A(X) R(Y,Z)W + B(X) g(Z,W) Y
/// SGRR: (nabla_X S)(Y,Z)  = A(X) S(Y,Z) + n B(X) g(Y,Z)
/// SGPR: phi^2((nabla_W R)(X,Y)Z) = A(W) R(X,Y)Z + B(W) g(Y,Z) X
enum class RecurrenceKind { sgr, sgrr, sgpr };

std::string to_string(RecurrenceKind kind);
/// Case-insensitive "SGR", "SGRR", "SGPR".
std::optional<RecurrenceKind> parse_recurrence_kind(std::string_view text);

/// The 1-forms A, B and their metric duals: g(X, rho1) = A(X), g(X, rho2) = B(X).
struct RecurrenceForms {
  FrameTensor a;  ///< (0,1)
  FrameTensor b;  ///< (0,1)
  std::vector<Expr> rho1;
  std::vector<Expr> rho2;
};

RecurrenceForms make_forms(const Geometry& geo, std::vector<Expr> a, std::vector<Expr> b);

/// Left minus right side of the defining relation. Index layout matches the
/// left side: SGR/SGPR (w,x,y,z,l), SGRR (x,y,z). SGPR needs the structure.
FrameTensor recurrence_residual(RecurrenceKind kind, const Geometry& geo, const RecurrenceForms& forms,
                                const LcsStructure* lcs = nullptr);

struct FitResult {
  std::optional<RecurrenceForms> forms;
  /// When there is no solution: the first component (direction first) whose
  /// equation is inconsistent with the earlier ones.
  std::vector<std::size_t> inconsistent;
  bool solved() const noexcept { return forms.has_value(); }
};

/// Solves for A(E_i), B(E_i) direction by direction over all component
/// equations. Underdetermined unknowns are set to 0. Forms are returned only
/// if the full residual then vanishes. SGPR is not fitted.
FitResult recurrence_fit(RecurrenceKind kind, const Geometry& geo, Exec exec = kDefaultExec);

/// Consequences of the SGR relation: the scalar curvature formula and the
/// opposition A = -(n^2/r) B under nonzero constant r.
struct SgrPredictions {
  std::optional<Expr> r_pred;  ///< absent when A(xi) = 0
  Expr r;
  bool r_nonzero_constant = false;
  std::optional<FrameTensor> opposition;  ///< A + (n^2/r) B, absent when r = 0
};

SgrPredictions sgr_predictions(const Geometry& geo, const LcsStructure& lcs, const RecurrenceForms& forms);

/// g((nabla_W R)(xi,Y)Z, xi) + (2 alpha rho - beta){g(Y,Z) + eta(Y)eta(Z)} eta(W),
/// indexed (w,y,z). `beta_sign` = -1 evaluates the sign-flipped alternative.
FrameTensor sgpr4_residual(const Geometry& geo, const LcsStructure& lcs, int beta_sign = 1);

struct Sgpr4Result {
  Check check;
  /// Set when the identity fails with beta but holds with -beta.
  bool sign_flipped = false;
};

Sgpr4Result sgpr4_identity_check(const Geometry& geo, const LcsStructure& lcs);

/// lambda from the contracted soliton equation: `stated` = p/2 + ((n+1)/n) alpha,
/// `traced` = p/2 + ((n-1)/n) alpha obtained with trace(eta (x) eta) = -1
/// and scalar curvature -1.
struct LambdaValues {
  Expr stated;
  Expr traced;
};

LambdaValues soliton_lambda(const Expr& alpha, const Expr& p, std::size_t n);

struct SolitonParams {
  Expr lambda;
  Expr p;
};

/// k = lambda - (p/2 + 1/n) - alpha.
Expr soliton_k(const SolitonParams& params, const Expr& alpha, std::size_t n);

/// L_V g + 2S - (2 lambda - (p + 2/n)) g, with V in frame components.
FrameTensor soliton_residual(const Geometry& geo, const std::vector<Expr>& v, const SolitonParams& params);

/// S - k g + alpha eta (x) eta.
FrameTensor eta_einstein_residual(const Geometry& geo, const LcsStructure& lcs, const SolitonParams& params);

/// rxm(x,u,v,w) = eta(R(xi,X)M(U,V)W) - eta(M(R(xi,X)U,V)W)
///              - eta(M(U,R(xi,X)V)W) - eta(M(U,V)R(xi,X)W)
/// cxs(x,y,z)   = S(C(xi,X)Y,Z) + S(Y,C(xi,X)Z)
/// eta_m_xi(x,y) = eta(M(X,Y)xi)
struct DerivedConditions {
  FrameTensor m_projective;
  FrameTensor concircular;
  FrameTensor rxm;
  FrameTensor cxs;
  FrameTensor eta_m_xi;
};

DerivedConditions derived_condition_residuals(const Geometry& geo, const LcsStructure& lcs,
                                              Exec exec = kDefaultExec);

/// A theorem consequence: asserted only when its hypothesis holds exactly
/// and its guard is nonzero, otherwise reported for information.
struct GatedCheck {
  Check conclusion;
  bool hypothesis_holds = false;
  std::string gate;  ///< the hypothesis, and why it fails when it does

  bool asserted() const noexcept { return hypothesis_holds; }
};

/// S - (n-1)(alpha^2 - rho) g; the common conclusion of the SGPR and SGRR theorems.
FrameTensor einstein_lcs_residual(const Geometry& geo, const LcsStructure& lcs);

/// Theorem checks for SGR (scalar curvature formula, opposition of forms)
/// given forms that may or may not satisfy the relation.
std::vector<GatedCheck> sgr_theorem_checks(const Geometry& geo, const LcsStructure& lcs,
                                           const RecurrenceForms& forms);
GatedCheck sgpr_theorem_check(const Geometry& geo, const LcsStructure& lcs, const RecurrenceForms& forms);
GatedCheck sgrr_theorem_check(const Geometry& geo, const LcsStructure& lcs, const RecurrenceForms& forms);

/// R(xi,X).M = 0 with alpha^2 - rho != 0, and C(xi,X).S = 0 with
/// n(n-1)(alpha^2 - rho) + 1 != 0, each concluding Einstein.
std::vector<GatedCheck> derived_theorem_checks(const Geometry& geo, const LcsStructure& lcs,
                                               const DerivedConditions& dc);

}  // namespace lcs
