#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lcslab/check.hpp"
#include "lcslab/geometry/manifold.hpp"

namespace lcs {

/// (xi, eta, phi, alpha, rho, beta) of a Lorentzian concircular structure,
/// all in frame components.
///
/// beta is not defined by the (LCS)_n axioms themselves. It is taken as the
/// scalar with d(rho)(X) = beta eta(X), mirroring d(alpha) = rho eta.
struct LcsStructure {
  std::size_t xi_index = 0;
  std::vector<Expr> xi;  ///< unit vector e_{xi_index}
  FrameTensor eta;       ///< (0,1): eta(E_a) = g(E_a, xi)
  FrameTensor phi;       ///< (1,1): phi E_a = sum_l phi(a,l) E_l
  Expr alpha;
  Expr rho;
  Expr beta;

  Expr alpha2_minus_rho() const { return alpha * alpha - rho; }
};

/// Best-effort extraction that never throws on geometric grounds. `problems`
/// lists every reason the candidate is not an (LCS)_n structure.
struct LcsCandidate {
  LcsStructure structure;
  std::vector<std::string> problems;

  bool valid() const noexcept { return problems.empty(); }
};

LcsCandidate extract_candidate(const Geometry& geo, std::size_t xi_index);

/// Extracts the structure and enforces every extraction condition: xi unit
/// timelike (PreconditionError), a single alpha with nabla_X xi =
/// alpha (X + eta(X) xi) in all directions, alpha != 0, d(alpha) and d(rho)
/// proportional to eta (NotLcsError).
LcsStructure derive_structure(const Geometry& geo, std::size_t xi_index);

/// Every structure identity and curvature relation of an (LCS)_n manifold,
/// checked exactly and componentwise. Failures are entries, not errors.
std::vector<Check> verify_axioms(const Geometry& geo, const LcsStructure& lcs);

enum class ClassKind { einstein, eta_einstein, neither };

std::string to_string(ClassKind kind);

/// S = a g + b eta (x) eta when kind != neither (b = 0 for Einstein).
struct ClassifierVerdict {
  ClassKind kind = ClassKind::neither;
  Expr a;
  Expr b;
  /// For `neither`: the first (i,j) component that rules out the form.
  std::optional<std::vector<std::size_t>> witness;
};

ClassifierVerdict classify(const FrameTensor& ricci, const FrameTensor& g, const FrameTensor& eta);

}  // namespace lcs
