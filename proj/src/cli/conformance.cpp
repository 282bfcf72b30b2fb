#include <algorithm>
#include <array>
#include <utility>

#include "lcslab/cli/commands.hpp"
#include "lcslab/conditions.hpp"
#include "lcslab/error.hpp"
#include "lcslab/geometry/curvature.hpp"
#include "lcslab/symexpr/parser.hpp"

namespace lcs::cli {

namespace {

// Printed values of the three-dimensional example with frame
// E1 = z(x d/dx + y d/dy), E2 = z d/dy, E3 = d/dz and g = diag(1, 1, -1).

struct PrintedVector {
  std::size_t i, j, k;  // 1-based; k unused for brackets and connection
  std::array<const char*, 3> comps;
};

constexpr PrintedVector kBrackets[] = {
    {1, 2, 0, {"0", "-z", "0"}},
    {1, 3, 0, {"-1/z", "0", "0"}},
    {2, 3, 0, {"0", "-1/z", "0"}},
};

// nabla_{E_i} E_j
constexpr PrintedVector kConnection[] = {
    {1, 1, 0, {"0", "0", "-1/z"}}, {2, 1, 0, {"0", "z", "0"}},       {3, 1, 0, {"0", "0", "0"}},
    {1, 2, 0, {"0", "0", "0"}},    {2, 2, 0, {"-z", "0", "-1/z"}},   {3, 2, 0, {"0", "0", "0"}},
    {1, 3, 0, {"-1/z", "0", "0"}}, {2, 3, 0, {"0", "-1/z", "0"}},    {3, 3, 0, {"0", "0", "0"}},
};

// R(E_i, E_j) E_k
constexpr PrintedVector kCurvature[] = {
    {2, 3, 3, {"0", "-2/z^2", "0"}},       {1, 3, 3, {"-2/z^2", "0", "0"}},
    {1, 2, 2, {"1/z^2 - z^2", "0", "0"}},  {2, 3, 2, {"0", "0", "-2/z^2"}},
    {1, 2, 1, {"0", "z^2 - 1/z^2", "0"}},  {1, 3, 1, {"0", "0", "-2/z^2"}},
};

struct PrintedScalar {
  std::size_t i, j;
  const char* value;
};

constexpr PrintedScalar kRicci[] = {
    {1, 1, "-(z^2 + 1/z^2)"}, {2, 2, "-(z^2 + 1/z^2)"}, {3, 3, "-4/z^2"},
    {1, 2, "0"},              {1, 3, "0"},              {2, 3, "0"},
};

// Nonzero (nabla_{E_d} S)(E_i, E_j); every other component is printed as 0.
struct PrintedNablaS {
  std::size_t d, i, j;
  const char* value;
};

constexpr PrintedNablaS kNablaS[] = {
    {1, 1, 3, "-(z + 5/z^3)"},
    {1, 3, 1, "-(z + 5/z^3)"},
    {2, 2, 3, "-(z + 5/z^3)"},
    {2, 3, 2, "-(z + 5/z^3)"},
};

// Arguments X = a1 E1 + b1 E2 + c1 E3 and Y = a2 E1 + b2 E2 + c2 E3.
constexpr const char* kArgVars[] = {"a1", "b1", "c1", "a2", "b2", "c2"};
constexpr const char* kPrintedS = "-(a1*a2 + b1*b2)*(z^2 + 1/z^2) - 4*c1*c2/z^2";
constexpr const char* kPrintedNablaSArgs[] = {
    "-(a1*c2 + c1*a2)*(z + 5/z^3)",
    "-(b1*c2 + c1*b2)*(z + 5/z^3)",
    "0",
};
constexpr const char* kPrintedA[] = {
    "(a1*c2 + c1*a2)/(z*(a1*a2 + b1*b2))",
    "(b1*c2 + c1*b2)/(z*(a1*a2 + b1*b2))",
    "0",
};
constexpr const char* kPrintedB[] = {
    "-4*(a1*c2 + c1*a2)/(3*z^3*(a1*a2 + b1*b2))",
    "-4*(b1*c2 + c1*b2)/(3*z^3*(a1*a2 + b1*b2))",
    "0",
};

constexpr const char* kAlpha = "-1/z";
constexpr const char* kRho = "-1/z^2";

std::string frame_label(std::size_t i) { return "E" + std::to_string(i + 1); }

class Conformance {
 public:
  explicit Conformance(const Session& s) : s_(s), g_(s.geo) {
    if (g_.dim() != 3) throw UsageError("conformance compares a three-dimensional frame");
    const auto& c = g_.chart().coords();
    if (std::find(c.begin(), c.end(), "z") == c.end()) {
      throw UsageError("conformance needs a chart with coordinate z");
    }
    vars_ = c;
    for (const char* v : kArgVars) {
      if (std::find(c.begin(), c.end(), v) != c.end()) throw UsageError(std::string("coordinate name clashes with ") + v);
      vars_.emplace_back(v);
    }
  }

  Report run() {
    Report r;
    r.command = "conformance";
    r.manifold = s_.def.name;
    r.header = convention_header();
    r.header.push_back("engine values are authoritative; 'printed' lists the published value");
    r.header.push_back("mismatch: the printed value differs from the engine value");
    brackets(r.add_section("brackets"));
    connection(r.add_section("connection"));
    curvature(r.add_section("curvature"));
    ricci(r.add_section("ricci"));
    structure(r.add_section("structure"));
    nabla_ricci(r.add_section("nabla ricci"));
    recurrence(r.add_section("ricci recurrence"));
    identities(r.add_section("identities"));
    soliton(r.add_section("soliton"));
    return r;
  }

 private:
  Expr ex(const char* text) const { return parse(text, vars_); }

  std::vector<Expr> vec(const std::array<const char*, 3>& comps) const {
    return {ex(comps[0]), ex(comps[1]), ex(comps[2])};
  }

  Entry compare(std::string id, std::string statement, const std::string& engine, const std::string& printed,
                bool equal) const {
    Entry e;
    e.id = std::move(id);
    e.statement = std::move(statement);
    e.engine = engine;
    e.paper = printed;
    e.status = equal ? Status::pass : Status::mismatch;
    return e;
  }

  Entry compare_vector(std::string id, const std::vector<Expr>& engine, const std::vector<Expr>& printed) const {
    return compare(std::move(id), {}, s_.print.vector(engine), s_.print.vector(printed), engine == printed);
  }

  Entry compare_scalar(std::string id, std::string statement, const Expr& engine, const Expr& printed) const {
    return compare(std::move(id), std::move(statement), s_.print(engine), s_.print(printed), engine == printed);
  }

  static Entry passfail(std::string id, std::string statement, bool ok, std::string engine = {}) {
    Entry e;
    e.id = std::move(id);
    e.statement = std::move(statement);
    e.status = ok ? Status::pass : Status::fail;
    e.engine = std::move(engine);
    return e;
  }

  void brackets(Section& sec) const {
    for (const auto& b : kBrackets) {
      std::vector<Expr> v(3);
      for (std::size_t k = 0; k < 3; ++k) v[k] = g_.brackets()(b.i - 1, b.j - 1, k);
      sec.entries.push_back(
          compare_vector("[" + frame_label(b.i - 1) + "," + frame_label(b.j - 1) + "]", v, vec(b.comps)));
    }
  }

  void connection(Section& sec) const {
    for (const auto& c : kConnection) {
      std::vector<Expr> v(3);
      for (std::size_t k = 0; k < 3; ++k) v[k] = g_.connection()(c.i - 1, c.j - 1, k);
      sec.entries.push_back(
          compare_vector("nabla_" + frame_label(c.i - 1) + " " + frame_label(c.j - 1), v, vec(c.comps)));
    }
  }

  void curvature(Section& sec) const {
    const FrameTensor& r = g_.curvature().riemann13;
    auto listed = [](std::size_t i, std::size_t j, std::size_t k) {
      return std::any_of(std::begin(kCurvature), std::end(kCurvature), [&](const PrintedVector& p) {
        return p.k == k + 1 && ((p.i == i + 1 && p.j == j + 1) || (p.i == j + 1 && p.j == i + 1));
      });
    };
    for (const auto& c : kCurvature) {
      std::vector<Expr> v(3);
      for (std::size_t l = 0; l < 3; ++l) v[l] = r(c.i - 1, c.j - 1, c.k - 1, l);
      sec.entries.push_back(compare_vector(
          "R(" + frame_label(c.i - 1) + "," + frame_label(c.j - 1) + ")" + frame_label(c.k - 1), v, vec(c.comps)));
    }
    std::string extra;
    for (std::size_t f = 0; f < r.size(); ++f) {
      const auto idx = r.unflat(f);
      if (r.comps()[f].is_zero() || listed(idx[0], idx[1], idx[2])) continue;
      if (!extra.empty()) extra += "; ";
      extra += index_label(idx) + " = " + s_.print(r.comps()[f]);
    }
    Entry e = compare("R.unlisted", "every other component is zero or the antisymmetric partner of a listed one",
                      extra.empty() ? "none" : extra, "none", extra.empty());
    sec.entries.push_back(std::move(e));
  }

  void ricci(Section& sec) const {
    const FrameTensor& s = g_.curvature().ricci;
    for (const auto& p : kRicci) {
      Entry e = compare_scalar("S(" + frame_label(p.i - 1) + "," + frame_label(p.j - 1) + ")", {},
                               s(p.i - 1, p.j - 1), ex(p.value));
      if (e.status == Status::mismatch) {
        e.note = "engine value equals the trace of the printed curvature components (see ricci.printed_trace)";
      }
      sec.entries.push_back(std::move(e));
    }
    // Contract the printed curvature list (with antisymmetric partners) directly.
    FrameTensor printed(3, Valence{1, 3});
    for (const auto& c : kCurvature) {
      const auto v = vec(c.comps);
      for (std::size_t l = 0; l < 3; ++l) {
        printed(c.i - 1, c.j - 1, c.k - 1, l) = v[l];
        printed(c.j - 1, c.i - 1, c.k - 1, l) = -v[l];
      }
    }
    const FrameTensor trace = lcs::ricci(printed, g_.metric());
    sec.entries.push_back(passfail("ricci.printed_trace", "the trace of the printed curvature list equals engine S",
                                   trace == s, s_.print.components(trace, 9)));
    const Expr n1k = Expr(2) * (ex(kAlpha) * ex(kAlpha) - ex(kRho));
    Entry e14 = compare_scalar("S(E3,E3) anchor", "S(xi,xi) = -(n-1)(alpha^2 - rho)", s(2, 2), -n1k);
    sec.entries.push_back(std::move(e14));
    sec.entries.push_back(compare_scalar("r", "scalar curvature (no printed value; derived from printed S)",
                                         g_.curvature().scalar,
                                         ex(kRicci[0].value) + ex(kRicci[1].value) - ex(kRicci[2].value)));
  }

  void structure(Section& sec) const {
    if (!s_.lcs) {
      sec.entries.push_back(passfail("lcs", "definition designates xi", false));
      return;
    }
    const LcsCandidate& c = *s_.lcs;
    const LcsStructure& l = c.structure;
    sec.entries.push_back(passfail("lcs.extract", "xi carries an (LCS)_n structure", c.valid(),
                                   c.valid() ? "valid" : c.problems.front()));
    sec.entries.push_back(compare_scalar("eta(E3)", {}, l.eta(2), Expr(-1)));
    sec.entries.push_back(compare_scalar("alpha", {}, l.alpha, ex(kAlpha)));
    sec.entries.push_back(compare_scalar("rho", {}, l.rho, ex(kRho)));
    Entry beta;
    beta.id = "beta";
    beta.statement = "d(rho)(X) = beta eta(X)";
    beta.status = Status::info;
    beta.engine = s_.print(l.beta);
    beta.note = "no printed value; the symbol is used without a definition";
    sec.entries.push_back(std::move(beta));
    const FrameTensor& phi = l.phi;
    bool phi_ok = true;
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) phi_ok = phi_ok && phi(a, b) == ((a == b && a < 2) ? Expr(1) : Expr());
    }
    sec.entries.push_back(compare("phi", "phi E1 = E1, phi E2 = E2, phi E3 = 0", phi_ok ? "as printed" : "differs",
                                  "phi E1 = E1, phi E2 = E2, phi E3 = 0", phi_ok));
    std::size_t failed = 0;
    for (const auto& ch : verify_axioms(g_, l)) failed += ch.passed() ? 0 : 1;
    sec.entries.push_back(passfail("lcs.axioms", "all (LCS)_n structure relations hold exactly", failed == 0,
                                   failed == 0 ? "all pass" : std::to_string(failed) + " failing"));
  }

  void nabla_ricci(Section& sec) const {
    const FrameTensor& ds = g_.nabla_ricci();
    FrameTensor printed(3, Valence{0, 3});
    for (const auto& p : kNablaS) printed(p.d - 1, p.i - 1, p.j - 1) = ex(p.value);
    for (std::size_t d = 0; d < 3; ++d) {
      FrameTensor eng(3, Valence{0, 2}), pr(3, Valence{0, 2});
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          eng(i, j) = ds(d, i, j);
          pr(i, j) = printed(d, i, j);
        }
      }
      Entry e = compare("nabla_" + frame_label(d) + " S", "(nabla_{E" + std::to_string(d + 1) + "} S)(E_i,E_j) as [i,j]",
                        s_.print.components(eng, 9), s_.print.components(pr, 9), eng == pr);
      if (e.status == Status::mismatch) e.note = "engine value is the covariant derivative of engine S";
      sec.entries.push_back(std::move(e));
    }
    sec.entries.push_back(passfail("not Ricci symmetric", "nabla S != 0", !ds.is_zero()));
  }

  /// (nabla_{E_i} S)(X,Y) - A(E_i) S(X,Y) - 3 B(E_i) g(X,Y) for the printed forms.
  bool printed_forms_hold(bool engine_data) const {
    const std::size_t base = g_.dim();
    std::array<Expr, 3> x, y;
    for (std::size_t a = 0; a < 3; ++a) {
      x[a] = Expr::variable(base + a);
      y[a] = Expr::variable(base + 3 + a);
    }
    Expr gxy, sxy;
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        gxy += x[a] * y[b] * g_.g()(a, b);
        if (engine_data) sxy += x[a] * y[b] * g_.curvature().ricci(a, b);
      }
    }
    if (!engine_data) sxy = ex(kPrintedS);
    for (std::size_t i = 0; i < 3; ++i) {
      Expr lhs;
      if (engine_data) {
        for (std::size_t a = 0; a < 3; ++a) {
          for (std::size_t b = 0; b < 3; ++b) lhs += x[a] * y[b] * g_.nabla_ricci()(i, a, b);
        }
      } else {
        lhs = ex(kPrintedNablaSArgs[i]);
      }
      if (!(lhs - ex(kPrintedA[i]) * sxy - Expr(3) * ex(kPrintedB[i]) * gxy).is_zero()) return false;
    }
    return true;
  }

  void recurrence(Section& sec) const {
    Entry args;
    args.id = "printed forms";
    args.statement = "A(E_i), B(E_i) as printed";
    args.status = Status::mismatch;
    args.engine = "not 1-forms";
    args.paper = "A(E1) = " + std::string(kPrintedA[0]) + ", B(E1) = " + kPrintedB[0];
    args.note = "the printed A(E_i), B(E_i) depend on the arguments X = a1 E1 + b1 E2 + c1 E3, "
                "Y = a2 E1 + b2 E2 + c2 E3";
    sec.entries.push_back(std::move(args));

    sec.entries.push_back(passfail("printed forms, printed S",
                                   "printed nabla S = A S + 3 B g with printed S, nabla S (X, Y symbolic)",
                                   printed_forms_hold(false)));
    Entry eng = compare("printed forms, engine S", "engine nabla S = A S + 3 B g with the printed A, B",
                        printed_forms_hold(true) ? "holds" : "does not hold", "holds", printed_forms_hold(true));
    sec.entries.push_back(std::move(eng));

    const FitResult fit = recurrence_fit(RecurrenceKind::sgrr, g_);
    Entry f;
    f.id = "fit.SGRR";
    f.statement = "1-forms A, B with (nabla_X S)(Y,Z) = A(X) S(Y,Z) + 3 B(X) g(Y,Z)";
    f.paper = "semi-generalized Ricci recurrent";
    if (fit.solved()) {
      f.status = Status::pass;
      f.engine = "A = " + s_.print.vector(fit.forms->a.comps()) + ", B = " + s_.print.vector(fit.forms->b.comps());
    } else {
      f.status = Status::mismatch;
      f.engine = "no solution";
      const auto& w = fit.inconsistent;
      f.note = "inconsistent at (nabla_" + frame_label(w[0]) + " S)(" + frame_label(w[1]) + "," + frame_label(w[2]) +
               ")";
      if (g_.curvature().ricci(w[1], w[2]).is_zero() && g_.g()(w[1], w[2]).is_zero()) {
        f.note += ": S and g vanish there but nabla S does not";
      }
    }
    sec.entries.push_back(std::move(f));
  }

  void identities(Section& sec) const {
    if (s_.structure() == nullptr) return;
    const LcsStructure& l = *s_.structure();
    const Sgpr4Result id = sgpr4_identity_check(g_, l);
    Entry e = check_entry(id.check, s_.print);
    e.engine = "2 alpha rho - beta = " + s_.print(Expr(2) * l.alpha * l.rho - l.beta);
    if (id.sign_flipped) {
      e.status = Status::pass;
      e.note = "holds only with beta replaced by -beta";
    }
    sec.entries.push_back(std::move(e));

    const std::size_t n = g_.dim();
    FrameTensor lie = lie_derivative_metric(g_.frame(), g_.metric(), g_.brackets(), l.xi);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) lie(i, j) -= Expr(2) * l.alpha * (g_.g()(i, j) + l.eta(i) * l.eta(j));
    }
    sec.entries.push_back(check_entry(make_check("lie.xi", "L_xi g = 2 alpha (g + eta (x) eta)", lie), s_.print));

    const DerivedConditions dc = derived_condition_residuals(g_, l);
    sec.entries.push_back(check_entry(make_check("eta_m_xi", "eta(M(X,Y)xi) = 0", dc.eta_m_xi), s_.print));

    const ClassifierVerdict v = classify(g_.curvature().ricci, g_.g(), l.eta);
    Entry c;
    c.id = "classification";
    c.statement = "S = a g + b eta (x) eta";
    c.status = Status::info;
    c.engine = to_string(v.kind);
    if (v.witness) c.note = "ruled out by component " + index_label(*v.witness);
    sec.entries.push_back(std::move(c));
  }

  void soliton(Section& sec) const {
    if (s_.structure() == nullptr) return;
    const LcsStructure& l = *s_.structure();
    const LambdaValues lv = soliton_lambda(l.alpha, Expr(), g_.dim());
    sec.entries.push_back(compare_scalar("lambda.stated", "lambda = p/2 + ((n+1)/n) alpha at p = 0", lv.stated,
                                         ex("-4/(3*z)")));
    Entry alt = compare_scalar("lambda.traced", "lambda = p/2 + ((n-1)/n) alpha at p = 0", lv.traced, lv.stated);
    alt.note = "contracting S = k g - alpha eta (x) eta uses trace(eta (x) eta) = g(xi,xi) = -1; "
               "the printed value corresponds to +1";
    sec.entries.push_back(std::move(alt));

    const SolitonParams params{lv.stated, Expr()};
    Entry res = check_entry(make_check("soliton", "L_xi g + 2S = [2 lambda - (p + 2/n)] g, lambda stated, p = 0",
                                       soliton_residual(g_, l.xi, params)),
                            s_.print);
    res.status = Status::info;
    res.note = "no soliton is claimed for this example";
    sec.entries.push_back(std::move(res));
  }

  const Session& s_;
  const Geometry& g_;
  std::vector<std::string> vars_;
};

}  // namespace

Report conformance_report(const Session& s) { return Conformance(s).run(); }

}  // namespace lcs::cli
