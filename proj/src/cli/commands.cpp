#include "lcslab/cli/commands.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "lcslab/conditions.hpp"
#include "lcslab/error.hpp"
#include "lcslab/geometry/curvature.hpp"
#include "lcslab/symexpr/parser.hpp"

namespace lcs::cli {

namespace {

std::string frame_label(std::size_t i) { return "E" + std::to_string(i + 1); }

Entry info(std::string id, std::string engine, std::string statement = {}) {
  Entry e;
  e.id = std::move(id);
  e.status = Status::info;
  e.engine = std::move(engine);
  e.statement = std::move(statement);
  return e;
}

Report new_report(const Session& s, std::string command) {
  Report r;
  r.command = std::move(command);
  r.manifold = s.def.name;
  r.header = convention_header();
  return r;
}

const LcsStructure& require_lcs(const Session& s) {
  if (!s.lcs) throw UsageError("this command needs the definition to designate xi");
  if (!s.lcs->valid()) throw NotLcsError("not an (LCS)_n manifold: " + s.lcs->problems.front());
  return s.lcs->structure;
}

/// One row per frame index: "phi E1 = E1".
std::string operator_rows(const FrameTensor& t, const Printer& print, const std::string& name) {
  const std::size_t n = t.dim();
  std::string out;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<Expr> row(n);
    for (std::size_t l = 0; l < n; ++l) row[l] = t(a, l);
    if (!out.empty()) out += "; ";
    out += name + " " + frame_label(a) + " = " + print.vector(row);
  }
  return out;
}

std::string one_form_text(const FrameTensor& t, const Printer& print) {
  std::string out = "(";
  for (std::size_t a = 0; a < t.dim(); ++a) {
    if (a > 0) out += ", ";
    out += print(t(a));
  }
  return out + ")";
}

void add_structure_section(Report& r, const Session& s) {
  Section& sec = r.add_section("structure");
  const LcsCandidate& c = *s.lcs;
  const LcsStructure& l = c.structure;
  sec.entries.push_back(info("xi", frame_label(l.xi_index)));
  sec.entries.push_back(info("eta", one_form_text(l.eta, s.print), "eta(E_a) = g(E_a, xi)"));
  sec.entries.push_back(info("alpha", s.print(l.alpha), "nabla_X xi = alpha (X + eta(X) xi)"));
  sec.entries.push_back(info("rho", s.print(l.rho), "rho = -xi(alpha)"));
  Entry beta = info("beta", s.print(l.beta), "d(rho)(X) = beta eta(X)");
  beta.note = "beta is not fixed by the (LCS)_n axioms; defined by d(rho) = beta eta";
  sec.entries.push_back(std::move(beta));
  sec.entries.push_back(info("alpha^2 - rho", s.print(l.alpha2_minus_rho())));
  sec.entries.push_back(info("phi", operator_rows(l.phi, s.print, "phi")));
  for (const auto& p : c.problems) {
    Entry e;
    e.id = "lcs.extract";
    e.status = Status::fail;
    e.statement = "extraction of (xi, eta, phi, alpha, rho, beta)";
    e.note = p;
    sec.entries.push_back(std::move(e));
  }
}

void add_connection_checks(Section& sec, const Session& s) {
  const Geometry& g = s.geo;
  sec.entries.push_back(check_entry(make_check("connection.torsion", "nabla_X Y - nabla_Y X - [X,Y] = 0",
                                               torsion(g.connection(), g.brackets())),
                                    s.print));
  sec.entries.push_back(check_entry(make_check("connection.metric", "X g(Y,Z) = g(nabla_X Y, Z) + g(Y, nabla_X Z)",
                                               metricity_defect(g.frame(), g.metric(), g.connection())),
                                    s.print));
}

void add_identity_section(Report& r, const Session& s) {
  Section& sec = r.add_section("curvature identities");
  for (const auto& c : curvature_identities(s.geo.curvature(), s.geo.nabla_riemann(), s.geo.metric())) {
    sec.entries.push_back(check_entry(c, s.print));
  }
}

Entry classify_entry(const Session& s, const LcsStructure& l) {
  const ClassifierVerdict v = classify(s.geo.curvature().ricci, s.geo.g(), l.eta);
  Entry e = info("classification", to_string(v.kind), "S = a g + b eta (x) eta");
  if (v.kind != ClassKind::neither) {
    e.engine += ": a = " + s.print(v.a) + ", b = " + s.print(v.b);
  } else if (v.witness) {
    e.note = "ruled out by component " + index_label(*v.witness);
  }
  return e;
}

/// Lists T(E_i,E_j)E_k for i < j wherever it is nonzero.
void add_tensor_rows(Section& sec, const FrameTensor& t, const Printer& print, const std::string& name) {
  const std::size_t n = t.dim();
  std::size_t shown = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Expr> v(n);
        bool any = false;
        for (std::size_t l = 0; l < n; ++l) {
          v[l] = t(i, j, k, l);
          any = any || !v[l].is_zero();
        }
        if (!any) continue;
        sec.entries.push_back(
            info(name + "(" + frame_label(i) + "," + frame_label(j) + ")" + frame_label(k), print.vector(v)));
        ++shown;
      }
    }
  }
  if (shown == 0) sec.entries.push_back(info(name, "0", "all components vanish"));
}

std::vector<Expr> parse_list(const std::string& text, const Geometry& geo, const std::string& what) {
  std::vector<Expr> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse(item, geo.chart().coords()));
    } catch (const ParseError& e) {
      throw UsageError(what + ": " + e.what());
    }
  }
  if (out.size() != geo.dim()) {
    throw UsageError(what + " needs " + std::to_string(geo.dim()) + " comma-separated frame components");
  }
  return out;
}

Expr parse_option(const std::optional<std::string>& text, const Geometry& geo, const std::string& what,
                  Expr fallback) {
  if (!text) return fallback;
  try {
    return parse(*text, geo.chart().coords());
  } catch (const ParseError& e) {
    throw UsageError(what + ": " + e.what());
  }
}

RecurrenceKind require_kind(const Options& opt, bool fit) {
  const auto kind = parse_recurrence_kind(opt.kind);
  if (!kind) throw UsageError("expected a relation kind (SGR, SGRR" + std::string(fit ? ")" : " or SGPR)"));
  if (fit && *kind == RecurrenceKind::sgpr) throw UsageError("fit supports SGR and SGRR");
  return *kind;
}

void add_consequences(Report& r, const Session& s, RecurrenceKind kind, const RecurrenceForms& forms) {
  Section& sec = r.add_section("consequences");
  const LcsStructure* l = s.structure();
  if (l == nullptr) {
    sec.entries.push_back(info("consequences", "skipped", "theorem consequences need a verified (LCS)_n structure"));
    return;
  }
  switch (kind) {
    case RecurrenceKind::sgr:
      for (const auto& g : sgr_theorem_checks(s.geo, *l, forms)) sec.entries.push_back(gated_entry(g, s.print));
      break;
    case RecurrenceKind::sgpr: {
      const Sgpr4Result id = sgpr4_identity_check(s.geo, *l);
      Entry e = check_entry(id.check, s.print);
      if (id.sign_flipped) e.status = Status::pass;
      sec.entries.push_back(std::move(e));
      sec.entries.push_back(gated_entry(sgpr_theorem_check(s.geo, *l, forms), s.print));
      break;
    }
    case RecurrenceKind::sgrr:
      sec.entries.push_back(gated_entry(sgrr_theorem_check(s.geo, *l, forms), s.print));
      break;
  }
}

void add_forms_entries(Section& sec, const Session& s, const RecurrenceForms& f) {
  sec.entries.push_back(info("A", one_form_text(f.a, s.print), "A(E_a)"));
  sec.entries.push_back(info("B", one_form_text(f.b, s.print), "B(E_a)"));
  sec.entries.push_back(info("rho1", s.print.vector(f.rho1), "g(X, rho1) = A(X)"));
  sec.entries.push_back(info("rho2", s.print.vector(f.rho2), "g(X, rho2) = B(X)"));
}

std::string relation_statement(RecurrenceKind kind) {
  switch (kind) {
    case RecurrenceKind::sgr:
      return "(nabla_X R)(Y,Z)W = A(X) R(Y,Z)W + B(X) g(Z,W) Y";
    case RecurrenceKind::sgrr:
      return "(nabla_X S)(Y,Z) = A(X) S(Y,Z) + n B(X) g(Y,Z)";
    case RecurrenceKind::sgpr:
      return "phi^2((nabla_W R)(X,Y)Z) = A(W) R(X,Y)Z + B(W) g(Y,Z) X";
  }
  return {};
}

}  // namespace

std::vector<std::string> convention_header() {
  return {
      "scalars are exact rational functions; equality is identity in the function field",
      "all components are taken against the frame E1..En; indices print 1-based",
      "R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z",
      "S(Y,Z) = sum_ab g^ab g(R(E_a,Y)Z, E_b);  r = sum_ab g^ab S(E_a,E_b);  g(QX,Y) = S(X,Y)",
      "(nabla T) puts the differentiation direction in the first slot",
  };
}

Session open_session(const Options& opt) {
  ManifoldDef def = load_manifold_def(opt.definition);
  Manifold m = build_manifold(def, opt.sample);
  std::vector<std::string> coords = m.chart.coords();
  Geometry geo(std::move(m), opt.exec);
  Session s{std::move(def), std::move(geo), Printer(std::move(coords)), std::nullopt};
  if (s.geo.manifold().xi) s.lcs = extract_candidate(s.geo, *s.geo.manifold().xi);
  return s;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"check-lcs", "curvature",          "check",      "fit",
                                                 "soliton",   "derived-conditions", "conformance"};
  return names;
}

Report run_command(const std::string& command, const Options& opt) {
  if (command != "check-lcs" && command != "curvature" && command != "check" && command != "fit" &&
      command != "soliton" && command != "derived-conditions" && command != "conformance") {
    throw UsageError("unknown command '" + command + "'");
  }
  if (command == "check" || command == "fit") require_kind(opt, command == "fit");
  if (command == "check" && !opt.forms) throw UsageError("check needs --forms <file>");
  const Session s = open_session(opt);
  if (command == "check-lcs") return check_lcs_report(s);
  if (command == "curvature") return curvature_report(s);
  if (command == "check") return check_report(s, opt);
  if (command == "fit") return fit_report(s, opt);
  if (command == "soliton") return soliton_report(s, opt);
  if (command == "derived-conditions") return derived_conditions_report(s, opt);
  return conformance_report(s);
}

Report check_lcs_report(const Session& s) {
  if (!s.lcs) throw UsageError("check-lcs needs the definition to designate xi");
  Report r = new_report(s, "check-lcs");
  add_structure_section(r, s);
  Section& ax = r.add_section("axioms");
  for (const auto& c : verify_axioms(s.geo, s.lcs->structure)) ax.entries.push_back(check_entry(c, s.print));
  add_connection_checks(r.add_section("connection"), s);
  add_identity_section(r, s);
  r.add_section("classification").entries.push_back(classify_entry(s, s.lcs->structure));
  return r;
}

Report curvature_report(const Session& s) {
  const Geometry& g = s.geo;
  const std::size_t n = g.dim();
  Report r = new_report(s, "curvature");

  Section& br = r.add_section("brackets");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Expr> v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = g.brackets()(i, j, k);
      br.entries.push_back(info("[" + frame_label(i) + "," + frame_label(j) + "]", s.print.vector(v)));
    }
  }
  Section& conn = r.add_section("connection");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Expr> v(n);
      for (std::size_t k = 0; k < n; ++k) v[k] = g.connection()(i, j, k);
      conn.entries.push_back(info("nabla_" + frame_label(i) + " " + frame_label(j), s.print.vector(v)));
    }
  }
  add_connection_checks(conn, s);

  add_tensor_rows(r.add_section("riemann"), g.curvature().riemann13, s.print, "R");

  Section& ric = r.add_section("ricci");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      ric.entries.push_back(info("S(" + frame_label(i) + "," + frame_label(j) + ")", s.print(g.curvature().ricci(i, j))));
    }
  }
  ric.entries.push_back(info("r", s.print(g.curvature().scalar), "scalar curvature"));
  ric.entries.push_back(info("Q", operator_rows(g.curvature().q_operator, s.print, "Q"), "Ricci operator"));

  add_tensor_rows(r.add_section("m-projective"), m_projective(g.curvature(), g.metric()), s.print, "M");
  add_tensor_rows(r.add_section("concircular"), concircular(g.curvature(), g.metric()), s.print, "C");

  Section& dS = r.add_section("nabla ricci");
  dS.entries.push_back(info("nabla S", s.print.components(g.nabla_ricci(), g.nabla_ricci().size()),
                            "(nabla_{E_a} S)(E_b,E_c) as [a,b,c]"));

  add_identity_section(r, s);
  return r;
}

RecurrenceForms load_forms(const std::string& path, const Geometry& geo) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open forms file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(std::string("forms file: ") + e.what());
  }
  auto read = [&](const char* key) {
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_array() || doc[key].size() != geo.dim()) {
      throw LoadError(std::string("forms file needs \"") + key + "\" with " + std::to_string(geo.dim()) +
                      " expression strings");
    }
    std::vector<Expr> out;
    for (const auto& v : doc[key]) {
      const std::string text = v.is_string() ? v.get<std::string>() : v.dump();
      try {
        out.push_back(parse(text, geo.chart().coords()));
      } catch (const ParseError& e) {
        throw LoadError(std::string("forms file, ") + key + ": " + e.what());
      }
    }
    return out;
  };
  return make_forms(geo, read("A"), read("B"));
}

Report check_report(const Session& s, const Options& opt) {
  const RecurrenceKind kind = require_kind(opt, false);
  const RecurrenceForms forms = load_forms(*opt.forms, s.geo);
  if (kind == RecurrenceKind::sgpr) require_lcs(s);
  Report r = new_report(s, "check " + to_string(kind));
  Section& rel = r.add_section("relation");
  add_forms_entries(rel, s, forms);
  rel.entries.push_back(check_entry(
      make_check(to_string(kind), relation_statement(kind), recurrence_residual(kind, s.geo, forms, s.structure())),
      s.print));
  add_consequences(r, s, kind, forms);
  return r;
}

Report fit_report(const Session& s, const Options& opt) {
  const RecurrenceKind kind = require_kind(opt, true);
  Report r = new_report(s, "fit " + to_string(kind));
  const FitResult fit = recurrence_fit(kind, s.geo, opt.exec);
  Section& sec = r.add_section("fit");
  Entry e;
  e.id = "fit." + to_string(kind);
  e.statement = relation_statement(kind);
  if (fit.solved()) {
    e.status = Status::pass;
    e.engine = "solution found";
    e.residual = "0";
    e.note = "directions with no constraint on A, B take A = B = 0";
    sec.entries.push_back(std::move(e));
    add_forms_entries(sec, s, *fit.forms);
    add_consequences(r, s, kind, *fit.forms);
  } else {
    e.status = Status::fail;
    e.engine = "no solution";
    e.note = "first inconsistent component " + index_label(fit.inconsistent) + " (direction first)";
    sec.entries.push_back(std::move(e));
  }
  return r;
}

Report soliton_report(const Session& s, const Options& opt) {
  const Geometry& g = s.geo;
  const std::size_t n = g.dim();
  const bool along_xi = opt.v == "xi";
  const LcsStructure* l = s.structure();
  if (along_xi) l = &require_lcs(s);
  const std::vector<Expr> v = along_xi ? basis_vector(n, l->xi_index) : parse_list(opt.v, g, "--V");
  const Expr p = parse_option(opt.p, g, "--p", Expr());

  Report r = new_report(s, "soliton");
  Section& lam = r.add_section("lambda");
  std::optional<LambdaValues> lv;
  if (l != nullptr) {
    lv = soliton_lambda(l->alpha, p, n);
    lam.entries.push_back(info("lambda.stated", s.print(lv->stated), "lambda = p/2 + ((n+1)/n) alpha"));
    lam.entries.push_back(info("lambda.traced", s.print(lv->traced),
                               "lambda = p/2 + ((n-1)/n) alpha, from tracing S = k g - alpha eta (x) eta "
                               "with g(xi,xi) = -1 and r = -1"));
    Entry cmp;
    cmp.id = "lambda.agreement";
    cmp.statement = "both contractions give the same lambda";
    cmp.engine = s.print(lv->traced);
    cmp.paper = s.print(lv->stated);
    cmp.status = lv->stated == lv->traced ? Status::pass : Status::mismatch;
    if (cmp.status == Status::mismatch) cmp.note = "the stated value follows from taking trace(eta (x) eta) = +1";
    lam.entries.push_back(std::move(cmp));
  }
  if (!opt.lambda && !lv) throw UsageError("soliton needs --lambda when the manifold has no (LCS)_n structure");
  const SolitonParams params{parse_option(opt.lambda, g, "--lambda", lv ? lv->stated : Expr()), p};
  lam.entries.push_back(info("lambda", s.print(params.lambda), opt.lambda ? "given" : "stated value used"));
  lam.entries.push_back(info("p", s.print(p)));

  Section& sol = r.add_section("soliton");
  sol.entries.push_back(info("V", s.print.vector(v)));
  sol.entries.push_back(check_entry(
      make_check("soliton", "L_V g + 2S = [2 lambda - (p + 2/n)] g", soliton_residual(g, v, params)), s.print));
  if (along_xi) {
    sol.entries.push_back(info("k", s.print(soliton_k(params, l->alpha, n)), "k = lambda - (p/2 + 1/n) - alpha"));
    sol.entries.push_back(check_entry(
        make_check("soliton.eta_einstein", "S = k g - alpha eta (x) eta", eta_einstein_residual(g, *l, params)),
        s.print));
    Entry lie = check_entry(make_check("lie.xi", "L_xi g = 2 alpha (g + eta (x) eta)", [&] {
                              FrameTensor t = lie_derivative_metric(g.frame(), g.metric(), g.brackets(), v);
                              for (std::size_t i = 0; i < n; ++i) {
                                for (std::size_t j = 0; j < n; ++j) {
                                  t(i, j) -= Expr(2) * l->alpha * (g.g()(i, j) + l->eta(i) * l->eta(j));
                                }
                              }
                              return t;
                            }()),
                            s.print);
    sol.entries.push_back(std::move(lie));
    sol.entries.push_back(classify_entry(s, *l));
    if (!g.is_constant(l->alpha)) {
      sol.entries.push_back(info("alpha.constant", "no", "alpha is not constant, so lambda is not a constant scalar"));
    }
  }
  return r;
}

Report derived_conditions_report(const Session& s, const Options& opt) {
  const LcsStructure& l = require_lcs(s);
  const DerivedConditions dc = derived_condition_residuals(s.geo, l, opt.exec);
  Report r = new_report(s, "derived-conditions");

  Section& mp = r.add_section("m-projective");
  mp.entries.push_back(check_entry(make_check("eta_m_xi", "eta(M(X,Y)xi) = 0", dc.eta_m_xi), s.print));
  mp.entries.push_back(info("M", std::to_string(dc.m_projective.nonzero_count()) + " nonzero components",
                            "M(X,Y)Z = R(X,Y)Z - [S(Y,Z)X - S(X,Z)Y + g(Y,Z)QX - g(X,Z)QY]/(2(n-1))"));
  mp.entries.push_back(info("C", std::to_string(dc.concircular.nonzero_count()) + " nonzero components",
                            "C(X,Y)W = R(X,Y)W - r/(n(n-1)) {g(Y,W)X - g(X,W)Y}"));

  Section& hyp = r.add_section("hypotheses");
  Entry rxm = info("R(xi,X).M", dc.rxm.is_zero() ? "vanishes" : "does not vanish",
                   "eta(R(xi,X)M(U,V)W) - eta(M(R(xi,X)U,V)W) - eta(M(U,R(xi,X)V)W) - eta(M(U,V)R(xi,X)W)");
  rxm.residual = s.print.residual(dc.rxm);
  hyp.entries.push_back(std::move(rxm));
  Entry cxs = info("C(xi,X).S", dc.cxs.is_zero() ? "vanishes" : "does not vanish", "S(C(xi,X)Y,Z) + S(Y,C(xi,X)Z)");
  cxs.residual = s.print.residual(dc.cxs);
  hyp.entries.push_back(std::move(cxs));

  Section& thm = r.add_section("consequences");
  for (const auto& gc : derived_theorem_checks(s.geo, l, dc)) thm.entries.push_back(gated_entry(gc, s.print));
  thm.entries.push_back(classify_entry(s, l));
  return r;
}

}  // namespace lcs::cli
