#include "lcslab/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace lcs::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::info:
      return "info";
    case Status::mismatch:
      return "mismatch";
  }
  return "info";
}

Section& Report::add_section(std::string title) {
  sections.push_back(Section{std::move(title), {}});
  return sections.back();
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& sec : sections) {
    n += static_cast<std::size_t>(
        std::count_if(sec.entries.begin(), sec.entries.end(), [s](const Entry& e) { return e.status == s; }));
  }
  return n;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "lcslab " << report.command << ": " << report.manifold << "\n";
  for (const auto& h : report.header) out << "# " << h << "\n";
  for (const auto& sec : report.sections) {
    out << "\n== " << sec.title << " ==\n";
    for (const auto& e : sec.entries) {
      const std::string tag = "[" + to_string(e.status) + "]";
      out << tag << std::string(tag.size() < 11 ? 11 - tag.size() : 1, ' ') << e.id;
      if (!e.statement.empty()) out << ": " << e.statement;
      out << "\n";
      if (!e.engine.empty()) out << "           engine:   " << e.engine << "\n";
      if (!e.paper.empty()) out << "           printed:  " << e.paper << "\n";
      if (!e.residual.empty()) out << "           residual: " << e.residual << "\n";
      if (!e.note.empty()) out << "           note:     " << e.note << "\n";
    }
  }
  out << "\nsummary: " << report.count(Status::pass) << " pass, " << report.count(Status::fail) << " fail, "
      << report.count(Status::info) << " info, " << report.count(Status::mismatch) << " mismatch\n";
  return out.str();
}

std::string render_json(const Report& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["command"] = report.command;
  doc["manifold"] = report.manifold;
  doc["header"] = report.header;
  ordered_json sections = ordered_json::array();
  for (const auto& sec : report.sections) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : sec.entries) {
      ordered_json j;
      j["id"] = e.id;
      j["status"] = to_string(e.status);
      if (!e.statement.empty()) j["statement"] = e.statement;
      if (!e.engine.empty()) j["engine"] = e.engine;
      if (!e.paper.empty()) j["printed"] = e.paper;
      if (!e.residual.empty()) j["residual"] = e.residual;
      if (!e.note.empty()) j["note"] = e.note;
      entries.push_back(std::move(j));
    }
    sections.push_back(ordered_json{{"title", sec.title}, {"entries", std::move(entries)}});
  }
  doc["sections"] = std::move(sections);
  doc["summary"] = ordered_json{{"pass", report.count(Status::pass)},
                                {"fail", report.count(Status::fail)},
                                {"info", report.count(Status::info)},
                                {"mismatch", report.count(Status::mismatch)}};
  doc["exit_code"] = report.exit_code();
  return doc.dump(2) + "\n";
}

std::string Printer::operator()(const Expr& e) const { return to_string(e, coords_); }

std::string Printer::vector(std::span<const Expr> comps) const {
  std::string out;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (comps[k].is_zero()) continue;
    const std::string basis = "E" + std::to_string(k + 1);
    std::string term;
    if (comps[k].is_one()) {
      term = basis;
    } else if ((-comps[k]).is_one()) {
      term = "-" + basis;
    } else {
      term = (*this)(comps[k]) + "*" + basis;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string Printer::components(const FrameTensor& t, std::size_t limit) const {
  std::string out;
  std::size_t shown = 0;
  for (std::size_t f = 0; f < t.size() && shown < limit; ++f) {
    if (t.comps()[f].is_zero()) continue;
    if (!out.empty()) out += "; ";
    out += index_label(t.unflat(f)) + " = " + (*this)(t.comps()[f]);
    ++shown;
  }
  return out.empty() ? "0" : out;
}

std::string Printer::residual(const FrameTensor& t) const {
  const std::size_t nz = t.nonzero_count();
  if (nz == 0) return "0";
  return std::to_string(nz) + " nonzero; " + components(t, 3);
}

Entry check_entry(const Check& c, const Printer& print) {
  Entry e;
  e.id = c.id;
  e.statement = c.statement;
  e.status = c.passed() ? Status::pass : Status::fail;
  if (c.scalar) {
    e.residual = print(c.residual(0));
  } else {
    e.residual = print.residual(c.residual);
  }
  e.note = c.note;
  return e;
}

Entry gated_entry(const GatedCheck& g, const Printer& print) {
  Entry e = check_entry(g.conclusion, print);
  if (!g.asserted()) e.status = Status::info;
  const std::string gate = (g.asserted() ? "asserted: " : "not asserted: ") + g.gate;
  e.note = e.note.empty() ? gate : gate + "; " + e.note;
  return e;
}

}  // namespace lcs::cli
