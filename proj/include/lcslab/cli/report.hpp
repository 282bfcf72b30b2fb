#pragma once

#include <span>
#include <string>
#include <vector>

#include "lcslab/check.hpp"
#include "lcslab/conditions.hpp"

namespace lcs::cli {

enum class Status { pass, fail, info, mismatch };

std::string to_string(Status s);

struct Entry {
  std::string id;
  Status status = Status::info;
  std::string statement;
  std::string engine;
  std::string paper;
  std::string residual;
  std::string note;
};

struct Section {
  std::string title;
  std::vector<Entry> entries;
};

struct Report {
  std::string command;
  std::string manifold;
  std::vector<std::string> header;
  std::vector<Section> sections;

  Section& add_section(std::string title);
  std::size_t count(Status s) const;
  /// 1 when any entry failed, else 0. Mismatches are findings, not failures.
  int exit_code() const { return count(Status::fail) > 0 ? 1 : 0; }
};

std::string render_text(const Report& report);
std::string render_json(const Report& report);

/// Expression printer bound to a chart's coordinate names.
class Printer {
 public:
  explicit Printer(std::vector<std::string> coords) : coords_(std::move(coords)) {}

  std::string operator()(const Expr& e) const;
  /// "-z*E1 - 1/z*E3" for frame components; "0" when all vanish.
  std::string vector(std::span<const Expr> comps) const;
  /// Nonzero components as "[i,j] = value; ...", at most `limit` of them.
  std::string components(const FrameTensor& t, std::size_t limit = 4) const;
  /// "0" or "<k> nonzero; [i,j] = value; ...".
  std::string residual(const FrameTensor& t) const;

 private:
  std::vector<std::string> coords_;
};

Entry check_entry(const Check& c, const Printer& print);
/// Status info unless the hypothesis holds.
Entry gated_entry(const GatedCheck& g, const Printer& print);

}  // namespace lcs::cli
