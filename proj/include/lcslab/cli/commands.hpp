#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcslab/cli/manifold_def.hpp"
#include "lcslab/cli/report.hpp"
#include "lcslab/error.hpp"
#include "lcslab/exec.hpp"
#include "lcslab/geometry/manifold.hpp"
#include "lcslab/lcs_structure.hpp"

namespace lcs::cli {

/// Bad command line; exit code 2 like a load error.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string definition = "example51";
  std::string kind;                   ///< SGR / SGRR / SGPR for check and fit
  std::optional<std::string> forms;   ///< path of the forms JSON for check
  std::optional<std::string> p;       ///< conformal pressure expression
  std::optional<std::string> lambda;  ///< soliton constant expression
  std::string v = "xi";               ///< "xi" or comma-separated frame components
  std::map<std::string, std::string> sample;
  Exec exec = kDefaultExec;
};

/// A loaded manifold with everything the commands share.
struct Session {
  ManifoldDef def;
  Geometry geo;
  Printer print;
  std::optional<LcsCandidate> lcs;  ///< present when the definition designates xi

  const LcsStructure* structure() const { return lcs && lcs->valid() ? &lcs->structure : nullptr; }
};

Session open_session(const Options& opt);

const std::vector<std::string>& command_names();

/// Dispatches one command. Throws LoadError / UsageError for exit code 2.
Report run_command(const std::string& command, const Options& opt);

Report check_lcs_report(const Session& s);
Report curvature_report(const Session& s);
Report check_report(const Session& s, const Options& opt);
Report fit_report(const Session& s, const Options& opt);
Report soliton_report(const Session& s, const Options& opt);
Report derived_conditions_report(const Session& s, const Options& opt);
Report conformance_report(const Session& s);

/// Reads {"A": [...], "B": [...]} with n expression strings each.
RecurrenceForms load_forms(const std::string& path, const Geometry& geo);

/// Conventions printed at the top of every report.
std::vector<std::string> convention_header();

}  // namespace lcs::cli
