#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcslab/cli/builtin.hpp"
#include "lcslab/cli/commands.hpp"
#include "lcslab/error.hpp"

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lcs::cli;

  CLI::App app{"Exact curvature and (LCS)_n structure checks for framed Lorentzian manifolds"};
  app.footer("commands: " + join(command_names()) + "\nbuilt-in definitions: " + join(builtin_names()) +
             "\n\n  lcslab check <SGR|SGRR|SGPR> [def.json] --forms <file>\n  lcslab fit <SGR|SGRR> [def.json]");

  std::vector<std::string> positional;
  Options opt;
  bool json = false;
  bool serial = false;
  std::string sample;
  app.add_option("args", positional, "<command> [<kind>] [<def.json>]")->required();
  app.add_flag("--json", json, "emit the report as JSON");
  app.add_option("--forms", opt.forms, "JSON file with \"A\" and \"B\" component arrays");
  app.add_option("--p", opt.p, "conformal pressure p (expression)");
  app.add_option("--lambda", opt.lambda, "soliton constant lambda (expression)");
  app.add_option("--V", opt.v, "soliton field: xi, or comma-separated frame components");
  app.add_option("--sample", sample, "signature sample point, e.g. x=2,y=1/2");
  app.add_flag("--serial", serial, "run component kernels on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::string command = positional.front();
    std::size_t next = 1;
    if (command == "check" || command == "fit") {
      if (positional.size() < 2) throw UsageError(command + " needs a relation kind");
      opt.kind = positional[next++];
    }
    if (next < positional.size()) opt.definition = positional[next++];
    if (next < positional.size()) throw UsageError("unexpected argument '" + positional[next] + "'");
    if (!sample.empty()) opt.sample = parse_sample_option(sample);
    if (serial) opt.exec = lcs::Exec::serial;

    const Report report = run_command(command, opt);
    std::cout << (json ? render_json(report) : render_text(report));
    return report.exit_code();
  } catch (const lcs::LoadError& e) {
    std::cerr << "load error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const lcs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
