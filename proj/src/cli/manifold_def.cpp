#include "lcslab/cli/manifold_def.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "lcslab/cli/builtin.hpp"
#include "lcslab/cli/json_locator.hpp"
#include "lcslab/error.hpp"
#include "lcslab/symexpr/parser.hpp"

namespace lcs::cli {

namespace {

using nlohmann::json;

class DefReader {
 public:
  explicit DefReader(const std::string& text) : text_(text) {}

  ManifoldDef read() {
    json doc;
    try {
      doc = json::parse(text_);
    } catch (const json::parse_error& e) {
      throw LoadError(std::string("malformed JSON: ") + e.what(), line_of_offset(text_, e.byte > 0 ? e.byte - 1 : 0));
    }
    lines_ = locate_json_values(text_);
    if (!doc.is_object()) throw LoadError("definition must be a JSON object", line(""));

    for (const auto& [key, _] : doc.items()) {
      if (key != "name" && key != "coords" && key != "frame" && key != "metric" && key != "xi" &&
          key != "sample_point") {
        throw LoadError("unknown key '" + key + "'", line("/" + key));
      }
    }

    ManifoldDef def;
    def.name = doc.contains("name") ? string_at(doc["name"], "/name") : "unnamed";
    read_coords(doc, def);
    read_frame(doc, def);
    read_metric(doc, def);
    if (doc.contains("xi")) {
      def.xi_line = line("/xi");
      const json& xi = doc["xi"];
      if (!xi.is_number_integer() || xi.get<long>() < 1 || xi.get<long>() > static_cast<long>(def.coords.size())) {
        throw LoadError("xi must be a frame index between 1 and " + std::to_string(def.coords.size()), def.xi_line);
      }
      def.xi = xi.get<std::size_t>();
    }
    if (doc.contains("sample_point")) {
      def.sample_line = line("/sample_point");
      const json& sp = doc["sample_point"];
      if (!sp.is_object()) throw LoadError("sample_point must be an object", def.sample_line);
      for (const auto& [key, value] : sp.items()) def.sample_point[key] = scalar_text(value, "/sample_point/" + key);
    }
    return def;
  }

 private:
  int line(const std::string& pointer) const {
    auto it = lines_.find(pointer);
    return it == lines_.end() ? 0 : it->second;
  }

  std::string string_at(const json& v, const std::string& pointer) const {
    if (!v.is_string()) throw LoadError("expected a string", line(pointer));
    return v.get<std::string>();
  }

  /// Expression text from a string or an integer literal.
  std::string scalar_text(const json& v, const std::string& pointer) const {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    if (v.is_number_float()) throw LoadError("floating-point values are not exact; write them as strings", line(pointer));
    throw LoadError("expected an expression string", line(pointer));
  }

  const json& require_array(const json& doc, const std::string& key) const {
    if (!doc.contains(key)) throw LoadError("missing required key '" + key + "'", 1);
    const json& v = doc[key];
    if (!v.is_array()) throw LoadError("'" + key + "' must be an array", line("/" + key));
    return v;
  }

  void read_coords(const json& doc, ManifoldDef& def) const {
    const json& coords = require_array(doc, "coords");
    def.coords_line = line("/coords");
    if (coords.empty()) throw LoadError("coords must not be empty", def.coords_line);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      def.coords.push_back(string_at(coords[i], "/coords/" + std::to_string(i)));
    }
  }

  void read_frame(const json& doc, ManifoldDef& def) const {
    const std::size_t n = def.coords.size();
    const json& frame = require_array(doc, "frame");
    def.frame_line = line("/frame");
    if (frame.size() != n) {
      throw LoadError("frame needs " + std::to_string(n) + " fields, found " + std::to_string(frame.size()),
                      def.frame_line);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row_ptr = "/frame/" + std::to_string(i);
      const json& row = frame[i];
      if (!row.is_array() || row.size() != n) {
        throw LoadError("frame field " + std::to_string(i + 1) + " needs " + std::to_string(n) + " components",
                        line(row_ptr));
      }
      def.frame.emplace_back();
      def.frame_lines.emplace_back();
      for (std::size_t j = 0; j < n; ++j) {
        const std::string ptr = row_ptr + "/" + std::to_string(j);
        def.frame.back().push_back(scalar_text(row[j], ptr));
        def.frame_lines.back().push_back(line(ptr));
      }
    }
  }

  /// Rows are either full (nulls allowed below the diagonal) or upper
  /// triangular (row i holds entries i..n-1).
  void read_metric(const json& doc, ManifoldDef& def) const {
    const std::size_t n = def.coords.size();
    const json& metric = require_array(doc, "metric");
    def.metric_line = line("/metric");
    if (metric.size() != n) {
      throw LoadError("metric needs " + std::to_string(n) + " rows, found " + std::to_string(metric.size()),
                      def.metric_line);
    }
    std::vector<std::vector<std::optional<std::string>>> text(n, std::vector<std::optional<std::string>>(n));
    def.metric_lines.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      const std::string row_ptr = "/metric/" + std::to_string(i);
      const json& row = metric[i];
      if (!row.is_array() || (row.size() != n && row.size() != n - i)) {
        throw LoadError("metric row " + std::to_string(i + 1) + " needs " + std::to_string(n) + " or " +
                            std::to_string(n - i) + " entries",
                        line(row_ptr));
      }
      const std::size_t offset = row.size() == n ? 0 : i;
      for (std::size_t k = 0; k < row.size(); ++k) {
        const std::size_t j = k + offset;
        const std::string ptr = row_ptr + "/" + std::to_string(k);
        if (row[k].is_null()) {
          if (j >= i) throw LoadError("metric entries on or above the diagonal are required", line(ptr));
          continue;
        }
        text[i][j] = scalar_text(row[k], ptr);
        def.metric_lines[i][j] = line(ptr);
      }
    }
    def.metric.assign(n, std::vector<std::string>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (text[i][j]) {
          def.metric[i][j] = *text[i][j];
        } else {
          def.metric[i][j] = *text[j][i];
          def.metric_lines[i][j] = def.metric_lines[j][i];
        }
      }
    }
  }

  const std::string& text_;
  std::map<std::string, int> lines_;
};

Expr parse_at(const std::string& text, const std::vector<std::string>& vars, const std::string& where, int line) {
  try {
    return parse(text, vars);
  } catch (const ParseError& e) {
    throw LoadError(where + ": " + e.what(), line);
  }
}

}  // namespace

ManifoldDef parse_manifold_def(const std::string& text) { return DefReader(text).read(); }

ManifoldDef load_manifold_def(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    if (auto body = builtin_definition(path)) return parse_manifold_def(*body);
    throw LoadError("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifold_def(ss.str());
}

Manifold build_manifold(const ManifoldDef& def, const std::map<std::string, std::string>& sample_override) {
  const std::size_t n = def.coords.size();
  std::optional<Chart> chart;
  try {
    chart.emplace(def.coords);
  } catch (const Error& e) {
    throw LoadError(e.what(), def.coords_line);
  }

  std::vector<VectorField> fields(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      fields[i].coeffs.push_back(parse_at(def.frame[i][j], def.coords,
                                          "frame[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]",
                                          def.frame_lines[i][j]));
    }
  }
  std::optional<Frame> frame;
  try {
    frame.emplace(std::move(fields));
  } catch (const SingularMatrix&) {
    throw LoadError("frame fields are linearly dependent (singular frame)", def.frame_line);
  }

  ExprMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, j) = parse_at(def.metric[i][j], def.coords,
                         "metric[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]", def.metric_lines[i][j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (g(i, j) != g(j, i)) {
        throw LoadError("metric is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                        def.metric_lines[i][j]);
      }
    }
  }

  std::vector<mpq_class> sample = chart->uniform_point(mpq_class(2));
  auto assign = [&](const std::map<std::string, std::string>& values, int line) {
    for (const auto& [name, value] : values) {
      std::size_t index = 0;
      try {
        index = chart->index_of(name);
      } catch (const Error&) {
        throw LoadError("sample point names unknown coordinate '" + name + "'", line);
      }
      try {
        sample[index] = parse_rational(value);
      } catch (const Error& e) {
        throw LoadError("sample point value for '" + name + "': " + e.what(), line);
      }
    }
  };
  assign(def.sample_point, def.sample_line);
  assign(sample_override, 0);

  std::optional<FrameMetric> metric;
  try {
    metric.emplace(std::move(g), sample);
  } catch (const DegenerateMetric& e) {
    throw LoadError(e.what(), def.metric_line);
  }

  Manifold m{def.name, std::move(*chart), std::move(*frame), std::move(*metric), std::nullopt};
  if (def.xi) m.xi = *def.xi - 1;
  return m;
}

std::map<std::string, std::string> parse_sample_option(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw LoadError("--sample expects name=value pairs, got '" + item + "'");
    }
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

}  // namespace lcs::cli
