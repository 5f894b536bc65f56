#include <fstream>
#include <sstream>

#include "wgt/cli.hpp"
#include "wgt/errors.hpp"

namespace wgt {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) throw ParseError(what + " is not an integer: '" + s + "'");
  return v;
}

}  // namespace

std::vector<Scalar> parse_scalar_list(std::string_view text) {
  std::vector<Scalar> out;
  for (const auto& tok : split(text, ',')) {
    if (tok.empty()) throw ParseError("empty entry in list '" + std::string(text) + "'");
    out.push_back(parse_scalar(tok));
  }
  return out;
}

HighestWeight parse_lambda_literal(std::string_view text) {
  HighestWeight w;
  for (const auto& row : split(text, ';')) w.roots.push_back(parse_scalar_list(row));
  return w;
}

const Pyramid& JobConfig::require_pyramid() const {
  if (!pyramid) throw ParseError("no pyramid given ([pyramid] rows/cols or --pyramid)");
  return *pyramid;
}

HighestWeight JobConfig::resolved_weight() const {
  const Pyramid& pyr = require_pyramid();
  HighestWeight w = weight ? *weight : generic_weight(pyr, gap);
  const auto diag = validate_highest_weight(w, pyr);
  if (!diag.ok()) throw ValidationError(diag.summary());
  return w;
}

JobConfig parse_config(std::string_view text) {
  JobConfig cfg;
  std::string section;
  std::vector<std::optional<std::vector<Scalar>>> lambda_rows;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    try {
      if (line.front() == '[') {
        if (line.back() != ']') throw ParseError("unterminated section header");
        section = trim(std::string_view(line).substr(1, line.size() - 2));
        if (section != "pyramid" && section != "weight" && section != "run") {
          throw ParseError("unknown section [" + section + "]");
        }
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("expected 'key = value'");
      const std::string key = trim(std::string_view(line).substr(0, eq));
      const std::string value = trim(std::string_view(line).substr(eq + 1));
      if (section.empty()) throw ParseError("key '" + key + "' outside any section");
      if (section == "pyramid") {
        if (key != "rows" && key != "cols") throw ParseError("unknown key '" + key + "' in [pyramid]");
        if (cfg.pyramid) throw ParseError("pyramid given twice");
        cfg.pyramid = parse_pyramid_literal(key + ": " + value);
      } else if (section == "weight") {
        if (key == "gap") {
          cfg.gap = parse_int(value, "gap");
        } else if (key.rfind("lambda[", 0) == 0 && key.back() == ']') {
          const int i = parse_int(key.substr(7, key.size() - 8), "row index");
          if (i < 1) throw ParseError("row index must be positive");
          if (static_cast<int>(lambda_rows.size()) < i) lambda_rows.resize(static_cast<std::size_t>(i));
          if (lambda_rows[static_cast<std::size_t>(i - 1)]) throw ParseError(key + " given twice");
          lambda_rows[static_cast<std::size_t>(i - 1)] = parse_scalar_list(value);
        } else {
          throw ParseError("unknown key '" + key + "' in [weight]");
        }
      } else {
        if (key == "rmax") cfg.rmax = parse_int(value, "rmax");
        else if (key == "points") cfg.points = parse_scalar_list(value);
        else if (key == "order") cfg.center_order = parse_int(value, "order");
        else if (key == "n") cfg.noether_n = parse_int(value, "n");
        else throw ParseError("unknown key '" + key + "' in [run]");
      }
    } catch (const Error& ex) {
      // Re-anchor messages from the literal parsers at the offending line.
      std::string msg = ex.what();
      const std::string prefix = "ParseError: ";
      if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
      throw ParseError(where + msg);
    }
  }
  if (!lambda_rows.empty()) {
    HighestWeight w;
    for (std::size_t i = 0; i < lambda_rows.size(); ++i) {
      if (!lambda_rows[i]) throw ParseError("lambda[" + std::to_string(i + 1) + "] is missing");
      w.roots.push_back(*lambda_rows[i]);
    }
    cfg.weight = std::move(w);
  }
  return cfg;
}

JobConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace wgt
