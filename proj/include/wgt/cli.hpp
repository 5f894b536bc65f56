#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wgt/check.hpp"
#include "wgt/patterns.hpp"
#include "wgt/pyramid.hpp"

namespace wgt {

// Parsed job file.  Sections:
//   [pyramid]  rows = 1 2 2   |  cols = 1 2 2
//   [weight]   lambda[i] = a, b/c, ...   (one line per row i)  |  gap = 1
//   [run]      rmax = 6, points = 0, 7, -3, 2/7, order = 0, n = 2
struct JobConfig {
  std::optional<Pyramid> pyramid;
  std::optional<HighestWeight> weight;  // explicit lambda lines
  int gap = 1;                          // generic recipe when no lambda lines
  int rmax = 6;
  std::vector<Scalar> points{Scalar(0), Scalar(7), Scalar(-3), Scalar(2, 7)};
  int center_order = 0;  // 0 picks the default
  int noether_n = 2;

  const Pyramid& require_pyramid() const;
  // Explicit weight, or the generic recipe; validated against the pyramid.
  HighestWeight resolved_weight() const;
};

// Errors carry "line N: ..." and are ParseError.
JobConfig parse_config(std::string_view text);
JobConfig load_config(const std::string& path);

// "5/2, 1/2; 3" -> rows {5/2, 1/2} and {3}.
HighestWeight parse_lambda_literal(std::string_view text);
std::vector<Scalar> parse_scalar_list(std::string_view text);

struct Report {
  std::string command;
  nlohmann::ordered_json inputs;
  nlohmann::ordered_json result;
  std::vector<CheckRecord> checks;
  std::vector<std::string> text;  // human-readable lines
  double seconds = 0.0;

  // 0 iff no FAIL.
  int exit_code() const { return all_pass(checks) ? 0 : 1; }
  // Deterministic part only: everything except timing.
  nlohmann::ordered_json records() const;
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& cli_commands();

// InvariantViolation turns into a FAIL record; configuration problems
// (ParseError, ShapeError, ValidationError) propagate to the caller.
Report run(const std::string& command, const JobConfig& config);

}  // namespace wgt
