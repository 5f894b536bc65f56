#include <chrono>
#include <functional>
#include <map>

#include "wgt/center.hpp"
#include "wgt/cli.hpp"
#include "wgt/errors.hpp"
#include "wgt/galois.hpp"
#include "wgt/gamma.hpp"
#include "wgt/grord.hpp"
#include "wgt/noether.hpp"
#include "wgt/rep.hpp"

namespace wgt {

using nlohmann::ordered_json;

namespace {

ordered_json check_json(const CheckRecord& c) {
  ordered_json j;
  j["name"] = c.name;
  j["status"] = to_string(c.status);
  j["instances"] = c.instances;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

ordered_json weight_json(const HighestWeight& w) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : w.roots) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    rows.push_back(r);
  }
  return rows;
}

std::string check_line(const CheckRecord& c) {
  std::string line = std::string(to_string(c.status)) + "  " + c.name + " (" + std::to_string(c.instances) + ")";
  if (!c.detail.empty()) line += "  " + c.detail;
  if (!c.witness.empty()) line += "  witness: " + c.witness;
  return line;
}

void append(std::vector<CheckRecord>& to, const std::vector<CheckRecord>& from) {
  to.insert(to.end(), from.begin(), from.end());
}

// ---------------------------------------------------------------- commands

void cmd_params(const JobConfig& cfg, Report& rep) {
  const Pyramid& pyr = cfg.require_pyramid();
  const long pbw = pbw_variable_count(pyr);
  const long gdim = gamma_gkdim(pyr);
  const long rank = shift_group_rank(pyr);
  try {
    const auto gk = gk_parameters(pyr);
    rep.result["k"] = gk.k;
    rep.result["m"] = gk.m;
    rep.text.push_back("k = " + std::to_string(gk.k) + ", m = " + std::to_string(gk.m));
    rep.checks.push_back(make_check("gk_row_column_formulas", true));
  } catch (const InvariantViolation& ex) {
    rep.checks.push_back(make_check("gk_row_column_formulas", false, ex.what()));
  }
  rep.result["pbw_variables"] = pbw;
  rep.result["gamma_gkdim"] = gdim;
  rep.result["shift_rank"] = rank;
  rep.text.push_back("PBW variables " + std::to_string(pbw) + ", gkdim Gamma " + std::to_string(gdim) +
                     ", rank of shift group " + std::to_string(rank));
  try {
    const long d = gk_dimension(pyr);
    rep.result["gk_dimension"] = d;
    rep.checks.push_back(make_check("gk_dimension_count", d == pbw && d == gdim + rank,
                                    std::to_string(d) + " vs " + std::to_string(gdim) + " + " + std::to_string(rank)));
  } catch (const InvariantViolation& ex) {
    rep.checks.push_back(make_check("gk_dimension_count", false, ex.what()));
  }
}

void cmd_dim(const JobConfig& cfg, Report& rep) {
  const Pyramid& pyr = cfg.require_pyramid();
  const HighestWeight w = cfg.resolved_weight();
  const auto patterns = enumerate_patterns(pyr, w);
  std::string bad;
  for (const auto& mu : patterns) {
    if (!is_pattern(mu, w)) bad = mu.to_string();
  }
  rep.checks.push_back(make_check("patterns_valid", bad.empty(), bad, static_cast<long>(patterns.size())));
  rep.result["dimension"] = patterns.size();
  rep.text.push_back("dimension " + std::to_string(patterns.size()));
}

void cmd_build(const JobConfig& cfg, Report& rep) {
  const auto r = build_representation(cfg.require_pyramid(), cfg.resolved_weight());
  const auto lines = matrix_dump(r);
  ordered_json dump = ordered_json::array();
  for (const auto& l : lines) dump.push_back(ordered_json::parse(l));
  rep.result["dimension"] = r.dim();
  rep.result["dump"] = std::move(dump);
  rep.text = lines;
}

void cmd_verify(const JobConfig& cfg, Report& rep) {
  const auto r = build_representation(cfg.require_pyramid(), cfg.resolved_weight());
  rep.result["dimension"] = r.dim();
  rep.result["verified_rmax"] = cfg.rmax;
  rep.text.push_back("dimension " + std::to_string(r.dim()) + ", relations through r,s,t <= " + std::to_string(cfg.rmax));
  append(rep.checks, verify_defining_relations(r, cfg.rmax));
}

void cmd_fibers(const JobConfig& cfg, Report& rep) {
  const auto r = build_representation(cfg.require_pyramid(), cfg.resolved_weight());
  append(rep.checks, gamma_checks(r));
  const auto fr = fibers(r);
  ordered_json classes = ordered_json::array();
  for (const auto& c : fr.classes) {
    ordered_json j;
    j["character"] = to_string(c.character);
    j["members"] = c.members;
    classes.push_back(j);
    rep.text.push_back(std::to_string(c.members.size()) + "  " + to_string(c.character));
  }
  rep.result["classes"] = std::move(classes);
  rep.result["largest"] = fr.largest;
  rep.result["bound"] = fr.bound.get_str();
  rep.text.push_back("classes " + std::to_string(fr.classes.size()) + ", largest " + std::to_string(fr.largest) +
                     ", bound " + fr.bound.get_str());
}

void cmd_center(const JobConfig& cfg, Report& rep) {
  const auto r = build_representation(cfg.require_pyramid(), cfg.resolved_weight());
  const auto cr = analyze_center(r, cfg.center_order);
  rep.result["verified_order"] = cr.order;
  rep.result["cdet_scalar"] = cr.cdet_scalar;
  if (cr.cdet_scalar) rep.result["cdet"] = to_string(cr.cdet_value);
  rep.result["A_n"] = to_string(cr.an_value);
  rep.result["cdet_equals_A_n"] = cr.matches_an;
  rep.text.push_back("order " + std::to_string(cr.order));
  if (cr.cdet_scalar) rep.text.push_back("cdet(u) = " + to_string(cr.cdet_value));
  rep.text.push_back("A_n(u) = " + to_string(cr.an_value) + (cr.matches_an ? "  (equal)" : "  (different)"));
  append(rep.checks, cr.checks);
}

void cmd_galois(const JobConfig& cfg, Report& rep) {
  const auto r = build_representation(cfg.require_pyramid(), cfg.resolved_weight());
  ordered_json pts = ordered_json::array();
  for (const auto& p : cfg.points) pts.push_back(to_string(p));
  rep.result["dimension"] = r.dim();
  rep.result["points"] = std::move(pts);
  append(rep.checks, cross_check(r, cfg.points));
}

void cmd_leading(const JobConfig& cfg, Report& rep) {
  const Pyramid& pyr = cfg.require_pyramid();
  const GradedVariables vars(pyr);
  const auto lr = verify_leading_claims(pyr);
  ordered_json rows = ordered_json::array();
  rep.text.push_back("r s  predicted | computed | X(r,s)");
  for (const auto& row : lr.rows) {
    ordered_json j;
    j["r"] = row.r;
    j["s"] = row.s;
    j["predicted"] = vars.describe(row.predicted);
    j["computed"] = vars.describe(row.computed);
    j["distinguished"] = vars.name(row.distinguished);
    rows.push_back(j);
    rep.text.push_back(std::to_string(row.r) + " " + std::to_string(row.s) + "  " + vars.describe(row.predicted) + " | " +
                       vars.describe(row.computed) + " | " + vars.name(row.distinguished));
  }
  rep.result["N"] = lr.weight.N;
  rep.result["table"] = std::move(rows);
  append(rep.checks, lr.checks);
}

std::vector<std::pair<std::string, WeylElement>> demo_operators(int n) {
  WeylElement euler(n);
  WeylElement grad(n);
  WeylElement square(n);
  for (int i = 1; i <= n; ++i) {
    const auto x = WeylElement::x(n, i);
    const auto d = WeylElement::d(n, i);
    euler = euler + x * d;
    grad = grad + d;
    square = square + x * x * d;
  }
  return {{"euler", euler}, {"sum_d", grad}, {"sum_x2_d", square}};
}

void cmd_noether(const JobConfig& cfg, Report& rep) {
  const int n = cfg.noether_n;
  if (n < 1 || n > 3) throw ParseError("noether-demo supports n = 1, 2, 3");
  append(rep.checks, iso_checks(n));
  ordered_json examples = ordered_json::array();
  for (const auto& [name, op] : demo_operators(n)) {
    const auto sig = rewrite_in_sigma(op);
    ordered_json j;
    j["name"] = name;
    j["operator"] = op.to_string();
    j["sigma_form"] = sig.to_string();
    examples.push_back(j);
    rep.text.push_back(name + ": " + op.to_string() + "  =  " + sig.to_string());
    for (auto c : rewrite_checks(op)) {
      c.name = name + "_" + c.name;
      rep.checks.push_back(std::move(c));
    }
  }
  rep.result["n"] = n;
  rep.result["examples"] = std::move(examples);
}

const std::map<std::string, std::function<void(const JobConfig&, Report&)>>& command_table() {
  static const std::map<std::string, std::function<void(const JobConfig&, Report&)>> table{
      {"params", cmd_params},   {"dim", cmd_dim},         {"build", cmd_build},
      {"verify", cmd_verify},   {"fibers", cmd_fibers},   {"center", cmd_center},
      {"galois-check", cmd_galois}, {"leading", cmd_leading}, {"noether-demo", cmd_noether}};
  return table;
}

}  // namespace

const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> names{"params", "dim",     "build",   "verify",      "fibers",
                                              "center", "galois-check", "leading", "noether-demo"};
  return names;
}

ordered_json Report::records() const {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = command;
  j["inputs"] = inputs;
  j["result"] = result.is_null() ? ordered_json::object() : result;
  ordered_json cs = ordered_json::array();
  for (const auto& c : checks) cs.push_back(check_json(c));
  j["checks"] = std::move(cs);
  j["status"] = exit_code() == 0 ? "PASS" : "FAIL";
  return j;
}

ordered_json Report::to_json() const {
  ordered_json j = records();
  j["timing"] = {{"seconds", seconds}};
  return j;
}

Report run(const std::string& command, const JobConfig& config) {
  const auto& table = command_table();
  const auto it = table.find(command);
  if (it == table.end()) throw ParseError("unknown command '" + command + "'");
  Report rep;
  rep.command = command;
  if (config.pyramid) {
    rep.inputs["pyramid"] = to_string(*config.pyramid);
    rep.inputs["rows"] = config.pyramid->rows();
  }
  if (config.weight) rep.inputs["lambda"] = weight_json(*config.weight);
  else rep.inputs["gap"] = config.gap;
  rep.inputs["rmax"] = config.rmax;
  rep.inputs["order"] = config.center_order;
  rep.inputs["n"] = config.noether_n;

  const auto start = std::chrono::steady_clock::now();
  try {
    it->second(config, rep);
  } catch (const InvariantViolation& ex) {
    rep.checks.push_back(make_check("invariant", false, ex.what()));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (command != "build") {
    for (const auto& c : rep.checks) rep.text.push_back(check_line(c));
  }
  return rep;
}

}  // namespace wgt
