#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wgt/cli.hpp"
#include "wgt/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Gelfand-Tsetlin representations of type A finite W-algebras"};
  std::string command;
  std::string config_path;
  std::string pyramid;
  std::string lambda;
  std::string points;
  std::string out;
  int rmax = -1;
  int gap = 0;
  int n = 0;
  bool json = false;
  app.add_option("command", command, "params | dim | build | verify | fibers | center | galois-check | leading | noether-demo")
      ->required()
      ->check(CLI::IsMember(wgt::cli_commands()));
  app.add_option("--config", config_path, "job file");
  app.add_option("--pyramid", pyramid, "pyramid literal, e.g. \"rows: 1 2 2\"");
  app.add_option("--lambda", lambda, "highest weight roots, rows separated by ';'");
  app.add_option("--gap", gap, "gap of the generic weight recipe");
  app.add_option("--rmax", rmax, "relation truncation R");
  app.add_option("--points", points, "comma-separated sample points");
  app.add_option("--n", n, "rank for noether-demo");
  app.add_option("--out", out, "write the JSON report here");
  app.add_flag("--json", json, "print the JSON report instead of text");
  CLI11_PARSE(app, argc, argv);

  wgt::Report report;
  try {
    wgt::JobConfig cfg = config_path.empty() ? wgt::JobConfig{} : wgt::load_config(config_path);
    if (!pyramid.empty()) cfg.pyramid = wgt::parse_pyramid_literal(pyramid);
    if (!lambda.empty()) cfg.weight = wgt::parse_lambda_literal(lambda);
    if (gap != 0) cfg.gap = gap;
    if (rmax >= 0) cfg.rmax = rmax;
    if (!points.empty()) cfg.points = wgt::parse_scalar_list(points);
    if (n != 0) cfg.noether_n = n;
    report = wgt::run(command, cfg);
  } catch (const wgt::InvariantViolation& ex) {
    std::cerr << ex.what() << "\n";
    return 1;
  } catch (const wgt::Error& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return 2;
  }

  if (json) {
    std::cout << report.to_json().dump(2) << "\n";
  } else {
    for (const auto& line : report.text) std::cout << line << "\n";
  }
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << report.to_json().dump(2) << "\n";
  }
  return report.exit_code();
}
