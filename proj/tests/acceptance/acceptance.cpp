// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <string>

#include <json.hpp>

#include "wgt/center.hpp"
#include "wgt/cli.hpp"
#include "wgt/errors.hpp"
#include "wgt/galois.hpp"
#include "wgt/gamma.hpp"
#include "wgt/grord.hpp"
#include "wgt/noether.hpp"
#include "wgt/rep.hpp"

using namespace wgt;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

const std::vector<std::vector<int>> kReference{{1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 2}};

std::vector<Representation> reference_reps() {
  std::vector<Representation> out;
  for (const auto& rows : kReference) {
    const auto pyr = Pyramid::from_rows(rows);
    out.push_back(build_representation(pyr, generic_weight(pyr)));
  }
  return out;
}

void require_no_fail(Outcome& o, const std::string& where, const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    if (c.status == Status::Fail) o.fail(where + " " + c.name + ": " + c.witness);
  }
}

void require_all_pass(Outcome& o, const std::string& where, const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    if (c.status != Status::Pass) o.fail(where + " " + c.name + " is " + to_string(c.status) + " " + c.witness);
  }
}

// 1. Relations at R = 6, quotient condition included.
Outcome relations(const std::vector<Representation>& reps) {
  Outcome o;
  long instances = 0;
  for (const auto& rep : reps) {
    const auto checks = verify_defining_relations(rep, 6);
    require_no_fail(o, to_string(rep.pyramid()), checks);
    bool quotient = false;
    for (const auto& c : checks) {
      instances += c.instances;
      quotient = quotient || (c.name == "quotient_d1" && c.status == Status::Pass);
    }
    if (!quotient) o.fail(to_string(rep.pyramid()) + " quotient_d1 missing");
  }
  if (o.ok) o.note = std::to_string(instances) + " relation instances";
  return o;
}

Scalar weyl_dimension(const std::vector<Scalar>& lambda) {
  Scalar d(1);
  for (std::size_t a = 0; a < lambda.size(); ++a) {
    for (std::size_t b = a + 1; b < lambda.size(); ++b) {
      d *= (lambda[a] - lambda[b] + Scalar(static_cast<long>(b - a))) / Scalar(static_cast<long>(b - a));
    }
  }
  return d;
}

// 2. gl_n pattern counts against the Weyl product.
Outcome dimensions() {
  Outcome o;
  auto count = [](const std::vector<Scalar>& top) {
    HighestWeight w;
    for (const auto& x : top) w.roots.push_back({x});
    return static_cast<long>(enumerate_patterns(Pyramid::from_rows(std::vector<int>(top.size(), 1)), w).size());
  };
  if (count({Scalar(2), Scalar(1), Scalar(0)}) != 8) o.fail("gl3 (2;1;0) is not 8");
  if (count({Scalar(5, 2), Scalar(1, 2)}) != 3) o.fail("gl2 (5/2;1/2) is not 3");
  std::mt19937_64 eng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 4)(eng);
    std::vector<Scalar> top(static_cast<std::size_t>(n));
    Scalar cur(std::uniform_int_distribution<int>(-3, 3)(eng), 2);
    for (int i = n - 1; i >= 0; --i) {
      top[static_cast<std::size_t>(i)] = cur;
      cur += std::uniform_int_distribution<int>(0, 3)(eng);
    }
    if (Scalar(count(top)) != weyl_dimension(top)) o.fail("Weyl formula mismatch at n=" + std::to_string(n));
  }
  return o;
}

// 3. Row and column formulas on random unimodal pyramids, and the figure pyramid.
Outcome gk_arithmetic() {
  Outcome o;
  const auto fig = gk_parameters(Pyramid::from_columns({1, 3, 4, 2, 1}));
  if (fig.k != 10 || fig.m != 11) o.fail("figure pyramid gives (" + std::to_string(fig.k) + "," + std::to_string(fig.m) + ")");
  std::mt19937_64 eng(3);
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); };
  for (int trial = 0; trial < 100; ++trial) {
    const int len = uni(1, 7);
    const int peak = uni(0, len - 1);
    std::vector<int> cols(static_cast<std::size_t>(len));
    int h = 1;
    for (int c = 0; c < len; ++c) {
      h = c <= peak ? uni(h, 5) : uni(1, h);
      cols[static_cast<std::size_t>(c)] = h;
    }
    long k_boxes = 0;
    long m_boxes = 0;
    for (int q : cols) {
      k_boxes += static_cast<long>(q) * (q - 1) / 2;
      m_boxes += q;
    }
    try {
      const auto gk = gk_parameters(Pyramid::from_columns(cols));
      if (gk.k != k_boxes || gk.m != m_boxes) o.fail("mismatch on a random pyramid");
    } catch (const InvariantViolation& ex) {
      o.fail(ex.what());
    }
  }
  if (o.ok) o.note = "100 random pyramids, figure (10,11)";
  return o;
}

// 4. GK dimension bookkeeping.
Outcome gk_count() {
  Outcome o;
  for (const auto& rows : kReference) {
    const auto pyr = Pyramid::from_rows(rows);
    const long d = gk_dimension(pyr);
    if (d != pbw_variable_count(pyr) || d != gamma_gkdim(pyr) + shift_group_rank(pyr)) {
      o.fail(to_string(pyr) + ": " + std::to_string(d));
    }
  }
  return o;
}

// 5. Gamma: commutation, iota, singleton fibers, bound.
Outcome gamma_structure(const std::vector<Representation>& reps) {
  Outcome o;
  for (const auto& rep : reps) require_all_pass(o, to_string(rep.pyramid()), gamma_checks(rep));
  return o;
}

// 6. Central coefficients.
Outcome centrality(const std::vector<Representation>& reps) {
  Outcome o;
  int n2 = 0;
  for (const auto& rep : reps) {
    const auto cr = analyze_center(rep);
    if (!cr.cdet_scalar) o.fail(to_string(rep.pyramid()) + ": cdet not scalar");
    require_all_pass(o, to_string(rep.pyramid()), cr.checks);
    for (const auto& c : cr.checks) n2 += c.name == "cdet_matches_d2" && c.status == Status::Pass;
  }
  if (n2 != 3) o.fail("D2 cross-check ran on " + std::to_string(n2) + " of the 3 two-row shapes");
  return o;
}

// 7. Galois images against the matrices; all sample points are off the nodes.
Outcome galois(const std::vector<Representation>& reps) {
  Outcome o;
  const std::vector<Scalar> points{Scalar(0), Scalar(7), Scalar(-3), Scalar(2, 7), Scalar(11, 5)};
  long off_node = 0;
  for (const auto& rep : reps) {
    std::set<Scalar> nodes;
    for (const auto& mu : rep.basis.patterns()) {
      for (int r = 1; r <= rep.n(); ++r) {
        for (const auto& l : mu.row_l_values(r)) nodes.insert(-l);
      }
    }
    for (const auto& p : points) off_node += nodes.count(p) == 0;
    require_all_pass(o, to_string(rep.pyramid()), cross_check(rep, points));
  }
  if (off_node == 0) o.fail("no sample point avoids the interpolation nodes");
  if (o.ok) o.note = std::to_string(points.size()) + " points per family, " + std::to_string(off_node) + " off-node evaluations";
  return o;
}

// 8. Leading monomials.
Outcome leading() {
  Outcome o;
  for (const auto& rows : std::vector<std::vector<int>>{{1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 2}}) {
    const auto pyr = Pyramid::from_rows(rows);
    require_all_pass(o, to_string(pyr), verify_leading_claims(pyr).checks);
  }
  return o;
}

// 9. Shift algebra isomorphism and symmetric rewriting.
Outcome noether() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) require_all_pass(o, "n=" + std::to_string(n), iso_checks(n));
  for (int n = 2; n <= 3; ++n) {
    WeylElement euler(n), grad(n), square(n);
    for (int i = 1; i <= n; ++i) {
      const auto x = WeylElement::x(n, i);
      const auto d = WeylElement::d(n, i);
      euler = euler + x * d;
      grad = grad + d;
      square = square + x * x * d;
    }
    for (const auto& op : {euler, grad, square}) {
      if (!(sigma_to_x(rewrite_in_sigma(op)) == op)) o.fail("round trip fails for " + op.to_string());
      require_all_pass(o, "n=" + std::to_string(n), rewrite_checks(op));
    }
  }
  return o;
}

std::string capture(const std::string& cmd) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("popen failed: " + cmd);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  return out;
}

// 10. Two runs of every CLI command give identical records.
Outcome determinism() {
  Outcome o;
  const std::string tool = WGTOOL_PATH;
  const std::string cfg = std::string(CONFIG_DIR) + "/rows_122.cfg";
  for (const auto& cmd : cli_commands()) {
    const std::string line = tool + " " + cmd + " --json --config " + cfg + " --rmax 4 2>&1";
    std::string first;
    for (int rep = 0; rep < 3; ++rep) {
      std::string text = capture(line);
      nlohmann::ordered_json j;
      try {
        j = nlohmann::ordered_json::parse(text);
      } catch (const std::exception&) {
        o.fail(cmd + " printed something that is not JSON: " + text.substr(0, 80));
        break;
      }
      j.erase("timing");
      text = j.dump();
      if (rep == 0) first = text;
      else if (text != first) o.fail(cmd + " differs between runs");
    }
  }
  if (o.ok) o.note = std::to_string(cli_commands().size()) + " commands, 3 runs each";
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Representation> reps;
  try {
    reps = reference_reps();
  } catch (const std::exception& ex) {
    std::cout << "could not build the reference modules: " << ex.what() << "\n";
    return 1;
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"relation suite", [&] { return relations(reps); }},
      {"dimension oracle", dimensions},
      {"gk arithmetic", gk_arithmetic},
      {"gk dimension count", gk_count},
      {"gamma structure", [&] { return gamma_structure(reps); }},
      {"centrality", [&] { return centrality(reps); }},
      {"galois cross-check", [&] { return galois(reps); }},
      {"leading monomials", leading},
      {"noether fragment", noether},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!o.note.empty()) std::cout << "  (" << o.note << ")";
    std::cout << std::endl;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass in "
            << secs << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
