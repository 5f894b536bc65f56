#include "wgt/rep.hpp"

#include <functional>
#include <optional>

#include "json.hpp"
#include "wgt/errors.hpp"

namespace wgt {

Scalar b_node_value(const GTPattern& mu, int r, int i, int k) {
  const Pyramid& pyr = mu.layout().pyramid();
  const Scalar l = mu.l_value(r, i, k);
  Scalar v = -1;
  for (int a = 1; a <= r + 1; ++a) {
    for (int m = 1; m <= pyr.p(a); ++m) v *= mu.l_value(r + 1, a, m) - l;
  }
  return v;
}

Scalar c_node_value(const GTPattern& mu, int r, int i, int k) {
  const Pyramid& pyr = mu.layout().pyramid();
  const Scalar l = mu.l_value(r, i, k);
  Scalar v = 1;
  for (int a = 1; a <= r - 1; ++a) {
    for (int m = 1; m <= pyr.p(a); ++m) v *= mu.l_value(r - 1, a, m) - l;
  }
  return v;
}

namespace {

PolyMatrix from_coeffs(std::size_t dim, std::vector<SparseMatrix> coeffs) {
  return PolyMatrix(SparseMatrix(dim), std::move(coeffs));
}

// Column-wise interpolation of B_r (direction +1) or C_r (direction -1).
PolyMatrix raising_lowering(const PatternBasis& basis, int r, int direction) {
  const std::size_t dim = basis.size();
  const int degree_bound = basis.pyramid().prefix(r) - 1;
  std::vector<SparseMatrix> coeffs(static_cast<std::size_t>(degree_bound) + 1, SparseMatrix(dim));
  const auto& row = basis.layout().row(r);
  for (std::size_t col = 0; col < dim; ++col) {
    const GTPattern& mu = basis[col];
    std::vector<Scalar> nodes;
    for (const Scalar& l : mu.row_l_values(r)) nodes.push_back(-l);
    const auto lagrange = lagrange_basis(nodes);
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto& s = basis.layout().slots()[row[j]];
      const auto shifted = shift_pattern(mu, s.r, s.i, s.k, direction);
      if (!shifted) continue;
      const auto target = basis.find(*shifted);
      if (!target) throw InvariantViolation("shifted pattern missing from the basis: " + shifted->to_string());
      const Scalar value = direction > 0 ? b_node_value(mu, s.r, s.i, s.k) : c_node_value(mu, s.r, s.i, s.k);
      if (sgn(value) == 0) continue;
      for (int p = 0; p <= lagrange[j].degree(); ++p) {
        coeffs[static_cast<std::size_t>(p)].add_to(*target, col, value * lagrange[j].coeff(p));
      }
    }
  }
  return from_coeffs(dim, std::move(coeffs));
}

}  // namespace

Representation build_representation(const Pyramid& pyr, const HighestWeight& weight) {
  Representation rep{PatternBasis(pyr, weight), {}, {}, {}};
  const std::size_t dim = rep.basis.size();
  for (int r = 1; r <= pyr.n(); ++r) {
    std::vector<SparseMatrix> coeffs(static_cast<std::size_t>(pyr.prefix(r)) + 1, SparseMatrix(dim));
    for (std::size_t col = 0; col < dim; ++col) {
      std::vector<Scalar> roots;
      for (const Scalar& l : rep.basis[col].row_l_values(r)) roots.push_back(-l);
      const ScalarPoly eig = poly_from_roots(roots);
      for (int p = 0; p <= eig.degree(); ++p) coeffs[static_cast<std::size_t>(p)].add_to(col, col, eig.coeff(p));
    }
    rep.A.push_back(from_coeffs(dim, std::move(coeffs)));
  }
  for (int r = 1; r < pyr.n(); ++r) {
    rep.B.push_back(raising_lowering(rep.basis, r, +1));
    rep.C.push_back(raising_lowering(rep.basis, r, -1));
  }
  return rep;
}

SparseMatrix evaluate(const PolyMatrix& p, const Scalar& u0) { return p.evaluate(u0); }

namespace {

std::vector<RootMultiplicity> a_prefactor(const Pyramid& pyr, int i) {
  std::vector<RootMultiplicity> out;
  for (int a = 1; a <= i; ++a) out.push_back({Scalar(a - 1), pyr.p(a)});
  return out;
}

void require_zero(const SparseMatrix& m, const std::string& what) {
  if (!m.is_zero()) throw InvariantViolation(what + " is nonzero");
}

}  // namespace

MatrixSeries a_series(const Representation& rep, int i, int order) {
  return poly_to_inv_series(rep.A_poly(i), a_prefactor(rep.pyramid(), i), order);
}

SeriesGenerators generator_series(const Representation& rep, int order) {
  if (order < 1) throw OrderError("generator_series needs order >= 1");
  const Pyramid& pyr = rep.pyramid();
  const int n = pyr.n();
  const std::size_t dim = rep.dim();
  const SparseMatrix id = SparseMatrix::identity(dim);

  std::vector<MatrixSeries> a;
  std::vector<MatrixSeries> a_inv;
  a.push_back(MatrixSeries::constant(id, order));
  a_inv.push_back(a.back());
  for (int i = 1; i <= n; ++i) {
    a.push_back(a_series(rep, i, order));
    for (int r = 0; r <= order; ++r) {
      // Gamma-valued, hence diagonal; this is what lets left and right
      // division agree below.
      if (!a.back().coeff(r).is_diagonal()) throw InvariantViolation("a_" + std::to_string(i) + " is not diagonal");
    }
    a_inv.push_back(series_inverse(a.back(), order));
  }

  SeriesGenerators g;
  g.order = order;
  g.n = n;
  for (int i = 1; i <= n; ++i) {
    const auto& ai = a[static_cast<std::size_t>(i)];
    MatrixSeries d = (a_inv[static_cast<std::size_t>(i - 1)] * ai).shift_argument(Scalar(i - 1));
    if (!(d.coeff(0) == id)) throw InvariantViolation("d_" + std::to_string(i) + "^(0) is not the identity");
    MatrixSeries dp = series_inverse(d, order);
    const MatrixSeries check = d * dp;
    for (int r = 1; r <= order; ++r) require_zero(check.coeff(r), "sum_t d d' at r=" + std::to_string(r));
    g.d.push_back(std::move(d));
    g.dprime.push_back(std::move(dp));
  }
  for (int r = pyr.p(1) + 1; r <= order; ++r) require_zero(g.d_at(1, r), "d_1^(" + std::to_string(r) + ")");

  for (int i = 1; i < n; ++i) {
    const auto& ai_inv = a_inv[static_cast<std::size_t>(i)];
    std::vector<RootMultiplicity> pre_b;
    for (int a2 = 1; a2 < i; ++a2) pre_b.push_back({Scalar(a2 - 1), pyr.p(a2)});
    pre_b.push_back({Scalar(i - 1), pyr.p(i + 1)});
    const MatrixSeries b = poly_to_inv_series(rep.B_poly(i), pre_b, order);
    MatrixSeries e = (ai_inv * b).shift_argument(Scalar(i - 1));
    const int start = pyr.p(i + 1) - pyr.p(i) + 1;
    for (int r = 0; r < start && r <= order; ++r) {
      require_zero(e.coeff(r), "e_" + std::to_string(i) + "^(" + std::to_string(r) + ")");
    }

    const MatrixSeries c = poly_to_inv_series(rep.C_poly(i), a_prefactor(pyr, i), order);
    MatrixSeries f = (c * ai_inv).shift_argument(Scalar(i - 1));
    require_zero(f.coeff(0), "f_" + std::to_string(i) + "^(0)");

    g.e.push_back(std::move(e));
    g.f.push_back(std::move(f));
    g.e_start.push_back(start);
  }
  return g;
}

// ---------------------------------------------------------------- relations

namespace {

struct Instance {
  int i = 0;
  int j = 0;
  int r = 0;
  int s = 0;
  int t = 0;
};

using Evaluator = std::function<std::pair<SparseMatrix, SparseMatrix>(const Instance&)>;

std::string describe_instance(const Instance& x, const std::string& fields) {
  std::string out;
  for (char c : fields) {
    int v = 0;
    switch (c) {
      case 'i':
        v = x.i;
        break;
      case 'j':
        v = x.j;
        break;
      case 'r':
        v = x.r;
        break;
      case 's':
        v = x.s;
        break;
      case 't':
        v = x.t;
        break;
      default:
        continue;
    }
    if (!out.empty()) out += ' ';
    out += std::string(1, c) + "=" + std::to_string(v);
  }
  return out;
}

CheckRecord run_family(const std::string& name, const std::vector<Instance>& insts, const std::string& fields,
                       const Evaluator& eval) {
  std::vector<std::string> failure(insts.size());
  const long count = static_cast<long>(insts.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    try {
      const auto [lhs, rhs] = eval(insts[static_cast<std::size_t>(k)]);
      if (const auto diff = first_difference(lhs, rhs)) failure[static_cast<std::size_t>(k)] = diff->describe();
    } catch (const std::exception& ex) {
      failure[static_cast<std::size_t>(k)] = std::string("exception: ") + ex.what();
    }
  }
  CheckRecord rec;
  rec.name = name;
  rec.instances = count;
  long failures = 0;
  for (std::size_t k = 0; k < insts.size(); ++k) {
    if (failure[k].empty()) continue;
    if (failures++ == 0) rec.witness = describe_instance(insts[k], fields) + ": " + failure[k];
  }
  rec.status = count == 0 ? Status::Skip : (failures == 0 ? Status::Pass : Status::Fail);
  if (failures > 0) rec.detail = std::to_string(failures) + " of " + std::to_string(count) + " instances fail";
  return rec;
}

}  // namespace

std::vector<CheckRecord> verify_defining_relations(const SeriesGenerators& g, const Pyramid& pyr, int rmax) {
  if (rmax < 1) throw OrderError("relation verification needs rmax >= 1");
  if (g.order < 2 * rmax) {
    throw OrderError("series order " + std::to_string(g.order) + " is below the required " +
                     std::to_string(2 * rmax));
  }
  const int n = g.n;
  const std::size_t dim = g.d.front().coeff(0).size();
  const SparseMatrix zero(dim);
  const SparseMatrix id = SparseMatrix::identity(dim);
  const int R = rmax;
  std::vector<CheckRecord> out;

  {
    std::vector<Instance> v;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int r = 1; r <= R; ++r)
          for (int s = 1; s <= R; ++s) v.push_back({i, j, r, s, 0});
    out.push_back(run_family("dd_commute", v, "ijrs", [&](const Instance& x) {
      return std::make_pair(commutator(g.d_at(x.i, x.r), g.d_at(x.j, x.s)), zero);
    }));
  }
  {
    std::vector<Instance> v;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        for (int r = g.e_first(i); r <= R; ++r)
          for (int s = 1; s <= R; ++s) v.push_back({i, j, r, s, 0});
    out.push_back(run_family("ef", v, "ijrs", [&](const Instance& x) {
      SparseMatrix rhs(dim);
      if (x.i == x.j) {
        for (int t = 0; t <= x.r + x.s - 1; ++t) rhs -= g.dprime_at(x.i, t) * g.d_at(x.i + 1, x.r + x.s - t - 1);
      }
      return std::make_pair(commutator(g.e_at(x.i, x.r), g.f_at(x.j, x.s)), rhs);
    }));
  }
  {
    std::vector<Instance> v;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j < n; ++j)
        for (int r = 1; r <= R; ++r)
          for (int s = g.e_first(j); s <= R; ++s) v.push_back({i, j, r, s, 0});
    out.push_back(run_family("de", v, "ijrs", [&](const Instance& x) {
      const int sign = (x.i == x.j ? 1 : 0) - (x.i == x.j + 1 ? 1 : 0);
      SparseMatrix rhs(dim);
      if (sign != 0) {
        for (int t = 0; t <= x.r - 1; ++t) rhs += g.d_at(x.i, t) * g.e_at(x.j, x.r + x.s - t - 1);
        rhs *= Scalar(sign);
      }
      return std::make_pair(commutator(g.d_at(x.i, x.r), g.e_at(x.j, x.s)), rhs);
    }));
  }
  {
    std::vector<Instance> v;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j < n; ++j)
        for (int r = 1; r <= R; ++r)
          for (int s = 1; s <= R; ++s) v.push_back({i, j, r, s, 0});
    out.push_back(run_family("df", v, "ijrs", [&](const Instance& x) {
      const int sign = (x.i == x.j + 1 ? 1 : 0) - (x.i == x.j ? 1 : 0);
      SparseMatrix rhs(dim);
      if (sign != 0) {
        for (int t = 0; t <= x.r - 1; ++t) rhs += g.f_at(x.j, x.r + x.s - t - 1) * g.d_at(x.i, t);
        rhs *= Scalar(sign);
      }
      return std::make_pair(commutator(g.d_at(x.i, x.r), g.f_at(x.j, x.s)), rhs);
    }));
  }
  {
    std::vector<Instance> v;
    for (int i = 1; i < n; ++i)
      for (int r = g.e_first(i); r <= R; ++r)
        for (int s = g.e_first(i); s <= R; ++s) v.push_back({i, i, r, s, 0});
    out.push_back(run_family("ee_same", v, "irs", [&](const Instance& x) {
      const auto& er = g.e_at(x.i, x.r);
      const auto& es = g.e_at(x.i, x.s);
      SparseMatrix lhs = commutator(er, g.e_at(x.i, x.s + 1)) - commutator(g.e_at(x.i, x.r + 1), es);
      return std::make_pair(std::move(lhs), er * es + es * er);
    }));
  }
  {
    std::vector<Instance> v;
    for (int i = 1; i < n; ++i)
      for (int r = 1; r <= R; ++r)
        for (int s = 1; s <= R; ++s) v.push_back({i, i, r, s, 0});
    out.push_back(run_family("ff_same", v, "irs", [&](const Instance& x) {
      const auto& fr = g.f_at(x.i, x.r);
      const auto& fs = g.f_at(x.i, x.s);
      SparseMatrix lhs = commutator(g.f_at(x.i, x.r + 1), fs) - commutator(fr, g.f_at(x.i, x.s + 1));
      return std::make_pair(std::move(lhs), fr * fs + fs * fr);
    }));
  }
  {
    std::vector<Instance> v;
    for (int i = 1; i + 1 < n; ++i)
      for (int r = g.e_first(i); r <= R; ++r)
        for (int s = g.e_first(i + 1); s <= R; ++s) v.push_back({i, i + 1, r, s, 0});
    out.push_back(run_family("ee_adjacent", v, "irs", [&](const Instance& x) {
      SparseMatrix lhs = commutator(g.e_at(x.i, x.r), g.e_at(x.i + 1, x.s + 1)) -
                         commutator(g.e_at(x.i, x.r + 1), g.e_at(x.i + 1, x.s));
      return std::make_pair(std::move(lhs), -(g.e_at(x.i, x.r) * g.e_at(x.i + 1, x.s)));
    }));
  }
  {
    std::vector<Instance> v;
    for (int i = 1; i + 1 < n; ++i)
      for (int r = 1; r <= R; ++r)
        for (int s = 1; s <= R; ++s) v.push_back({i, i + 1, r, s, 0});
    out.push_back(run_family("ff_adjacent", v, "irs", [&](const Instance& x) {
      SparseMatrix lhs = commutator(g.f_at(x.i, x.r + 1), g.f_at(x.i + 1, x.s)) -
                         commutator(g.f_at(x.i, x.r), g.f_at(x.i + 1, x.s + 1));
      return std::make_pair(std::move(lhs), -(g.f_at(x.i + 1, x.s) * g.f_at(x.i, x.r)));
    }));
  }
  {
    std::vector<Instance> ve;
    std::vector<Instance> vf;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) <= 1) continue;
        for (int r = 1; r <= R; ++r)
          for (int s = 1; s <= R; ++s) {
            vf.push_back({i, j, r, s, 0});
            if (r >= g.e_first(i) && s >= g.e_first(j)) ve.push_back({i, j, r, s, 0});
          }
      }
    out.push_back(run_family("ee_far", ve, "ijrs", [&](const Instance& x) {
      return std::make_pair(commutator(g.e_at(x.i, x.r), g.e_at(x.j, x.s)), zero);
    }));
    out.push_back(run_family("ff_far", vf, "ijrs", [&](const Instance& x) {
      return std::make_pair(commutator(g.f_at(x.i, x.r), g.f_at(x.j, x.s)), zero);
    }));
  }
  {
    std::vector<Instance> ve;
    std::vector<Instance> vf;
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (std::abs(i - j) != 1) continue;
        for (int r = 1; r <= R; ++r)
          for (int s = 1; s <= R; ++s)
            for (int t = 1; t <= R; ++t) {
              vf.push_back({i, j, r, s, t});
              if (r >= g.e_first(i) && s >= g.e_first(i) && t >= g.e_first(j)) ve.push_back({i, j, r, s, t});
            }
      }
    out.push_back(run_family("serre_e", ve, "ijrst", [&](const Instance& x) {
      const auto& er = g.e_at(x.i, x.r);
      const auto& es = g.e_at(x.i, x.s);
      const auto& et = g.e_at(x.j, x.t);
      return std::make_pair(commutator(er, commutator(es, et)) + commutator(es, commutator(er, et)), zero);
    }));
    out.push_back(run_family("serre_f", vf, "ijrst", [&](const Instance& x) {
      const auto& fr = g.f_at(x.i, x.r);
      const auto& fs = g.f_at(x.i, x.s);
      const auto& ft = g.f_at(x.j, x.t);
      return std::make_pair(commutator(fr, commutator(fs, ft)) + commutator(fs, commutator(fr, ft)), zero);
    }));
  }
  {
    std::vector<Instance> v;
    for (int i = 1; i <= n; ++i)
      for (int r = 0; r <= g.order; ++r) v.push_back({i, 0, r, 0, 0});
    out.push_back(run_family("d_inverse", v, "ir", [&](const Instance& x) {
      SparseMatrix lhs(dim);
      for (int t = 0; t <= x.r; ++t) lhs += g.d_at(x.i, t) * g.dprime_at(x.i, x.r - t);
      return std::make_pair(std::move(lhs), x.r == 0 ? id : zero);
    }));
  }
  {
    std::vector<Instance> v;
    for (int r = pyr.p(1) + 1; r <= g.order; ++r) v.push_back({1, 0, r, 0, 0});
    out.push_back(run_family("quotient_d1", v, "r", [&](const Instance& x) {
      return std::make_pair(g.d_at(1, x.r), zero);
    }));
  }
  for (auto& rec : out) rec.detail += (rec.detail.empty() ? "" : "; ") + std::string("rmax=") + std::to_string(R);
  return out;
}

std::vector<CheckRecord> verify_defining_relations(const Representation& rep, int rmax) {
  const auto gens = generator_series(rep, 2 * rmax + 1);
  return verify_defining_relations(gens, rep.pyramid(), rmax);
}

std::vector<std::string> matrix_dump(const Representation& rep) {
  std::vector<std::string> lines;
  auto emit = [&](const char* name, int index, const PolyMatrix& p) {
    nlohmann::ordered_json doc;
    doc["generator"] = name;
    doc["index"] = index;
    doc["degree"] = p.degree();
    auto entries = nlohmann::ordered_json::array();
    for (int power = 0; power <= p.degree(); ++power) {
      const auto& m = p.coeff(power);
      for (std::size_t row = 0; row < m.size(); ++row) {
        for (const auto& e : m.row(row)) {
          entries.push_back(nlohmann::ordered_json::array({row, e.col, to_fraction_string(e.value), power}));
        }
      }
    }
    doc["entries"] = std::move(entries);
    lines.push_back(doc.dump());
  };
  for (int r = 1; r <= rep.n(); ++r) emit("A", r, rep.A_poly(r));
  for (int r = 1; r < rep.n(); ++r) {
    emit("B", r, rep.B_poly(r));
    emit("C", r, rep.C_poly(r));
  }
  return lines;
}

}  // namespace wgt
