#include "wgt/center.hpp"

#include <algorithm>
#include <numeric>

#include "wgt/errors.hpp"

namespace wgt {

RootSeries higher_root_series(const SeriesGenerators& gens, const Pyramid& pyr) {
  RootSeries out;
  out.order = gens.order;
  const int n = gens.n;
  const SparseMatrix zero = gens.d.front().zero();
  for (int i = 1; i < n; ++i) {
    out.e.emplace(std::make_pair(i, i + 1), gens.e.at(static_cast<std::size_t>(i - 1)));
    out.f.emplace(std::make_pair(i + 1, i), gens.f.at(static_cast<std::size_t>(i - 1)));
  }
  for (int gap = 2; gap < n; ++gap) {
    for (int i = 1; i + gap <= n; ++i) {
      const int j = i + gap;
      const int shift = pyr.p(j) - pyr.p(j - 1);
      const SparseMatrix& simple = gens.e_at(j - 1, shift + 1);
      const MatrixSeries& prev = out.e_series(i, j - 1);
      MatrixSeries e(zero, gens.order);
      for (int r = pyr.p(j) - pyr.p(i) + 1; r <= gens.order; ++r) e.coeff(r) = commutator(prev.coeff(r - shift), simple);
      out.e.emplace(std::make_pair(i, j), std::move(e));

      const SparseMatrix& f1 = gens.f_at(j - 1, 1);
      const MatrixSeries& fprev = out.f_series(j - 1, i);
      MatrixSeries f(zero, gens.order);
      for (int r = 1; r <= gens.order; ++r) f.coeff(r) = commutator(f1, fprev.coeff(r));
      out.f.emplace(std::make_pair(j, i), std::move(f));
    }
  }
  return out;
}

TMatrix build_t_matrix(const SeriesGenerators& gens, const RootSeries& roots, const Pyramid& pyr) {
  const int n = gens.n;
  const SparseMatrix zero = gens.d.front().zero();
  const MatrixSeries one = MatrixSeries::constant(SparseMatrix::identity(zero.size()), gens.order);
  auto e_of = [&](int k, int j) -> const MatrixSeries& { return k == j ? one : roots.e_series(k, j); };
  auto f_of = [&](int i, int k) -> const MatrixSeries& { return i == k ? one : roots.f_series(i, k); };

  TMatrix T;
  T.n = n;
  T.verified_order = gens.order;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      MatrixSeries t(zero, gens.order);
      for (int k = 1; k <= std::min(i, j); ++k) {
        t = t + f_of(i, k) * gens.d.at(static_cast<std::size_t>(k - 1)) * e_of(k, j);
      }
      const int pj = pyr.p(j);
      for (int r = pj + 1; r <= gens.order; ++r) {
        if (!t.coeff(r).is_zero()) {
          throw InvariantViolation("t_" + std::to_string(i) + std::to_string(j) + "^(" + std::to_string(r) +
                                   ") is nonzero past degree p_" + std::to_string(j));
        }
      }
      PolyMatrix poly(zero);
      for (int r = 0; r <= std::min(pj, gens.order); ++r) poly.set_coeff(pj - r, t.coeff(r));
      T.t.push_back(std::move(t));
      T.entries.push_back(std::move(poly));
    }
  }
  return T;
}

PolyMatrix column_determinant(const TMatrix& T) {
  const int n = T.n;
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<std::vector<PolyMatrix>> shifted(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) shifted[static_cast<std::size_t>(i - 1)].push_back(T.at(i, j).shift(Scalar(1 - j)));
  }
  PolyMatrix out(T.at(1, 1).zero());
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) inversions += sigma[static_cast<std::size_t>(a)] > sigma[static_cast<std::size_t>(b)];
    }
    PolyMatrix term = shifted[static_cast<std::size_t>(sigma[0] - 1)][0];
    for (int j = 2; j <= n; ++j) {
      term = term * shifted[static_cast<std::size_t>(sigma[static_cast<std::size_t>(j - 1)] - 1)][static_cast<std::size_t>(j - 1)];
    }
    if (inversions % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<SparseMatrix> central_coefficients(const PolyMatrix& cdet, int total) {
  std::vector<SparseMatrix> out;
  for (int s = 1; s <= total; ++s) out.push_back(cdet.coeff(total - s));
  return out;
}

PolyMatrix d2_polynomial(const TMatrix& T, const Pyramid& pyr) {
  if (T.n != 2) throw ArityError("d2_polynomial needs n = 2");
  const int p1 = pyr.p(1);
  const int p2 = pyr.p(2);
  const int s = p2 - p1;
  const SparseMatrix zero = T.t_series(1, 1).zero();
  PolyMatrix t11(zero), t22(zero), t21(zero), t12(zero);
  for (int i = 0; i <= p1; ++i) t11 += PolyMatrix::monomial(T.t_series(1, 1).coeff(i), p1 - i);
  for (int i = 0; i <= p2; ++i) t22 += PolyMatrix::monomial(T.t_series(2, 2).coeff(i), p2 - i);
  for (int i = 1; i <= p1; ++i) t21 += PolyMatrix::monomial(T.t_series(2, 1).coeff(i), p1 - i);
  for (int i = 1; i <= p1; ++i) t12 += PolyMatrix::monomial(T.t_series(1, 2).coeff(s + i), p1 - i);
  return t11.shift(Scalar(1)) * t22 - t21.shift(Scalar(1)) * t12;
}

namespace {

std::optional<ScalarPoly> as_scalar_poly(const PolyMatrix& p) {
  ScalarPoly out(Scalar(0));
  for (int k = 0; k <= p.degree(); ++k) {
    Scalar c;
    if (!p.coeff(k).is_scalar(&c)) return std::nullopt;
    out.set_coeff(k, c);
  }
  return out;
}

}  // namespace

CenterReport analyze_center(const Representation& rep, int order) {
  const Pyramid& pyr = rep.pyramid();
  if (order <= 0) order = 2 * pyr.max_row() + 2;
  CenterReport rp;
  rp.order = order;
  const SeriesGenerators gens = generator_series(rep, order);
  const RootSeries roots = higher_root_series(gens, pyr);

  TMatrix T;
  try {
    T = build_t_matrix(gens, roots, pyr);
    rp.checks.push_back(make_check("t_polynomial", true, {}, static_cast<long>(pyr.n() * pyr.n())));
  } catch (const InvariantViolation& ex) {
    rp.checks.push_back(make_check("t_polynomial", false, ex.what()));
    return rp;
  }
  rp.checks.back().detail = "verified through u^-" + std::to_string(order);

  {
    std::string witness;
    for (int i = 1; i <= pyr.n() && witness.empty(); ++i) {
      const SparseMatrix want = SparseMatrix::identity(rep.dim());
      if (!(T.t_series(i, i).coeff(0) == want)) witness = "t_" + std::to_string(i) + std::to_string(i) + "^(0) != 1";
      for (int j = 1; j <= pyr.n() && witness.empty(); ++j) {
        if (i != j && !T.t_series(i, j).coeff(0).is_zero()) {
          witness = "t_" + std::to_string(i) + std::to_string(j) + "^(0) != 0";
        }
      }
    }
    rp.checks.push_back(make_check("t_leading", witness.empty(), witness, pyr.n()));
  }

  rp.cdet = column_determinant(T);
  const int total = pyr.total();
  const auto ds = central_coefficients(rp.cdet, total);
  {
    std::string witness;
    if (!(rp.cdet.coeff(total) == SparseMatrix::identity(rep.dim())) || rp.cdet.degree() != total) {
      witness = "cdet is not monic of degree " + std::to_string(total);
    }
    for (int s = 1; s <= total && witness.empty(); ++s) {
      if (!ds[static_cast<std::size_t>(s - 1)].is_scalar()) witness = "d_" + std::to_string(s) + " is not scalar";
    }
    rp.checks.push_back(make_check("center_scalar", witness.empty(), witness, total));
  }
  {
    std::vector<std::pair<std::string, const SparseMatrix*>> gens_list;
    for (int i = 1; i <= gens.n; ++i) {
      for (int r = 1; r <= order; ++r) gens_list.emplace_back("d_" + std::to_string(i) + "^(" + std::to_string(r) + ")", &gens.d_at(i, r));
    }
    for (int i = 1; i < gens.n; ++i) {
      for (int r = gens.e_first(i); r <= order; ++r) gens_list.emplace_back("e_" + std::to_string(i) + "^(" + std::to_string(r) + ")", &gens.e_at(i, r));
      for (int r = 1; r <= order; ++r) gens_list.emplace_back("f_" + std::to_string(i) + "^(" + std::to_string(r) + ")", &gens.f_at(i, r));
    }
    std::string witness;
    long pairs = 0;
    for (int s = 1; s <= total && witness.empty(); ++s) {
      for (const auto& [name, m] : gens_list) {
        ++pairs;
        if (!commutator(ds[static_cast<std::size_t>(s - 1)], *m).is_zero()) {
          witness = "d_" + std::to_string(s) + " does not commute with " + name;
          break;
        }
      }
    }
    auto rec = make_check("center_commutes", witness.empty(), witness, pairs);
    rec.detail = "generators through order " + std::to_string(order);
    rp.checks.push_back(std::move(rec));
  }
  if (pyr.n() == 2) {
    const PolyMatrix d2 = d2_polynomial(T, pyr);
    const PolyMatrix lhs = rp.cdet.shift(Scalar(1));
    std::string witness;
    for (int k = 0; k <= std::max(lhs.degree(), d2.degree()); ++k) {
      if (const auto diff = first_difference(lhs.coeff(k), d2.coeff(k))) {
        witness = "u^" + std::to_string(k) + ": " + diff->describe();
        break;
      }
    }
    rp.checks.push_back(make_check("cdet_matches_d2", witness.empty(), witness, lhs.degree() + 1));
  }

  const auto an = as_scalar_poly(rep.A_poly(rep.n()));
  const auto cd = as_scalar_poly(rp.cdet);
  rp.cdet_scalar = cd.has_value();
  if (cd) rp.cdet_value = *cd;
  if (an) rp.an_value = *an;
  rp.matches_an = cd && an && *cd == *an;
  return rp;
}

}  // namespace wgt
