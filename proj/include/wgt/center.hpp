#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wgt/check.hpp"
#include "wgt/rep.hpp"

namespace wgt {

// e_ij(u) for i < j and f_ji(u) for i < j, built by the commutator recursion
// from the simple root generators.
struct RootSeries {
  int order = 0;
  std::map<std::pair<int, int>, MatrixSeries> e;  // key (i, j), i < j
  std::map<std::pair<int, int>, MatrixSeries> f;  // key (j, i), j > i

  const MatrixSeries& e_series(int i, int j) const { return e.at({i, j}); }
  const MatrixSeries& f_series(int j, int i) const { return f.at({j, i}); }
};

// Throws OrderError when the generator series are too short for a recursion.
RootSeries higher_root_series(const SeriesGenerators& gens, const Pyramid& pyr);

struct TMatrix {
  int n = 0;
  int verified_order = 0;
  std::vector<MatrixSeries> t;      // t_ij(u), row-major
  std::vector<PolyMatrix> entries;  // T_ij(u) = u^{p_j} t_ij(u), row-major

  const MatrixSeries& t_series(int i, int j) const { return t.at(static_cast<std::size_t>((i - 1) * n + (j - 1))); }
  const PolyMatrix& at(int i, int j) const { return entries.at(static_cast<std::size_t>((i - 1) * n + (j - 1))); }
};

// t_ij(u) = sum_{k <= min(i,j)} f_ik(u) d_k(u) e_kj(u) with e_kk = f_kk = 1.
// Coefficients past u^-{p_j} must vanish through the series order
// (InvariantViolation otherwise).
TMatrix build_t_matrix(const SeriesGenerators& gens, const RootSeries& roots, const Pyramid& pyr);

// sum_sigma sgn(sigma) T_{sigma(1)1}(u) T_{sigma(2)2}(u-1) ... T_{sigma(n)n}(u-n+1),
// multiplied in the written column order.
PolyMatrix column_determinant(const TMatrix& T);

// d_s = coefficient of u^{total - s}, s = 1..total.
std::vector<SparseMatrix> central_coefficients(const PolyMatrix& cdet, int total);

// n = 2 only: T11(u+1)T22(u) - T21(u+1)T12(u) assembled straight from the
// t-coefficients.
PolyMatrix d2_polynomial(const TMatrix& T, const Pyramid& pyr);

struct CenterReport {
  int order = 0;
  PolyMatrix cdet{SparseMatrix()};
  bool cdet_scalar = false;
  ScalarPoly cdet_value{Scalar(0)};  // valid when cdet_scalar
  ScalarPoly an_value{Scalar(0)};    // the scalar by which A_n(u) acts
  bool matches_an = false;
  std::vector<CheckRecord> checks;
};

// Default order 2 max(p) + 2 when order <= 0.
CenterReport analyze_center(const Representation& rep, int order = 0);

}  // namespace wgt
