#pragma once

#include <string>
#include <vector>

#include "wgt/arith/inv_series.hpp"
#include "wgt/arith/sparse_matrix.hpp"
#include "wgt/arith/unipoly.hpp"
#include "wgt/check.hpp"
#include "wgt/patterns.hpp"

namespace wgt {

// Explicit matrices of A_r(u), B_r(u), C_r(u) on L(lambda(u)) in the pattern
// basis.  Columns are indexed by the basis order; the operators act on the
// left.
struct Representation {
  PatternBasis basis;
  std::vector<PolyMatrix> A;  // r = 1..n
  std::vector<PolyMatrix> B;  // r = 1..n-1
  std::vector<PolyMatrix> C;  // r = 1..n-1

  const Pyramid& pyramid() const { return basis.pyramid(); }
  int n() const { return pyramid().n(); }
  std::size_t dim() const { return basis.size(); }
  const PolyMatrix& A_poly(int r) const { return A.at(static_cast<std::size_t>(r - 1)); }
  const PolyMatrix& B_poly(int r) const { return B.at(static_cast<std::size_t>(r - 1)); }
  const PolyMatrix& C_poly(int r) const { return C.at(static_cast<std::size_t>(r - 1)); }
};

// Value of B_r at the node u = -l_{ri}^(k)(mu): the scalar multiplying
// xi_{mu + delta}.  The C_r analogue multiplies xi_{mu - delta}.
Scalar b_node_value(const GTPattern& mu, int r, int i, int k);
Scalar c_node_value(const GTPattern& mu, int r, int i, int k);

Representation build_representation(const Pyramid& pyr, const HighestWeight& weight);

SparseMatrix evaluate(const PolyMatrix& p, const Scalar& u0);

// Coefficient matrices of d_i(u), d'_i(u) = d_i(u)^-1, e_i(u), f_i(u) through
// the truncation order.  Index i is 1-based.
struct SeriesGenerators {
  int order = 0;
  int n = 0;
  std::vector<MatrixSeries> d;
  std::vector<MatrixSeries> dprime;
  std::vector<MatrixSeries> e;
  std::vector<MatrixSeries> f;
  std::vector<int> e_start;  // p_{i+1} - p_i + 1

  const SparseMatrix& d_at(int i, int r) const { return d.at(static_cast<std::size_t>(i - 1)).coeff(r); }
  const SparseMatrix& dprime_at(int i, int r) const {
    return dprime.at(static_cast<std::size_t>(i - 1)).coeff(r);
  }
  const SparseMatrix& e_at(int i, int r) const { return e.at(static_cast<std::size_t>(i - 1)).coeff(r); }
  const SparseMatrix& f_at(int i, int r) const { return f.at(static_cast<std::size_t>(i - 1)).coeff(r); }
  int e_first(int i) const { return e_start.at(static_cast<std::size_t>(i - 1)); }
};

// a_i(u) = A_i(u) / (u^{p_1} (u-1)^{p_2} ... (u-i+1)^{p_i}) as a series.
MatrixSeries a_series(const Representation& rep, int i, int order);

// Throws InvariantViolation when a coefficient that must vanish does not.
SeriesGenerators generator_series(const Representation& rep, int order);

// Every defining relation family on all admissible index tuples with
// r, s, t <= rmax, plus the quotient condition on d_1.  One record per family.
std::vector<CheckRecord> verify_defining_relations(const Representation& rep, int rmax);
std::vector<CheckRecord> verify_defining_relations(const SeriesGenerators& gens, const Pyramid& pyr, int rmax);

// One JSON line per generator coefficient polynomial (A, B, C), fields
// generator, index, degree, entries [[row, col, "num/den", power], ...].
std::vector<std::string> matrix_dump(const Representation& rep);

}  // namespace wgt
