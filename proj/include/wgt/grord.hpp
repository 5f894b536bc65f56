#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wgt/arith/mpoly.hpp"
#include "wgt/check.hpp"
#include "wgt/pyramid.hpp"

namespace wgt {

// X_{ij}^k, the graded image of t_ij^(k): i >= j with 1 <= k <= p_j, or
// i < j with p_j - p_i + 1 <= k <= p_j.
struct GradedVariable {
  int i;
  int j;
  int k;
};

// Enumeration of the graded variables; a variable's MPoly id is its position
// (i ascending, then j, then k).  The lex tie-break uses this order.
class GradedVariables {
 public:
  explicit GradedVariables(Pyramid pyr);

  const Pyramid& pyramid() const { return pyr_; }
  int size() const { return static_cast<int>(vars_.size()); }
  const GradedVariable& at(int id) const { return vars_.at(static_cast<std::size_t>(id)); }
  // nullopt when (i, j, k) is outside the admissible ranges.
  std::optional<int> id(int i, int j, int k) const;
  std::string name(int id) const;
  std::string describe(const Monomial& m) const;

 private:
  Pyramid pyr_;
  std::vector<GradedVariable> vars_;
};

struct WeightFunction {
  long long N = 0;      // 2n^2 + 1
  long long P = 0;      // max p + 1
  long long deep = 0;   // N^5, magnitude of the very negative values
  long long shift = 0;  // N^6; w = v + k * shift
  std::vector<long long> v;
  std::vector<long long> w;
  std::vector<CheckRecord> conditions;

  long long weight(const Monomial& m) const;
};

WeightFunction build_weight(const GradedVariables& vars);

// d_rs from the composition / permutation sum, with X^0_ij = delta_ij and
// out-of-range variables read as 0.
MPoly dcoeff_polynomial(int r, int s, const GradedVariables& vars);

// Oracle: coefficient of u^{p_1+...+p_r-s} in det X_r(u), X_ij(u) = sum_k X_ij^k u^{p_j-k},
// by fraction-free (Bareiss) elimination with u as an extra variable.
MPoly dcoeff_by_determinant(int r, int s, const GradedVariables& vars);

// Oracle: the same coefficient of det(X_ij(u - j + 1)) with the terms of
// lower k-degree discarded.
MPoly dcoeff_by_shifted_determinant(int r, int s, const GradedVariables& vars);

// Leading monomial under the weight with lex tie-break.  *strict is cleared
// when another monomial has the same weight.
Monomial weighted_leading_monomial(const MPoly& p, const WeightFunction& w, bool* strict = nullptr);

// y_{r,s} and the distinguished variable X(r,s).
Monomial predicted_leading(int r, int s, const GradedVariables& vars);
int distinguished_variable(int r, int s, const GradedVariables& vars);

struct LeadingRow {
  int r;
  int s;
  Monomial predicted;
  Monomial computed;
  int distinguished;
};

struct LeadingReport {
  WeightFunction weight;
  std::vector<LeadingRow> rows;
  std::vector<CheckRecord> checks;
};

LeadingReport verify_leading_claims(const Pyramid& pyr);

}  // namespace wgt
