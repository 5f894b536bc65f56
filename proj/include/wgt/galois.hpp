#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "wgt/arith/mrat.hpp"
#include "wgt/arith/sparse_matrix.hpp"
#include "wgt/check.hpp"
#include "wgt/patterns.hpp"
#include "wgt/rep.hpp"

namespace wgt {

// Variable numbering for the rational functions: u is variable 0, and
// x_{ri}^k is variable 1 + (flat pattern-slot index of (r, i, k)).
class GaloisVars {
 public:
  explicit GaloisVars(Pyramid pyr) : layout_(std::make_shared<const PatternLayout>(std::move(pyr))) {}

  static constexpr int u = 0;
  const PatternLayout& layout() const { return *layout_; }
  const Pyramid& pyramid() const { return layout_->pyramid(); }
  int x(int r, int i, int k) const { return 1 + static_cast<int>(layout_->index(r, i, k)); }
  std::size_t slot_of(int var) const { return static_cast<std::size_t>(var - 1); }
  std::string name(int var) const;

 private:
  std::shared_ptr<const PatternLayout> layout_;
};

// Element of the free abelian group on the delta_{ri}^k, stored as an
// exponent per pattern slot (top-row slots stay zero).
using ShiftMonomial = std::vector<int>;

ShiftMonomial unit_shift(const GaloisVars& vars, int r, int i, int k, int exponent = 1);

// Finite sum of (rational function) x (shift).  Zero coefficients are pruned.
class SkewElement {
 public:
  using TermMap = std::map<ShiftMonomial, MRat>;

  SkewElement() = default;
  static SkewElement term(ShiftMonomial shift, MRat coeff);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const MRat* coeff(const ShiftMonomial& m) const;
  void add(const ShiftMonomial& m, const MRat& c);

  friend SkewElement operator+(SkewElement a, const SkewElement& b);
  friend bool operator==(const SkewElement& a, const SkewElement& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

// Skew product (a m)(b n) = a b^m (mn), where b^m shifts x_{ri}^k by m_{ri}^k.
SkewElement skew_multiply(const SkewElement& x, const SkewElement& y);

// MRat with x_{ri}^k replaced by x_{ri}^k + m_{ri}^k.
MRat shift_coefficient(const MRat& a, const ShiftMonomial& m);

// Product of symmetric groups on the row blocks of x-variables, given by
// generators (adjacent transpositions within each row block).
class PermGroupG {
 public:
  // A generator as a permutation of pattern slots.
  using Perm = std::vector<std::size_t>;

  explicit PermGroupG(const GaloisVars& vars);
  PermGroupG(const GaloisVars& vars, std::vector<Perm> generators) : vars_(&vars), gens_(std::move(generators)) {}

  const std::vector<Perm>& generators() const { return gens_; }
  const GaloisVars& vars() const { return *vars_; }

  MRat act(const Perm& g, const MRat& a) const;
  ShiftMonomial act(const Perm& g, const ShiftMonomial& m) const;
  SkewElement act(const Perm& g, const SkewElement& x) const;

 private:
  const GaloisVars* vars_;
  std::vector<Perm> gens_;
};

// [a phi]: sum of a^g phi^g over the orbit of phi (one term per coset of the
// stabilizer), found by breadth-first search over the generators.
SkewElement orbit_sum(const MRat& a, const ShiftMonomial& phi, const PermGroupG& group);

// x_{m^g} = (x_m)^g for every generator g.
bool check_invariance(const SkewElement& x, const PermGroupG& group);

enum class ImageKind { A, B, C };

// X^+_{rsj}[u] and X^-_{rsj}[u] for the slot (r, j, s).
MRat x_plus(const GaloisVars& vars, int r, int s, int j);
MRat x_minus(const GaloisVars& vars, int r, int s, int j);

// Images of A_r(u), B_r(u), C_r(u) with u carried as variable 0.
SkewElement t_image(ImageKind kind, int r, const GaloisVars& vars);

// Evaluates every coefficient at x = l(mu), u = u0, and sends column mu to row
// mu + m (dropped when mu + m is not a pattern).  A vanishing denominator
// raises EvaluationError.
SparseMatrix act_on_basis(const SkewElement& x, const PatternBasis& basis, const Scalar& u0);

// Image formulas against the representation matrices at every sample point,
// plus invariance, orbit-sum form and support checks.
std::vector<CheckRecord> cross_check(const Representation& rep, const std::vector<Scalar>& points);

}  // namespace wgt
