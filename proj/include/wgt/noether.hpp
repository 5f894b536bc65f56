#pragma once

#include <map>
#include <string>
#include <vector>

#include "wgt/arith/mrat.hpp"
#include "wgt/check.hpp"

namespace wgt {

// Exponents of d_1..d_n.
using DiffIndex = std::vector<int>;

// Normal-ordered differential operator sum_alpha c_alpha(x) d^alpha on x_1..x_n
// (MPoly variables 0..n-1).  Coefficients are rational so that the
// localizations at x_i or at the discriminant fit in the same type.
class WeylElement {
 public:
  explicit WeylElement(int n) : n_(n) {}
  static WeylElement scalar(int n, const MRat& c);
  static WeylElement x(int n, int i);  // 1-based index
  static WeylElement d(int n, int i);
  static WeylElement term(int n, const MRat& c, DiffIndex alpha);

  int n() const { return n_; }
  const std::map<DiffIndex, MRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int order() const;
  void add(const DiffIndex& alpha, const MRat& c);
  // Action on functions of x.
  MRat apply(const MRat& f) const;

  friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  int n_;
  std::map<DiffIndex, MRat> terms_;
};

WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b);

// g[i] is the image of i (0-based).  x_i -> x_{g(i)}, d_i -> d_{g(i)}.
WeylElement sn_act(const std::vector<int>& g, const WeylElement& a);
bool is_symmetric(const WeylElement& a);

// sum r_m(t) sigma^m over shift vectors m, with sigma_k t_m = (t_m - delta_km) sigma_k.
// t_1..t_n are MPoly variables 0..n-1.
class ShiftAlgebraElement {
 public:
  explicit ShiftAlgebraElement(int n) : n_(n) {}
  static ShiftAlgebraElement scalar(int n, const Scalar& c);
  static ShiftAlgebraElement t(int n, int k);
  static ShiftAlgebraElement sigma(int n, int k, int power = 1);
  static ShiftAlgebraElement term(int n, const MPoly& r, std::vector<int> shift);

  int n() const { return n_; }
  const std::map<std::vector<int>, MPoly>& terms() const { return terms_; }
  void add(const std::vector<int>& shift, const MPoly& r);

  friend ShiftAlgebraElement operator+(const ShiftAlgebraElement& a, const ShiftAlgebraElement& b);
  friend ShiftAlgebraElement operator-(const ShiftAlgebraElement& a, const ShiftAlgebraElement& b);
  friend ShiftAlgebraElement operator*(const ShiftAlgebraElement& a, const ShiftAlgebraElement& b);
  friend bool operator==(const ShiftAlgebraElement& a, const ShiftAlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int n_;
  std::map<std::vector<int>, MPoly> terms_;
};

// sigma_k -> x_k, t_k -> d_k x_k (= x_k d_k + 1); the image lives in the Weyl
// algebra localized at the x_k.
WeylElement shift_algebra_iso(const ShiftAlgebraElement& el);
// x_k -> sigma_k, d_k -> t_k sigma_k^{-1}.  Coefficients must be Laurent
// polynomials; anything else throws ArityError.
ShiftAlgebraElement weyl_to_shift(const WeylElement& a);
std::vector<CheckRecord> iso_checks(int n);

struct SymData {
  int n = 0;
  std::vector<MPoly> sigma;  // sigma_1..sigma_n in x
  MPoly delta;               // prod_{i<j} (x_i - x_j)
  MPoly Delta;               // delta^2
};
SymData sym_data(int n);

// Symmetric polynomial in x rewritten in sigma_1..sigma_n (MPoly variables
// 0..n-1).  Throws NotInvariant if f is not symmetric.
MPoly symmetric_to_sigma(const MPoly& f, const SymData& sym);

// sum_beta g_beta(sigma) d_sigma^beta.
struct SigmaOperator {
  int n = 0;
  std::map<DiffIndex, MRat> terms;
  std::string to_string() const;
};

// pre: is_symmetric(a), n <= 3.  NotInvariant / ArityError otherwise.
SigmaOperator rewrite_in_sigma(const WeylElement& a);
// Back to x-coordinates through the inverse Jacobian.
WeylElement sigma_to_x(const SigmaOperator& op);
// round_trip, sigma_coefficients_symmetric, discriminant_denominators.
std::vector<CheckRecord> rewrite_checks(const WeylElement& a);

}  // namespace wgt
