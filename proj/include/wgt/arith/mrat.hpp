#pragma once

#include <functional>
#include <string>

#include "wgt/arith/mpoly.hpp"

namespace wgt {

// Quotient of multivariate polynomials in lowest terms.  The denominator is
// normalized to lex-leading coefficient 1, which makes equality structural.
class MRat {
 public:
  MRat() : den_(Scalar(1)) {}
  MRat(const Scalar& c) : num_(c), den_(Scalar(1)) {}  // NOLINT(google-explicit-constructor)
  MRat(long c) : MRat(Scalar(c)) {}                    // NOLINT(google-explicit-constructor)
  MRat(const MPoly& p) : num_(p), den_(Scalar(1)) {}   // NOLINT(google-explicit-constructor)
  MRat(const MPoly& num, const MPoly& den);
  // Skips the gcd; the caller guarantees gcd(num, den) = 1.
  static MRat from_coprime(MPoly num, MPoly den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Scalar constant_value() const;

  MRat derivative(int v) const;
  MRat rename(const std::function<int(int)>& perm) const;
  MRat substitute(int v, const Scalar& value) const;
  // Throws EvaluationError when the denominator vanishes.
  Scalar evaluate(const std::function<Scalar(int)>& values) const;

  friend MRat operator+(const MRat& a, const MRat& b);
  friend MRat operator-(const MRat& a, const MRat& b);
  friend MRat operator-(const MRat& a);
  friend MRat operator*(const MRat& a, const MRat& b);
  // Throws ArityError on division by zero.
  friend MRat operator/(const MRat& a, const MRat& b);
  MRat& operator+=(const MRat& o) { return *this = *this + o; }
  MRat& operator-=(const MRat& o) { return *this = *this - o; }
  MRat& operator*=(const MRat& o) { return *this = *this * o; }
  friend bool operator==(const MRat& a, const MRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  MRat pow(int e) const;
  std::string to_string(const std::function<std::string(int)>& name) const;

 private:
  struct Reduced {};
  MRat(MPoly num, MPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  MPoly num_;
  MPoly den_;
};

}  // namespace wgt
