#include "wgt/arith/mrat.hpp"

#include "wgt/errors.hpp"

namespace wgt {

namespace {

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw InvariantViolation("MRat: gcd does not divide");
  return *std::move(q);
}

}  // namespace

MRat::MRat(const MPoly& num, const MPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw ArityError("MRat with zero denominator");
  normalize();
}

void MRat::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(Scalar(1));
    return;
  }
  if (!den_.is_constant()) {
    const MPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const Scalar lc = den_.leading_coefficient();
  if (lc != 1) {
    const Scalar inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Scalar MRat::constant_value() const {
  if (!is_constant()) throw ArityError("MRat::constant_value on a non-constant");
  return num_.constant_term() / den_.constant_term();
}

MRat MRat::derivative(int v) const {
  if (den_.is_constant()) return MRat(num_.derivative(v) * Scalar(1 / den_.constant_term()));
  return MRat(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

MRat MRat::from_coprime(MPoly num, MPoly den) {
  if (den.is_zero()) throw ArityError("MRat with zero denominator");
  if (num.is_zero()) return MRat();
  const Scalar lc = den.leading_coefficient();
  if (lc != 1) {
    num *= Scalar(1 / lc);
    den *= Scalar(1 / lc);
  }
  return MRat(std::move(num), std::move(den), Reduced{});
}

MRat MRat::rename(const std::function<int(int)>& perm) const {
  // Coprimality survives renaming; only the leading term of the denominator
  // can change.
  return from_coprime(num_.rename(perm), den_.rename(perm));
}

MRat MRat::substitute(int v, const Scalar& value) const {
  const MPoly d = den_.substitute(v, value);
  if (d.is_zero()) throw EvaluationError("denominator vanishes under substitution");
  return MRat(num_.substitute(v, value), d);
}

Scalar MRat::evaluate(const std::function<Scalar(int)>& values) const {
  const Scalar d = den_.evaluate(values);
  if (sgn(d) == 0) throw EvaluationError("denominator vanishes at the evaluation point");
  return num_.evaluate(values) / d;
}

MRat operator+(const MRat& a, const MRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return MRat(a.num_ + b.num_, a.den_);
  const MPoly g = gcd(a.den_, b.den_);
  const MPoly bd = divide_exact(b.den_, g);
  const MPoly ad = divide_exact(a.den_, g);
  return MRat(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

MRat operator-(const MRat& a) { return MRat(-a.num_, a.den_, MRat::Reduced{}); }

MRat operator-(const MRat& a, const MRat& b) { return a + (-b); }

MRat operator*(const MRat& a, const MRat& b) {
  if (a.is_zero() || b.is_zero()) return MRat();
  const MPoly g1 = gcd(a.num_, b.den_);
  const MPoly g2 = gcd(b.num_, a.den_);
  MPoly num = divide_exact(a.num_, g1) * divide_exact(b.num_, g2);
  MPoly den = divide_exact(a.den_, g2) * divide_exact(b.den_, g1);
  const Scalar lc = den.leading_coefficient();
  if (lc != 1) {
    num *= Scalar(1 / lc);
    den *= Scalar(1 / lc);
  }
  return MRat(std::move(num), std::move(den), MRat::Reduced{});
}

MRat operator/(const MRat& a, const MRat& b) {
  if (b.is_zero()) throw ArityError("MRat division by zero");
  return a * MRat(b.den_, b.num_);
}

MRat MRat::pow(int e) const {
  if (e < 0) return MRat(Scalar(1)) / pow(-e);
  return MRat(num_.pow(e), den_.pow(e), Reduced{});
}

std::string MRat::to_string(const std::function<std::string(int)>& name) const {
  if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string(name);
  return "(" + num_.to_string(name) + ")/(" + den_.to_string(name) + ")";
}

}  // namespace wgt
