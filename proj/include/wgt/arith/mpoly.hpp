#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wgt/arith/scalar.hpp"

namespace wgt {

// Power product over variables identified by nonnegative integers.  Factors are
// kept sorted by variable with positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(int v, int exponent = 1);

  int degree(int v) const;
  int total_degree() const;
  bool is_one() const { return f_.empty(); }
  const std::vector<std::pair<int, int>>& factors() const { return f_; }

  bool divides(const Monomial& other) const;
  // this / other; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  Monomial with_degree(int v, int exponent) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  // Lexicographic comparison with variable 0 most significant.
  static int lex_compare(const Monomial& a, const Monomial& b);

 private:
  std::vector<std::pair<int, int>> f_;
};

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::lex_compare(a, b) > 0; }
};

// Multivariate polynomial over Scalar.  Terms are ordered lex-descending, so
// the first term is the lex-leading one.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, LexGreater>;

  MPoly() = default;
  MPoly(const Scalar& c);  // NOLINT(google-explicit-constructor): constants embed naturally
  MPoly(long c) : MPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static MPoly var(int v);
  static MPoly term(const Scalar& c, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  int degree(int v) const;
  int total_degree() const;
  // Smallest-index variable that occurs, or -1 for constants.
  int main_variable() const;
  std::vector<int> variables() const;

  // Coefficients of this polynomial viewed as a polynomial in v.
  std::map<int, MPoly> coefficients_in(int v) const;

  MPoly derivative(int v) const;
  MPoly substitute(int v, const MPoly& value) const;
  MPoly substitute(int v, const Scalar& value) const;
  // Simultaneous substitution x_v -> values(v) for every variable.
  MPoly compose(const std::function<MPoly(int)>& values) const;
  // Renames variables through the map v -> perm(v) (must be injective).
  MPoly rename(const std::function<int(int)>& perm) const;
  // Full evaluation; every occurring variable must be assigned.
  Scalar evaluate(const std::function<Scalar(int)>& values) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= Scalar(-1); }
  friend MPoly operator*(MPoly a, const Scalar& c) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(int e) const;
  // Divides by the leading coefficient; zero stays zero.
  MPoly monic() const;

  std::string to_string(const std::function<std::string(int)>& name) const;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  TermMap terms_;
};

// Quotient a / b when b divides a exactly, nullopt otherwise.
std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b);

// Monic greatest common divisor (gcd(0, 0) = 0).  Recursive primitive
// pseudo-remainder sequences over the smallest-index variable.
MPoly gcd(const MPoly& a, const MPoly& b);

// Default variable names x0, x1, ...
std::string default_var_name(int v);

}  // namespace wgt
