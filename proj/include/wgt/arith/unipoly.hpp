#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wgt/arith/ring_traits.hpp"
#include "wgt/errors.hpp"

namespace wgt {

// Polynomial in one variable u with coefficients in V (Scalar or SparseMatrix).
// Coefficients are stored by ascending power and trimmed, so the zero
// polynomial has no coefficients and degree -1.  The stored zero value fixes
// the matrix size for SparseMatrix coefficients.
template <class V>
class UniPoly {
 public:
  using Traits = RingTraits<V>;

  explicit UniPoly(V zero) : zero_(std::move(zero)) {}
  UniPoly(V zero, std::vector<V> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  // c * u^power
  static UniPoly monomial(V c, int power) {
    UniPoly p(Traits::zero_like(c));
    p.c_.assign(static_cast<std::size_t>(power) + 1, p.zero_);
    p.c_[static_cast<std::size_t>(power)] = std::move(c);
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const V& zero() const { return zero_; }
  const std::vector<V>& coeffs() const { return c_; }

  const V& coeff(int power) const {
    if (power < 0 || power > degree()) return zero_;
    return c_[static_cast<std::size_t>(power)];
  }

  void set_coeff(int power, V value) {
    if (power > degree()) c_.resize(static_cast<std::size_t>(power) + 1, zero_);
    c_[static_cast<std::size_t>(power)] = std::move(value);
    trim();
  }

  V evaluate(const Scalar& u0) const {
    V acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * u0;
      acc += *it;
    }
    return acc;
  }

  // P(u + c), by binomial expansion.
  UniPoly shift(const Scalar& c) const {
    std::vector<V> out(c_.size(), zero_);
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (Traits::is_zero(c_[k])) continue;
      Scalar cpow = 1;
      // (u + c)^k = sum_j binom(k, j) c^(k-j) u^j, walked from j = k down.
      for (std::size_t j = k + 1; j-- > 0;) {
        out[j] += c_[k] * Scalar(binomial(static_cast<long>(k), static_cast<long>(j)) * cpow);
        cpow *= c;
      }
    }
    return UniPoly(zero_, std::move(out));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Scalar& s) {
    for (auto& v : c_) v = v * s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Scalar& s) { return a *= s; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.zero_);
    std::vector<V> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (Traits::is_zero(b.c_[j])) continue;
        out[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return UniPoly(a.zero_, std::move(out));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && Traits::is_zero(c_.back())) c_.pop_back();
  }

  V zero_;
  std::vector<V> c_;
};

template <class V>
UniPoly<V> poly_shift(const UniPoly<V>& p, const Scalar& c) {
  return p.shift(c);
}

using ScalarPoly = UniPoly<Scalar>;
using PolyMatrix = UniPoly<SparseMatrix>;

// Monic product of (u - root) over the given roots.
inline ScalarPoly poly_from_roots(const std::vector<Scalar>& roots) {
  ScalarPoly p(Scalar(0), {Scalar(1)});
  for (const auto& r : roots) p = p * ScalarPoly(Scalar(0), {Scalar(-r), Scalar(1)});
  return p;
}

// Lifts a scalar polynomial to a matrix polynomial with coefficients c * I.
inline PolyMatrix scalar_poly_matrix(const ScalarPoly& p, std::size_t n) {
  PolyMatrix out{SparseMatrix(n)};
  for (int k = 0; k <= p.degree(); ++k) out.set_coeff(k, SparseMatrix::scalar(n, p.coeff(k)));
  return out;
}

std::string to_string(const ScalarPoly& p, const std::string& var = "u");

// Coefficients are returned by ascending power; a node equal to another one
// raises DegenerateNodes.
std::vector<ScalarPoly> lagrange_basis(const std::vector<Scalar>& nodes);

// Unique polynomial of degree <= degree_bound taking values[j] at nodes[j].
template <class V>
UniPoly<V> lagrange_interpolate(const std::vector<Scalar>& nodes, const std::vector<V>& values, int degree_bound) {
  if (nodes.size() != values.size() || static_cast<int>(nodes.size()) != degree_bound + 1) {
    throw ArityError("lagrange_interpolate: " + std::to_string(nodes.size()) + " nodes, " +
                     std::to_string(values.size()) + " values, degree bound " + std::to_string(degree_bound));
  }
  if (values.empty()) throw ArityError("lagrange_interpolate: no nodes");
  const auto basis = lagrange_basis(nodes);
  const V zero = RingTraits<V>::zero_like(values.front());
  UniPoly<V> out(zero);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (RingTraits<V>::is_zero(values[j])) continue;
    std::vector<V> coeffs;
    coeffs.reserve(basis[j].coeffs().size());
    for (const auto& c : basis[j].coeffs()) coeffs.push_back(values[j] * c);
    out += UniPoly<V>(zero, std::move(coeffs));
  }
  return out;
}

}  // namespace wgt
