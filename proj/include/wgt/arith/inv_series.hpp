#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wgt/arith/ring_traits.hpp"
#include "wgt/arith/unipoly.hpp"
#include "wgt/errors.hpp"

namespace wgt {

// Truncated series c_0 + c_1 u^-1 + ... + c_R u^-R.  R is the order; results
// of binary operations carry the smaller order of the operands, and asking for
// a coefficient past the order raises OrderError.
template <class V>
class InvSeries {
 public:
  using Traits = RingTraits<V>;

  InvSeries(V zero, int order) : zero_(std::move(zero)), c_(static_cast<std::size_t>(order) + 1, zero_) {
    if (order < 0) throw OrderError("negative truncation order");
  }

  static InvSeries constant(V value, int order) {
    InvSeries s(Traits::zero_like(value), order);
    s.c_[0] = std::move(value);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const V& zero() const { return zero_; }

  const V& coeff(int r) const {
    if (r < 0) return zero_;
    if (r > order()) {
      throw OrderError("coefficient u^-" + std::to_string(r) + " requested from a series of order " +
                       std::to_string(order()));
    }
    return c_[static_cast<std::size_t>(r)];
  }
  V& coeff(int r) {
    if (r < 0 || r > order()) throw OrderError("coefficient index " + std::to_string(r) + " out of range");
    return c_[static_cast<std::size_t>(r)];
  }

  InvSeries truncated(int order) const {
    InvSeries s(zero_, std::min(order, this->order()));
    for (int r = 0; r <= s.order(); ++r) s.c_[static_cast<std::size_t>(r)] = c_[static_cast<std::size_t>(r)];
    return s;
  }

  // s(u + c): each u^-r term expands as u^-r (1 + c/u)^-r.
  InvSeries shift_argument(const Scalar& c) const {
    InvSeries out(zero_, order());
    for (int r = 0; r <= order(); ++r) {
      const V& cr = c_[static_cast<std::size_t>(r)];
      if (Traits::is_zero(cr)) continue;
      if (r == 0) {
        out.c_[0] += cr;
        continue;
      }
      Scalar cpow = 1;
      for (int j = 0; r + j <= order(); ++j) {
        // binom(-r, j) = (-1)^j binom(r + j - 1, j)
        Scalar b = binomial(r + j - 1, j) * cpow;
        if (j % 2 == 1) b = -b;
        out.c_[static_cast<std::size_t>(r + j)] += cr * b;
        cpow *= c;
      }
    }
    return out;
  }

  friend InvSeries operator+(const InvSeries& a, const InvSeries& b) {
    InvSeries out(a.zero_, std::min(a.order(), b.order()));
    for (int r = 0; r <= out.order(); ++r) out.c_[r] = a.c_[r] + b.c_[r];
    return out;
  }
  friend InvSeries operator-(const InvSeries& a, const InvSeries& b) {
    InvSeries out(a.zero_, std::min(a.order(), b.order()));
    for (int r = 0; r <= out.order(); ++r) out.c_[r] = a.c_[r] - b.c_[r];
    return out;
  }
  friend InvSeries operator*(const InvSeries& a, const InvSeries& b) {
    InvSeries out(a.zero_, std::min(a.order(), b.order()));
    for (int i = 0; i <= out.order(); ++i) {
      if (Traits::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= out.order(); ++j) {
        if (Traits::is_zero(b.c_[j])) continue;
        out.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return out;
  }
  friend InvSeries operator*(InvSeries a, const Scalar& s) {
    for (auto& v : a.c_) v = v * s;
    return a;
  }

  friend bool operator==(const InvSeries& a, const InvSeries& b) { return a.c_ == b.c_; }

 private:
  V zero_;
  std::vector<V> c_;
};

using MatrixSeries = InvSeries<SparseMatrix>;

// Two-sided inverse through `order` (capped at the input's order).
template <class V>
InvSeries<V> series_inverse(const InvSeries<V>& s, int order) {
  const auto lead_inv = RingTraits<V>::inverse(s.coeff(0));
  if (!lead_inv) throw SingularLead("series_inverse: leading coefficient is not invertible");
  InvSeries<V> out(s.zero(), std::min(order, s.order()));
  out.coeff(0) = *lead_inv;
  for (int r = 1; r <= out.order(); ++r) {
    V acc = s.zero();
    for (int t = 1; t <= r; ++t) {
      if (RingTraits<V>::is_zero(s.coeff(t))) continue;
      acc += s.coeff(t) * out.coeff(r - t);
    }
    out.coeff(r) = (*lead_inv * acc) * Scalar(-1);
  }
  return out;
}

struct RootMultiplicity {
  Scalar root;
  int multiplicity;
};

// Expands P(u) / prod (u - c_j)^{m_j} as a series in u^-1 through `order`.
// Requires deg P <= sum m_j so that the quotient has no positive powers of u.
template <class V>
InvSeries<V> poly_to_inv_series(const UniPoly<V>& p, const std::vector<RootMultiplicity>& prefactor, int order) {
  std::vector<Scalar> roots;
  for (const auto& rm : prefactor) {
    if (rm.multiplicity < 0) throw ArityError("poly_to_inv_series: negative multiplicity");
    for (int k = 0; k < rm.multiplicity; ++k) roots.push_back(rm.root);
  }
  const int m = static_cast<int>(roots.size());
  if (p.degree() > m) {
    throw ArityError("poly_to_inv_series: degree " + std::to_string(p.degree()) + " exceeds prefactor degree " +
                     std::to_string(m));
  }
  // Q(u) / u^m = 1 + q_1 u^-1 + ... + q_m u^-m
  const ScalarPoly q = poly_from_roots(roots);
  InvSeries<Scalar> q_hat(Scalar(0), order);
  for (int k = 0; k <= std::min(m, order); ++k) q_hat.coeff(k) = q.coeff(m - k);
  const InvSeries<Scalar> q_inv = series_inverse(q_hat, order);

  // P_j u^j * u^-m * q_inv contributes P_j * q_inv_t to u^-(m - j + t).
  InvSeries<V> out(p.zero(), order);
  for (int j = 0; j <= p.degree(); ++j) {
    const V& pj = p.coeff(j);
    if (RingTraits<V>::is_zero(pj)) continue;
    for (int t = 0; m - j + t <= order; ++t) {
      if (sgn(q_inv.coeff(t)) == 0) continue;
      out.coeff(m - j + t) += pj * q_inv.coeff(t);
    }
  }
  return out;
}

}  // namespace wgt
