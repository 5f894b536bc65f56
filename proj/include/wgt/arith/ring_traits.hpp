#pragma once

#include <optional>

#include "wgt/arith/scalar.hpp"
#include "wgt/arith/sparse_matrix.hpp"

namespace wgt {

// The coefficient rings used by UniPoly and InvSeries: Scalar and SparseMatrix.
template <class V>
struct RingTraits;

template <>
struct RingTraits<Scalar> {
  static Scalar zero_like(const Scalar&) { return 0; }
  static Scalar one_like(const Scalar&) { return 1; }
  static bool is_zero(const Scalar& v) { return sgn(v) == 0; }
  static std::optional<Scalar> inverse(const Scalar& v) {
    if (sgn(v) == 0) return std::nullopt;
    return Scalar(1 / v);
  }
};

template <>
struct RingTraits<SparseMatrix> {
  static SparseMatrix zero_like(const SparseMatrix& m) { return SparseMatrix(m.size()); }
  static SparseMatrix one_like(const SparseMatrix& m) { return SparseMatrix::identity(m.size()); }
  static bool is_zero(const SparseMatrix& m) { return m.is_zero(); }
  static std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
    Scalar c;
    if (m.is_scalar(&c)) {
      if (sgn(c) == 0) return std::nullopt;
      return SparseMatrix::scalar(m.size(), Scalar(1 / c));
    }
    return wgt::inverse(m);
  }
};

}  // namespace wgt
