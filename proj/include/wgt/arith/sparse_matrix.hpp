#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wgt/arith/scalar.hpp"

namespace wgt {

// Square sparse matrix over exact rationals in row-compressed form.  Each row
// holds its nonzero entries sorted by column; zeros are never stored, so
// structural equality is value equality.
class SparseMatrix {
 public:
  struct Entry {
    std::size_t col;
    Scalar value;
  };

  explicit SparseMatrix(std::size_t n = 0) : n_(n), rows_(n) {}

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix scalar(std::size_t n, const Scalar& c);

  std::size_t size() const { return n_; }
  std::size_t nnz() const;
  bool is_zero() const;
  bool is_diagonal() const;
  // Scalar multiple of the identity; the scalar is stored in *value when given.
  bool is_scalar(Scalar* value = nullptr) const;

  std::span<const Entry> row(std::size_t i) const { return rows_[i]; }
  Scalar at(std::size_t i, std::size_t j) const;

  // Adds v to entry (i, j); an entry that becomes zero is removed.
  void add_to(std::size_t i, std::size_t j, const Scalar& v);
  void set_row(std::size_t i, std::vector<Entry> entries);

  SparseMatrix& operator+=(const SparseMatrix& other);
  SparseMatrix& operator-=(const SparseMatrix& other);
  SparseMatrix& operator*=(const Scalar& c);

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t n_;
  std::vector<std::vector<Entry>> rows_;
};

SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b);
SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b);
SparseMatrix operator-(SparseMatrix a);
SparseMatrix operator*(SparseMatrix a, const Scalar& c);
SparseMatrix operator*(const Scalar& c, SparseMatrix a);

// Row-parallel (OpenMP) Gustavson product.  Used by operator*.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
// Serial triple loop over a column-major copy of b; the independent reference
// for the parallel kernel.
SparseMatrix multiply_reference(const SparseMatrix& a, const SparseMatrix& b);

inline SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) { return multiply(a, b); }

// ab - ba
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<SparseMatrix> inverse(const SparseMatrix& m);

struct EntryDifference {
  std::size_t row;
  std::size_t col;
  Scalar lhs;
  Scalar rhs;
  std::string describe() const;
};

// First entry (row-major) where a and b differ.
std::optional<EntryDifference> first_difference(const SparseMatrix& a, const SparseMatrix& b);

std::string to_string(const SparseMatrix& m);

}  // namespace wgt
