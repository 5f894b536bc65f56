// Sparse matrix products: the OpenMP row-parallel kernel and its serial reference.
#include <algorithm>
#include <map>

#include "wgt/arith/sparse_matrix.hpp"
#include "wgt/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wgt {

namespace {

// Below this size the thread start-up cost dominates the rational arithmetic.
constexpr std::size_t kParallelThreshold = 48;

void require_conformant(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.size() != b.size()) {
    throw ArityError("multiply: size mismatch " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  require_conformant(a, b);
  const std::size_t n = a.size();
  SparseMatrix out(n);
  const long rows = static_cast<long>(n);

#pragma omp parallel if (n >= kParallelThreshold)
  {
    // Dense accumulator per thread; `touched` lists the columns in use.
    std::vector<Scalar> acc(n);
    std::vector<char> used(n, 0);
    std::vector<std::size_t> touched;
    touched.reserve(n);

#pragma omp for schedule(dynamic, 4)
    for (long i = 0; i < rows; ++i) {
      for (const auto& ea : a.row(static_cast<std::size_t>(i))) {
        for (const auto& eb : b.row(ea.col)) {
          if (!used[eb.col]) {
            used[eb.col] = 1;
            touched.push_back(eb.col);
            acc[eb.col] = ea.value * eb.value;
          } else {
            acc[eb.col] += ea.value * eb.value;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      std::vector<SparseMatrix::Entry> row;
      row.reserve(touched.size());
      for (std::size_t c : touched) {
        if (sgn(acc[c]) != 0) row.push_back({c, acc[c]});
        used[c] = 0;
      }
      touched.clear();
      // Rows are disjoint, so concurrent set_row calls touch separate storage.
      out.set_row(static_cast<std::size_t>(i), std::move(row));
    }
  }
  return out;
}

SparseMatrix multiply_reference(const SparseMatrix& a, const SparseMatrix& b) {
  require_conformant(a, b);
  const std::size_t n = a.size();
  // Column-major copy of b: columns[j] maps row index -> value.
  std::vector<std::map<std::size_t, Scalar>> columns(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& e : b.row(k)) columns[e.col].emplace(k, e.value);
  }
  SparseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar sum = 0;
      for (const auto& ea : a.row(i)) {
        const auto it = columns[j].find(ea.col);
        if (it != columns[j].end()) sum += ea.value * it->second;
      }
      if (sgn(sum) != 0) out.add_to(i, j, sum);
    }
  }
  return out;
}

}  // namespace wgt
