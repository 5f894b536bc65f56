#include "wgt/arith/sparse_matrix.hpp"

#include <algorithm>
#include <sstream>

#include "wgt/errors.hpp"

namespace wgt {

namespace {

void require_same_size(const SparseMatrix& a, const SparseMatrix& b, const char* op) {
  if (a.size() != b.size()) {
    throw ArityError(std::string(op) + ": size mismatch " + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()));
  }
}

// Merges two sorted rows as lhs + sign * rhs.
std::vector<SparseMatrix::Entry> merge_rows(std::span<const SparseMatrix::Entry> lhs,
                                            std::span<const SparseMatrix::Entry> rhs, int sign) {
  std::vector<SparseMatrix::Entry> out;
  out.reserve(lhs.size() + rhs.size());
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < lhs.size() || q < rhs.size()) {
    if (q == rhs.size() || (p < lhs.size() && lhs[p].col < rhs[q].col)) {
      out.push_back(lhs[p++]);
    } else if (p == lhs.size() || rhs[q].col < lhs[p].col) {
      out.push_back({rhs[q].col, sign > 0 ? rhs[q].value : Scalar(-rhs[q].value)});
      ++q;
    } else {
      Scalar v = sign > 0 ? Scalar(lhs[p].value + rhs[q].value) : Scalar(lhs[p].value - rhs[q].value);
      if (sgn(v) != 0) out.push_back({lhs[p].col, std::move(v)});
      ++p;
      ++q;
    }
  }
  return out;
}

}  // namespace

SparseMatrix SparseMatrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

SparseMatrix SparseMatrix::scalar(std::size_t n, const Scalar& c) {
  SparseMatrix m(n);
  if (sgn(c) == 0) return m;
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, c});
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

bool SparseMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& e : rows_[i]) {
      if (e.col != i) return false;
    }
  }
  return true;
}

bool SparseMatrix::is_scalar(Scalar* value) const {
  if (n_ == 0) {
    if (value) *value = 0;
    return true;
  }
  const Scalar c = at(0, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    const auto& r = rows_[i];
    if (sgn(c) == 0) {
      if (!r.empty()) return false;
      continue;
    }
    if (r.size() != 1 || r[0].col != i || r[0].value != c) return false;
  }
  if (value) *value = c;
  return true;
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  const auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) return it->value;
  return 0;
}

void SparseMatrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= n_ || j >= n_) throw IndexError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (sgn(v) == 0) return;
  auto& r = rows_[i];
  const auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.col < c; });
  if (it != r.end() && it->col == j) {
    it->value += v;
    if (sgn(it->value) == 0) r.erase(it);
  } else {
    r.insert(it, Entry{j, v});
  }
}

void SparseMatrix::set_row(std::size_t i, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  std::erase_if(entries, [](const Entry& e) { return sgn(e.value) == 0; });
  rows_.at(i) = std::move(entries);
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  require_same_size(*this, other, "+");
  for (std::size_t i = 0; i < n_; ++i) {
    if (!other.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], other.rows_[i], +1);
  }
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& other) {
  require_same_size(*this, other, "-");
  for (std::size_t i = 0; i < n_; ++i) {
    if (!other.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], other.rows_[i], -1);
  }
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_) {
    for (auto& e : r) e.value *= c;
  }
  return *this;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.n_; ++i) {
    const auto& x = a.rows_[i];
    const auto& y = b.rows_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].col != y[k].col || x[k].value != y[k].value) return false;
    }
  }
  return true;
}

SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
SparseMatrix operator-(SparseMatrix a) { return a *= Scalar(-1); }
SparseMatrix operator*(SparseMatrix a, const Scalar& c) { return a *= c; }
SparseMatrix operator*(const Scalar& c, SparseMatrix a) { return a *= c; }

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Scalar>> work(n, std::vector<Scalar>(2 * n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : m.row(i)) work[i][e.col] = e.value;
    work[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(work[pivot][c]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(work[pivot], work[c]);
    const Scalar inv = 1 / work[c][c];
    for (auto& v : work[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(work[r][c]) == 0) continue;
      const Scalar f = work[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) {
        if (sgn(work[c][k]) != 0) work[r][k] -= f * work[c][k];
      }
    }
  }
  SparseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<SparseMatrix::Entry> row;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(work[i][n + j]) != 0) row.push_back({j, work[i][n + j]});
    }
    out.set_row(i, std::move(row));
  }
  return out;
}

std::string EntryDifference::describe() const {
  return "entry (" + std::to_string(row) + "," + std::to_string(col) + "): " + to_string(lhs) + " != " +
         to_string(rhs);
}

std::optional<EntryDifference> first_difference(const SparseMatrix& a, const SparseMatrix& b) {
  require_same_size(a, b, "first_difference");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto diff = merge_rows(a.row(i), b.row(i), -1);
    if (!diff.empty()) {
      const std::size_t j = diff.front().col;
      return EntryDifference{i, j, a.at(i, j), b.at(i, j)};
    }
  }
  return std::nullopt;
}

std::string to_string(const SparseMatrix& m) {
  std::ostringstream os;
  os << "[" << m.size() << "x" << m.size();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (const auto& e : m.row(i)) os << " (" << i << "," << e.col << ")=" << e.value.get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace wgt
