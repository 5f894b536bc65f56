#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wgt {

// Row lengths p_i = #{j : q_j >= i}, sorted ascending.  Throws ShapeError when
// q is empty, has a nonpositive entry, or is not unimodal.
std::vector<int> rows_from_columns(const std::vector<int>& columns);

// Column heights of the left-justified shape with the given rows.
std::vector<int> columns_from_rows(const std::vector<int>& rows);

// Shape data, stored canonically as the nondecreasing row tuple p_1..p_n.
// Indices are 1-based to match the usual labelling of rows.
class Pyramid {
 public:
  static Pyramid from_rows(std::vector<int> rows);
  static Pyramid from_columns(const std::vector<int>& columns);

  int n() const { return static_cast<int>(rows_.size()); }
  int p(int i) const { return rows_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& rows() const { return rows_; }
  std::vector<int> columns() const { return columns_from_rows(rows_); }
  int max_row() const { return rows_.back(); }
  // p_1 + ... + p_r (0 for r <= 0).
  int prefix(int r) const;
  int total() const { return prefix(n()); }

  friend bool operator==(const Pyramid&, const Pyramid&) = default;

 private:
  explicit Pyramid(std::vector<int> rows) : rows_(std::move(rows)) {}
  std::vector<int> rows_;
};

struct GkParameters {
  long k;
  long m;
};

// k from the column formula, cross-checked against the row formula
// (n-1)p_1 + ... + p_{n-1}; disagreement raises InvariantViolation.
GkParameters gk_parameters(const Pyramid& pyr);

// Number of PBW generators, counted from the index ranges directly.
long pbw_variable_count(const Pyramid& pyr);
// sum_r (p_1 + ... + p_r): the number of x-variables.
long gamma_gkdim(const Pyramid& pyr);
// sum_{r<n} (p_1 + ... + p_r): the number of shift generators.
long shift_group_rank(const Pyramid& pyr);

// sum_i (2(n-i)+1) p_i, checked against pbw_variable_count.
long gk_dimension(const Pyramid& pyr);

// "rows: 1 2 3 5" or "cols: 1 3 4 2 1" (also accepts '=' in place of ':').
Pyramid parse_pyramid_literal(std::string_view text);

std::string to_string(const Pyramid& pyr);

}  // namespace wgt
