#include "wgt/pyramid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "wgt/errors.hpp"

namespace wgt {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

std::vector<int> rows_from_columns(const std::vector<int>& columns) {
  if (columns.empty()) throw ShapeError("empty column tuple");
  for (int q : columns) {
    if (q <= 0) throw ShapeError("column heights must be positive: " + join(columns));
  }
  std::size_t peak = 0;
  while (peak + 1 < columns.size() && columns[peak] <= columns[peak + 1]) ++peak;
  for (std::size_t j = peak; j + 1 < columns.size(); ++j) {
    if (columns[j] < columns[j + 1]) throw ShapeError("columns are not unimodal: " + join(columns));
  }
  const int height = *std::max_element(columns.begin(), columns.end());
  std::vector<int> rows;
  for (int i = 1; i <= height; ++i) {
    rows.push_back(static_cast<int>(std::count_if(columns.begin(), columns.end(), [i](int q) { return q >= i; })));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

std::vector<int> columns_from_rows(const std::vector<int>& rows) {
  if (rows.empty()) return {};
  const int width = *std::max_element(rows.begin(), rows.end());
  std::vector<int> cols;
  for (int j = 1; j <= width; ++j) {
    cols.push_back(static_cast<int>(std::count_if(rows.begin(), rows.end(), [j](int p) { return p >= j; })));
  }
  return cols;
}

Pyramid Pyramid::from_rows(std::vector<int> rows) {
  if (rows.empty()) throw ShapeError("empty row tuple");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] <= 0) throw ShapeError("row lengths must be positive: " + join(rows));
    if (i > 0 && rows[i] < rows[i - 1]) throw ShapeError("row lengths must be nondecreasing: " + join(rows));
  }
  return Pyramid(std::move(rows));
}

Pyramid Pyramid::from_columns(const std::vector<int>& columns) { return Pyramid(rows_from_columns(columns)); }

int Pyramid::prefix(int r) const {
  int s = 0;
  for (int i = 1; i <= std::min(r, n()); ++i) s += p(i);
  return s;
}

GkParameters gk_parameters(const Pyramid& pyr) {
  long k_cols = 0;
  long m = 0;
  for (int q : pyr.columns()) {
    k_cols += static_cast<long>(q) * (q - 1) / 2;
    m += q;
  }
  long k_rows = 0;
  for (int i = 1; i <= pyr.n(); ++i) k_rows += static_cast<long>(pyr.n() - i) * pyr.p(i);
  if (k_cols != k_rows) {
    throw InvariantViolation("k from columns (" + std::to_string(k_cols) + ") != k from rows (" +
                             std::to_string(k_rows) + ") for rows " + join(pyr.rows()));
  }
  return {k_cols, m};
}

long pbw_variable_count(const Pyramid& pyr) {
  long count = 0;
  for (int i = 1; i <= pyr.n(); ++i) {
    for (int j = 1; j <= pyr.n(); ++j) {
      const int lo = i >= j ? 1 : pyr.p(j) - pyr.p(i) + 1;
      for (int r = lo; r <= pyr.p(j); ++r) ++count;
    }
  }
  return count;
}

long gamma_gkdim(const Pyramid& pyr) {
  long s = 0;
  for (int r = 1; r <= pyr.n(); ++r) s += pyr.prefix(r);
  return s;
}

long shift_group_rank(const Pyramid& pyr) {
  long s = 0;
  for (int r = 1; r < pyr.n(); ++r) s += pyr.prefix(r);
  return s;
}

long gk_dimension(const Pyramid& pyr) {
  long d = 0;
  for (int i = 1; i <= pyr.n(); ++i) d += static_cast<long>(2 * (pyr.n() - i) + 1) * pyr.p(i);
  const long pbw = pbw_variable_count(pyr);
  if (d != pbw) {
    throw InvariantViolation("gk dimension " + std::to_string(d) + " != PBW count " + std::to_string(pbw));
  }
  return d;
}

Pyramid parse_pyramid_literal(std::string_view text) {
  const auto sep = text.find_first_of(":=");
  if (sep == std::string_view::npos) throw ParseError("pyramid literal needs 'rows:' or 'cols:'");
  std::string key(text.substr(0, sep));
  key.erase(std::remove_if(key.begin(), key.end(), [](unsigned char c) { return std::isspace(c); }), key.end());
  std::istringstream in{std::string(text.substr(sep + 1))};
  std::vector<int> values;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw ParseError("not an integer in pyramid literal: '" + tok + "'");
    values.push_back(v);
  }
  if (key == "rows") return Pyramid::from_rows(values);
  if (key == "cols" || key == "columns") return Pyramid::from_columns(values);
  throw ParseError("unknown pyramid key '" + key + "'");
}

std::string to_string(const Pyramid& pyr) { return "rows: " + join(pyr.rows()); }

}  // namespace wgt
