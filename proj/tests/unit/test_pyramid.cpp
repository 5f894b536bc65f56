#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gen.hpp"
#include "wgt/errors.hpp"
#include "wgt/pyramid.hpp"

using namespace wgt;

namespace {

// Boxes as (row from top, column); row 1 is the top.
std::set<std::pair<int, int>> boxes_from_columns(const std::vector<int>& cols) {
  const int height = *std::max_element(cols.begin(), cols.end());
  std::set<std::pair<int, int>> out;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (int h = 0; h < cols[c]; ++h) out.insert({height - h, static_cast<int>(c)});
  }
  return out;
}

// k = number of unordered pairs of boxes sharing a column.
long pairs_in_columns(const std::set<std::pair<int, int>>& boxes) {
  long k = 0;
  for (const auto& a : boxes) {
    for (const auto& b : boxes) {
      if (a < b && a.second == b.second) ++k;
    }
  }
  return k;
}

// sum_{i,j} min(p_i, p_j): dimension of the centralizer.
long min_sum(const std::vector<int>& rows) {
  long s = 0;
  for (int a : rows) {
    for (int b : rows) s += std::min(a, b);
  }
  return s;
}

}  // namespace

TEST_CASE("figure pyramid") {
  const auto pyr = Pyramid::from_columns({1, 3, 4, 2, 1});
  CHECK(pyr.rows() == std::vector<int>{1, 2, 3, 5});
  const auto gk = gk_parameters(pyr);
  CHECK(gk.k == 10);
  CHECK(gk.m == 11);
}

TEST_CASE("random unimodal pyramids: row/column formulas against a box count") {
  gen::Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cols = rng.unimodal_columns();
    const auto pyr = Pyramid::from_columns(cols);
    const auto boxes = boxes_from_columns(cols);
    const auto gk = gk_parameters(pyr);
    CHECK(gk.k == pairs_in_columns(boxes));
    CHECK(gk.m == static_cast<long>(boxes.size()));
    // Row lengths read off the boxes.
    std::map<int, int> per_row;
    for (const auto& b : boxes) ++per_row[b.first];
    std::vector<int> rows;
    for (const auto& [r, len] : per_row) rows.push_back(len);
    CHECK(pyr.rows() == rows);
    CHECK(Pyramid::from_rows(pyr.rows()).rows() == pyr.rows());
  }
}

TEST_CASE("gk dimension equals the PBW count and gkdim Gamma + rank") {
  gen::Rng rng(7);
  std::vector<Pyramid> shapes{Pyramid::from_rows({1, 1}), Pyramid::from_rows({1, 2}), Pyramid::from_rows({2, 2}),
                              Pyramid::from_rows({1, 1, 1}), Pyramid::from_rows({1, 2, 2})};
  for (int trial = 0; trial < 30; ++trial) shapes.push_back(rng.pyramid(static_cast<int>(rng.integer(1, 5)), 4));
  for (const auto& pyr : shapes) {
    const long d = gk_dimension(pyr);
    CHECK(d == pbw_variable_count(pyr));
    CHECK(d == min_sum(pyr.rows()));
    CHECK(d == gamma_gkdim(pyr) + shift_group_rank(pyr));
  }
  // Reference values by hand: rows (1,2): 1 + 1 + 1 + 2.
  CHECK(gk_dimension(Pyramid::from_rows({1, 2})) == 5);
  CHECK(gamma_gkdim(Pyramid::from_rows({1, 2})) == 4);
  CHECK(shift_group_rank(Pyramid::from_rows({1, 2})) == 1);
}

TEST_CASE("shape errors") {
  CHECK_THROWS_AS(Pyramid::from_rows({2, 1}), ShapeError);
  CHECK_THROWS_AS(Pyramid::from_rows({}), ShapeError);
  CHECK_THROWS_AS(Pyramid::from_rows({0, 1}), ShapeError);
  CHECK_THROWS_AS(Pyramid::from_columns({1, 2, 1, 2}), ShapeError);
  CHECK_THROWS_AS(Pyramid::from_columns({2, 0}), ShapeError);
}

TEST_CASE("pyramid literals") {
  CHECK(parse_pyramid_literal("rows: 1 2 2").rows() == std::vector<int>{1, 2, 2});
  CHECK(parse_pyramid_literal("cols = 1 2").rows() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(parse_pyramid_literal("1 2 2"), ParseError);
  CHECK_THROWS_AS(parse_pyramid_literal("rows: 1 x"), ParseError);
  CHECK_THROWS_AS(parse_pyramid_literal("width: 1"), ParseError);
  const auto pyr = Pyramid::from_rows({1, 2, 2});
  CHECK(parse_pyramid_literal(to_string(pyr)) == pyr);
  CHECK(pyr.prefix(2) == 3);
  CHECK(pyr.total() == 5);
  CHECK(pyr.prefix(0) == 0);
}
