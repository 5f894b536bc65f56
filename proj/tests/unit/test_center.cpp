#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wgt/center.hpp"

using namespace wgt;

namespace {

Scalar q(long n, long d = 1) {
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("n = 1: cdet is A_1") {
  const auto pyr = Pyramid::from_rows({2});
  const auto rep = build_representation(pyr, generic_weight(pyr));
  const auto cr = analyze_center(rep);
  CHECK(cr.cdet == rep.A_poly(1));
  CHECK(cr.cdet_scalar);
  for (const auto& rec : cr.checks) CHECK_MESSAGE(rec.status != Status::Fail, (rec.name + ": " + rec.witness));
}

TEST_CASE("gl2: central scalars and the D2 cross-check") {
  HighestWeight w;
  w.roots = {{q(5, 2)}, {q(1, 2)}};
  const auto rep = build_representation(Pyramid::from_rows({1, 1}), w);
  const auto cr = analyze_center(rep);
  CHECK(cr.cdet_scalar);
  for (const auto& d : central_coefficients(cr.cdet, 2)) CHECK(d.is_scalar());
  bool d2_seen = false;
  for (const auto& rec : cr.checks) {
    CHECK_MESSAGE(rec.status == Status::Pass, (rec.name + ": " + rec.witness));
    d2_seen = d2_seen || rec.name == "cdet_matches_d2";
  }
  CHECK(d2_seen);
  MESSAGE("cdet(u) = " << to_string(cr.cdet_value) << ", A_2(u) = " << to_string(cr.an_value));

  const auto gens = generator_series(rep, 8);
  const auto roots = higher_root_series(gens, rep.pyramid());
  for (int r = 1; r <= 8; ++r) {
    CHECK(roots.e_series(1, 2).coeff(r) == gens.e_at(1, r));
    CHECK(roots.f_series(2, 1).coeff(r) == gens.f_at(1, r));
  }
  const auto T = build_t_matrix(gens, roots, rep.pyramid());
  CHECK(T.at(1, 2).degree() <= 0);
  CHECK(T.at(1, 1).coeffs().back() == SparseMatrix::identity(3));
}

TEST_CASE("gl3 one column: e13 by the commutator recursion") {
  const auto pyr = Pyramid::from_rows({1, 1, 1});
  const auto rep = build_representation(pyr, generic_weight(pyr));
  const auto gens = generator_series(rep, 8);
  const auto roots = higher_root_series(gens, pyr);
  for (int r = 1; r <= 6; ++r) {
    CHECK(roots.e_series(1, 3).coeff(r) == commutator(gens.e_at(1, r), gens.e_at(2, 1)));
    CHECK(roots.f_series(3, 1).coeff(r) == commutator(gens.f_at(2, 1), gens.f_at(1, r)));
  }
}

TEST_CASE("reference shapes: every cdet coefficient is central") {
  for (const auto& rows : std::vector<std::vector<int>>{{1, 2}, {2, 2}, {1, 1, 1}, {1, 2, 2}}) {
    const auto pyr = Pyramid::from_rows(rows);
    const auto rep = build_representation(pyr, generic_weight(pyr));
    const auto cr = analyze_center(rep);
    CHECK(cr.cdet_scalar);
    for (const auto& rec : cr.checks) CHECK_MESSAGE(rec.status == Status::Pass, (rec.name + ": " + rec.witness));
    MESSAGE(to_string(pyr) << ": cdet " << (cr.matches_an ? "equals" : "differs from") << " the A_n scalar");
  }
}
