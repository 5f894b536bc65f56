#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gen.hpp"
#include "wgt/errors.hpp"
#include "wgt/galois.hpp"

using namespace wgt;

namespace {

Scalar q(long n, long d = 1) {
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

HighestWeight gl2_weight() {
  HighestWeight w;
  w.roots = {{q(5, 2)}, {q(1, 2)}};
  return w;
}

ShiftMonomial zero_shift(const GaloisVars& vars) { return ShiftMonomial(vars.layout().size(), 0); }

}  // namespace

TEST_CASE("gl2 images against the representation") {
  const auto pyr = Pyramid::from_rows({1, 1});
  const auto rep = build_representation(pyr, gl2_weight());
  const GaloisVars vars(pyr);
  // X+ for row 1 has no u-factor and no denominator.
  const MPoly expect = -((MPoly::var(vars.x(2, 1, 1)) - MPoly::var(vars.x(1, 1, 1))) *
                         (MPoly::var(vars.x(2, 2, 1)) - MPoly::var(vars.x(1, 1, 1))));
  CHECK(x_plus(vars, 1, 1, 1) == MRat(expect));
  CHECK(x_minus(vars, 1, 1, 1) == MRat(1));
  for (const Scalar& u0 : {q(0), q(7), q(-3), q(2, 7)}) {
    CHECK(act_on_basis(t_image(ImageKind::B, 1, vars), rep.basis, u0) == evaluate(rep.B_poly(1), u0));
    CHECK(act_on_basis(t_image(ImageKind::C, 1, vars), rep.basis, u0) == evaluate(rep.C_poly(1), u0));
    for (int r = 1; r <= 2; ++r) {
      const auto a = act_on_basis(t_image(ImageKind::A, r, vars), rep.basis, u0);
      CHECK(a.is_diagonal());
      CHECK(a == evaluate(rep.A_poly(r), u0));
    }
  }
  const auto c = SkewElement::term(zero_shift(vars), MRat(q(3, 4)));
  CHECK(act_on_basis(c, rep.basis, 0) == SparseMatrix::scalar(3, q(3, 4)));
  CHECK_THROWS_AS(t_image(ImageKind::B, 2, vars), IndexError);
}

TEST_CASE("orbit sums") {
  // Row 2 of rows (1,2,2) carries p_1 + p_2 = 3 variables.
  const auto pyr = Pyramid::from_rows({1, 2, 2});
  const GaloisVars vars(pyr);
  const PermGroupG group(vars);
  const auto trivial = orbit_sum(MRat(1), zero_shift(vars), group);
  CHECK(trivial.terms().size() == 1);
  CHECK(*trivial.coeff(zero_shift(vars)) == MRat(1));

  const auto orbit = orbit_sum(MRat(1), unit_shift(vars, 2, 1, 1), group);
  CHECK(orbit.terms().size() == 3);
  CHECK(check_invariance(orbit, group));

  // gl2: row 1 has a single variable, so the orbit is one term.
  const GaloisVars v2(Pyramid::from_rows({1, 1}));
  CHECK(orbit_sum(x_plus(v2, 1, 1, 1), unit_shift(v2, 1, 1, 1), PermGroupG(v2)).terms().size() == 1);
}

TEST_CASE("orbit sums do not depend on the generating set") {
  for (const auto& rows : std::vector<std::vector<int>>{{1, 2}, {2, 2}, {1, 2, 2}}) {
    const auto pyr = Pyramid::from_rows(rows);
    const GaloisVars vars(pyr);
    const PermGroupG group(vars);
    auto gens = group.generators();
    std::vector<PermGroupG::Perm> redundant(gens.rbegin(), gens.rend());
    for (std::size_t a = 0; a + 1 < gens.size(); ++a) {
      PermGroupG::Perm composite(gens[a].size());
      for (std::size_t s = 0; s < composite.size(); ++s) composite[s] = gens[a][gens[a + 1][s]];
      redundant.push_back(composite);
    }
    redundant.push_back(gens.front());
    const PermGroupG other(vars, redundant);
    for (int r = 1; r < pyr.n(); ++r) {
      const auto lead = unit_shift(vars, r, 1, 1);
      CHECK(orbit_sum(x_plus(vars, r, 1, 1), lead, group) == orbit_sum(x_plus(vars, r, 1, 1), lead, other));
      CHECK(orbit_sum(x_plus(vars, r, 1, 1), lead, group) == t_image(ImageKind::B, r, vars));
    }
  }
}

TEST_CASE("invariance") {
  const auto pyr = Pyramid::from_rows({1, 2, 2});
  const GaloisVars vars(pyr);
  const PermGroupG group(vars);
  for (int r = 1; r <= pyr.n(); ++r) {
    CHECK(check_invariance(t_image(ImageKind::A, r, vars), group));
    if (r < pyr.n()) {
      CHECK(check_invariance(t_image(ImageKind::B, r, vars), group));
      CHECK(check_invariance(t_image(ImageKind::C, r, vars), group));
    }
  }
  CHECK_FALSE(check_invariance(SkewElement::term(unit_shift(vars, 2, 1, 1), MRat(MPoly::var(vars.x(2, 1, 1)))), group));
  CHECK(check_invariance(SkewElement::term(zero_shift(vars), MRat(q(5))), group));
}

TEST_CASE("skew products evaluate as reversed matrix products") {
  const auto pyr = Pyramid::from_rows({1, 2});
  const auto rep = build_representation(pyr, generic_weight(pyr));
  const GaloisVars vars(pyr);
  const auto a = t_image(ImageKind::A, 1, vars);
  const auto b = t_image(ImageKind::B, 1, vars);
  const auto c = t_image(ImageKind::C, 1, vars);
  for (const Scalar& u0 : {q(0), q(5, 3)}) {
    const auto ma = act_on_basis(a, rep.basis, u0);
    CHECK(act_on_basis(skew_multiply(a, b), rep.basis, u0) == act_on_basis(b, rep.basis, u0) * ma);
    CHECK(act_on_basis(skew_multiply(c, a), rep.basis, u0) == ma * act_on_basis(c, rep.basis, u0));
  }
  // shift_coefficient moves x by the shift.
  const MRat x = MRat(MPoly::var(vars.x(1, 1, 1)));
  CHECK(shift_coefficient(x, unit_shift(vars, 1, 1, 1)) == MRat(MPoly::var(vars.x(1, 1, 1)) + MPoly(Scalar(1))));
}

TEST_CASE("cross check on small shapes, including non-node points") {
  gen::Rng rng(17);
  for (const auto& rows : std::vector<std::vector<int>>{{2}, {1, 1}, {1, 2}, {2, 2}}) {
    const auto pyr = Pyramid::from_rows(rows);
    const auto rep = build_representation(pyr, generic_weight(pyr));
    std::vector<Scalar> pts{q(0), q(7), q(-3)};
    pts.push_back(rng.rational(20, 11));
    for (const auto& rec : cross_check(rep, pts)) {
      CHECK_MESSAGE(rec.status != Status::Fail, (rec.name + ": " + rec.witness));
    }
  }
}
