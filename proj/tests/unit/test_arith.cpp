#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "wgt/arith/inv_series.hpp"
#include "wgt/arith/mpoly.hpp"
#include "wgt/arith/mrat.hpp"
#include "wgt/arith/scalar.hpp"
#include "wgt/arith/sparse_matrix.hpp"
#include "wgt/arith/unipoly.hpp"
#include "wgt/errors.hpp"

using namespace wgt;

namespace {

Scalar q(long n, long d = 1) {
  Scalar s(n, d);
  s.canonicalize();
  return s;
}

ScalarPoly poly(std::vector<Scalar> c) { return ScalarPoly(Scalar(0), std::move(c)); }

}  // namespace

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_scalar("5/2") == q(5, 2));
  CHECK(parse_scalar(" -3 ") == q(-3));
  CHECK(parse_scalar("4/6") == q(2, 3));
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  CHECK(to_string(q(3)) == "3");
  CHECK(to_fraction_string(q(3)) == "3/1");
  CHECK(to_fraction_string(q(-1, 2)) == "-1/2");
  CHECK(binomial(5, 2) == 10);
  CHECK(factorial(5) == 120);
  const auto e = elementary_symmetric({q(1), q(2), q(3)});
  CHECK(e == std::vector<Scalar>{q(1), q(6), q(11), q(6)});
}

TEST_CASE("sparse matrix basics") {
  SparseMatrix m(3);
  m.add_to(0, 1, 2);
  m.add_to(0, 1, -2);
  CHECK(m.is_zero());
  CHECK(SparseMatrix::scalar(3, 4).is_scalar());
  Scalar c;
  CHECK(SparseMatrix::scalar(3, q(1, 2)).is_scalar(&c));
  CHECK(c == q(1, 2));

  gen::Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 70));
    const auto a = rng.matrix(n);
    const auto b = rng.matrix(n);
    CHECK(multiply(a, b) == multiply_reference(a, b));
  }
}

TEST_CASE("sparse inverse") {
  gen::Rng rng(12);
  int found = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = rng.matrix(6, 0.6) + SparseMatrix::identity(6);
    const auto inv = inverse(a);
    if (!inv) continue;
    ++found;
    CHECK(a * *inv == SparseMatrix::identity(6));
    CHECK(*inv * a == SparseMatrix::identity(6));
  }
  CHECK(found > 0);
  SparseMatrix singular(2);
  singular.add_to(0, 0, 1);
  CHECK_FALSE(inverse(singular).has_value());
}

TEST_CASE("lagrange interpolation examples") {
  CHECK(lagrange_interpolate<Scalar>({q(0)}, {q(5)}, 0) == poly({q(5)}));
  CHECK(lagrange_interpolate<Scalar>({q(0), q(1)}, {q(1), q(2)}, 1) == poly({q(1), q(1)}));
  SparseMatrix v(3);
  v.add_to(1, 0, 2);
  const auto pm = lagrange_interpolate<SparseMatrix>({q(-1, 2)}, {v}, 0);
  CHECK(pm.degree() == 0);
  CHECK(pm.coeff(0) == v);
  CHECK_THROWS_AS(lagrange_interpolate<Scalar>({q(1), q(1)}, {q(1), q(2)}, 1), DegenerateNodes);
  CHECK_THROWS_AS(lagrange_interpolate<Scalar>({q(1), q(2)}, {q(1)}, 1), ArityError);
}

TEST_CASE("interpolation round trip on random polynomials") {
  gen::Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = static_cast<int>(rng.integer(0, 6));
    std::vector<Scalar> c;
    for (int k = 0; k <= d; ++k) c.push_back(rng.rational());
    const auto p = poly(c);
    std::vector<Scalar> nodes;
    while (static_cast<int>(nodes.size()) <= d) {
      const Scalar x = rng.rational(20, 7);
      if (std::find(nodes.begin(), nodes.end(), x) == nodes.end()) nodes.push_back(x);
    }
    std::vector<Scalar> values;
    for (const auto& x : nodes) values.push_back(p.evaluate(x));
    CHECK(lagrange_interpolate(nodes, values, d) == p);
  }
}

TEST_CASE("series inverse") {
  auto one = InvSeries<Scalar>::constant(q(1), 3);
  CHECK(series_inverse(one, 3) == one);

  InvSeries<Scalar> s(Scalar(0), 3);
  s.coeff(0) = 1;
  s.coeff(1) = 1;
  const auto inv = series_inverse(s, 3);
  CHECK(inv.coeff(0) == 1);
  CHECK(inv.coeff(1) == -1);
  CHECK(inv.coeff(2) == 1);
  CHECK(inv.coeff(3) == -1);

  // diag(1 + a u^-1) against the entrywise geometric series.
  const std::vector<Scalar> a{q(2), q(-1, 3), q(5, 7)};
  MatrixSeries ms(SparseMatrix(3), 4);
  ms.coeff(0) = SparseMatrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) ms.coeff(1).add_to(i, i, a[i]);
  const auto minv = series_inverse(ms, 4);
  for (int r = 0; r <= 4; ++r) {
    for (std::size_t i = 0; i < 3; ++i) {
      Scalar expect = 1;
      for (int k = 0; k < r; ++k) expect *= -a[i];
      CHECK(minv.coeff(r).at(i, i) == expect);
    }
  }

  MatrixSeries singular(SparseMatrix(2), 2);
  CHECK_THROWS_AS(series_inverse(singular, 2), SingularLead);
}

TEST_CASE("double series inverse is the identity map") {
  gen::Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    MatrixSeries s(SparseMatrix(4), 5);
    s.coeff(0) = SparseMatrix::identity(4) + rng.matrix(4, 0.2) * q(1, 10);
    if (!inverse(s.coeff(0))) continue;
    for (int r = 1; r <= 5; ++r) s.coeff(r) = rng.matrix(4, 0.3);
    const auto inv = series_inverse(s, 5);
    CHECK(series_inverse(inv, 5) == s);
    const auto prod = s * inv;
    CHECK(prod.coeff(0) == SparseMatrix::identity(4));
    for (int r = 1; r <= 5; ++r) CHECK(prod.coeff(r).is_zero());
  }
}

TEST_CASE("poly_to_inv_series") {
  {
    const auto s = poly_to_inv_series(poly({q(0), q(0), q(1)}), {{q(0), 2}}, 4);
    CHECK(s.coeff(0) == 1);
    for (int r = 1; r <= 4; ++r) CHECK(s.coeff(r) == 0);
  }
  {
    const auto s = poly_to_inv_series(poly({q(3), q(1)}), {{q(0), 1}}, 4);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 3);
    CHECK(s.coeff(2) == 0);
  }
  {
    // (u+5/2)(u-1/2) / (u(u-1)): long division in u^-1 as the oracle.
    const ScalarPoly p = poly({q(-5, 4), q(2), q(1)});
    const ScalarPoly d = poly({q(0), q(-1), q(1)});
    const int order = 6;
    // Solve p = d * sum c_r u^-r term by term: c_r = p_{2-r} + c_{r-1} (since d = u^2 - u).
    std::vector<Scalar> c(order + 1, Scalar(0));
    for (int r = 0; r <= order; ++r) {
      const Scalar pr = (2 - r >= 0) ? p.coeff(2 - r) : Scalar(0);
      c[r] = pr + (r > 0 ? c[r - 1] : Scalar(0));
    }
    const auto s = poly_to_inv_series(p, {{q(0), 1}, {q(1), 1}}, order);
    for (int r = 0; r <= order; ++r) CHECK(s.coeff(r) == c[r]);
    CHECK(s.coeff(1) == 3);
  }
  CHECK_THROWS_AS(poly_to_inv_series(poly({q(0), q(0), q(1)}), {{q(0), 1}}, 3), ArityError);
}

TEST_CASE("series products through the order") {
  gen::Rng rng(15);
  // P = prefactor * series must hold through the truncation order.
  for (int trial = 0; trial < 20; ++trial) {
    const int m = static_cast<int>(rng.integer(1, 4));
    std::vector<RootMultiplicity> pre;
    std::vector<Scalar> roots;
    for (int k = 0; k < m; ++k) {
      const Scalar r = q(rng.integer(-2, 2));
      pre.push_back({r, 1});
      roots.push_back(r);
    }
    std::vector<Scalar> c;
    const int d = static_cast<int>(rng.integer(0, m));
    for (int k = 0; k <= d; ++k) c.push_back(rng.rational());
    const auto p = poly(c);
    const int order = 8;
    const auto s = poly_to_inv_series(p, pre, order);
    // Multiply back: prefactor(u) * s(u), compare coefficients of u^m .. u^(m - order).
    const auto qpoly = poly_from_roots(roots);
    for (int e = m; e >= m - order; --e) {
      Scalar acc = 0;
      for (int j = 0; j <= m; ++j) {
        const int r = j - e;
        if (r >= 0 && r <= order) acc += qpoly.coeff(j) * s.coeff(r);
      }
      CHECK(acc == (e >= 0 ? p.coeff(e) : Scalar(0)));
    }
  }
}

TEST_CASE("poly_shift") {
  CHECK(poly_shift(poly({q(0), q(1)}), q(1)) == poly({q(1), q(1)}));
  CHECK(poly_shift(poly({q(0), q(0), q(1)}), q(-1)) == poly({q(1), q(-2), q(1)}));
  const auto p = poly({q(-5, 4), q(2), q(1)});
  // (u+3/2)(u-3/2) = u^2 - 9/4
  CHECK(poly_shift(p, q(-1)) == poly({q(-9, 4), q(0), q(1)}));
  gen::Rng rng(16);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Scalar> c;
    for (int k = 0; k <= 5; ++k) c.push_back(rng.rational());
    const auto pp = poly(c);
    const Scalar s = rng.rational();
    CHECK(poly_shift(poly_shift(pp, s), -s) == pp);
    const Scalar x = rng.rational();
    CHECK(poly_shift(pp, s).evaluate(x) == pp.evaluate(x + s));
  }
}

TEST_CASE("series argument shift agrees with polynomial shift") {
  // u^-1 shifted by c equals 1/(u+c) = u^-1 - c u^-2 + c^2 u^-3 ...
  InvSeries<Scalar> s(Scalar(0), 5);
  s.coeff(1) = 1;
  const auto t = s.shift_argument(q(2));
  Scalar expect = 1;
  for (int r = 1; r <= 5; ++r) {
    CHECK(t.coeff(r) == expect);
    expect *= -2;
  }
}

TEST_CASE("monomial order") {
  const auto x0 = Monomial::var(0);
  const auto x1 = Monomial::var(1);
  CHECK(Monomial::lex_compare(x0, x1 * x1) > 0);
  CHECK(Monomial::lex_compare(x0 * x1, x0) > 0);
  CHECK(Monomial::lex_compare(Monomial(), x1) < 0);
  CHECK((x0 * x1).divides(x0 * x0 * x1));
  CHECK((x0 * x0 * x1).quotient(x0 * x1) == x0);
}

TEST_CASE("mpoly arithmetic and gcd") {
  const MPoly x = MPoly::var(0);
  const MPoly y = MPoly::var(1);
  const MPoly z = MPoly::var(2);
  const MPoly a = (x + y) * (x - y * Scalar(2) + MPoly(1));
  CHECK(exact_divide(a, x + y).value() == x - y * Scalar(2) + MPoly(1));
  CHECK_FALSE(exact_divide(a, x + z).has_value());
  CHECK(gcd(a, (x + y) * (z + MPoly(3))) == x + y);
  CHECK(gcd(x * y, y * z) == y);
  CHECK(gcd(MPoly(Scalar(3)), x).is_constant());
  CHECK(gcd(MPoly(), x * Scalar(2)) == x);

  gen::Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const MPoly g = rng.mpoly(3, 2, 2);
    const MPoly p = rng.mpoly(3, 2, 2);
    const MPoly r = rng.mpoly(3, 2, 1);
    if (g.is_zero() || p.is_zero() || r.is_zero()) continue;
    const MPoly h = gcd(g * p, g * r);
    // g divides the gcd and the gcd divides both inputs.
    CHECK(exact_divide(h, g.monic()).has_value());
    CHECK(exact_divide(g * p, h).has_value());
    CHECK(exact_divide(g * r, h).has_value());
  }
}

TEST_CASE("mpoly substitution and derivative") {
  const MPoly x = MPoly::var(0);
  const MPoly y = MPoly::var(1);
  const MPoly p = x.pow(3) * y + x * Scalar(2);
  CHECK(p.derivative(0) == x.pow(2) * y * Scalar(3) + MPoly(Scalar(2)));
  CHECK(p.substitute(0, y + MPoly(1)) == (y + MPoly(1)).pow(3) * y + (y + MPoly(1)) * Scalar(2));
  CHECK(p.substitute(1, q(2)) == x.pow(3) * Scalar(2) + x * Scalar(2));
  CHECK(p.evaluate([](int v) { return v == 0 ? q(2) : q(3); }) == 28);
  CHECK(p.rename([](int v) { return 1 - v; }) == y.pow(3) * x + y * Scalar(2));
}

TEST_CASE("mrat is a field") {
  const MPoly x = MPoly::var(0);
  const MPoly y = MPoly::var(1);
  const MRat r(x * x - y * y, x + y);
  CHECK(r == MRat(x - y));
  CHECK(r.is_polynomial());
  CHECK(MRat(x, x * Scalar(2)) == MRat(q(1, 2)));
  CHECK_THROWS_AS(MRat(x, MPoly()), ArityError);
  CHECK_THROWS_AS(MRat(x, y).evaluate([](int) { return q(0); }), EvaluationError);

  gen::Rng rng(18);
  auto random_rat = [&] {
    MPoly d = rng.mpoly(2, 2, 1);
    if (d.is_zero()) d = MPoly(Scalar(1));
    return MRat(rng.mpoly(2, 2, 2), d);
  };
  for (int trial = 0; trial < 30; ++trial) {
    const MRat a = random_rat();
    const MRat b = random_rat();
    const MRat c = random_rat();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MRat());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    // Derivative obeys the Leibniz rule.
    CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
  }
}
