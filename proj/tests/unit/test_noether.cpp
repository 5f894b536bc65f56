#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "gen.hpp"
#include "wgt/errors.hpp"
#include "wgt/noether.hpp"

using namespace wgt;

namespace {

WeylElement random_weyl(gen::Rng& rng, int n) {
  WeylElement a(n);
  for (int t = 0; t < 3; ++t) {
    DiffIndex alpha(static_cast<std::size_t>(n));
    for (auto& e : alpha) e = static_cast<int>(rng.integer(0, 2));
    a.add(alpha, MRat(rng.mpoly(n, 2, 2)));
  }
  return a;
}

ShiftAlgebraElement random_shift(gen::Rng& rng, int n) {
  ShiftAlgebraElement a(n);
  for (int t = 0; t < 2; ++t) {
    std::vector<int> m(static_cast<std::size_t>(n));
    for (auto& e : m) e = static_cast<int>(rng.integer(-1, 1));
    a.add(m, rng.mpoly(n, 2, 2));
  }
  return a;
}

std::vector<int> transposition(int n, int i) {
  std::vector<int> g(static_cast<std::size_t>(n));
  std::iota(g.begin(), g.end(), 0);
  std::swap(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i + 1)]);
  return g;
}

SigmaOperator sigma_op(int n, std::vector<std::pair<DiffIndex, MPoly>> terms) {
  SigmaOperator op;
  op.n = n;
  for (auto& [a, c] : terms) op.terms.emplace(a, MRat(c));
  return op;
}

MPoly s(int j) { return MPoly::var(j - 1); }

}  // namespace

TEST_CASE("normal ordering") {
  const auto x1 = WeylElement::x(2, 1);
  const auto x2 = WeylElement::x(2, 2);
  const auto d1 = WeylElement::d(2, 1);
  const auto one = WeylElement::scalar(2, MRat(1));
  CHECK(d1 * x1 == x1 * d1 + one);
  CHECK(d1 * x2 == x2 * d1);
  CHECK((x1 * d1) * (x1 * d1) == x1 * x1 * d1 * d1 + x1 * d1);
  CHECK(d1.apply(MRat(MPoly::var(0).pow(3))) == MRat(MPoly::var(0).pow(2) * Scalar(3)));
}

TEST_CASE("Weyl products are associative") {
  gen::Rng rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 2));
    const auto a = random_weyl(rng, n);
    const auto b = random_weyl(rng, n);
    const auto c = random_weyl(rng, n);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("S_n action") {
  gen::Rng rng(67);
  const int n = 3;
  const auto g = transposition(n, 0);
  const auto h = transposition(n, 1);
  std::vector<int> gh(n);
  for (int i = 0; i < n; ++i) gh[static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(h[static_cast<std::size_t>(i)])];
  for (int trial = 0; trial < 8; ++trial) {
    const auto a = random_weyl(rng, n);
    const auto b = random_weyl(rng, n);
    CHECK(sn_act(g, sn_act(h, a)) == sn_act(gh, a));
    CHECK(sn_act(g, a * b) == sn_act(g, a) * sn_act(g, b));
  }
  WeylElement grad(n);
  for (int i = 1; i <= n; ++i) grad = grad + WeylElement::d(n, i);
  CHECK(is_symmetric(grad));
  CHECK_FALSE(is_symmetric(WeylElement::x(2, 1) * WeylElement::d(2, 2)));
  for (int m = 2; m <= 3; ++m) {
    const SymData sym = sym_data(m);
    CHECK(is_symmetric(WeylElement::scalar(m, MRat(sym.Delta))));
    for (int i = 0; i + 1 < m; ++i) {
      auto swap = [i](int v) { return v == i ? i + 1 : (v == i + 1 ? i : v); };
      CHECK(sym.delta.rename(swap) == -sym.delta);
    }
  }
}

TEST_CASE("shift algebra and the isomorphism") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& c : iso_checks(n)) CHECK_MESSAGE(c.status == Status::Pass, (c.name + ": " + c.witness));
  }
  using S = ShiftAlgebraElement;
  // sigma_k t_k = (t_k - 1) sigma_k
  CHECK(S::sigma(2, 1) * S::t(2, 1) == (S::t(2, 1) - S::scalar(2, Scalar(1))) * S::sigma(2, 1));
  CHECK(S::sigma(2, 1) * S::t(2, 2) == S::t(2, 2) * S::sigma(2, 1));
  // t_k sigma_k^-1 sigma_k - sigma_k t_k sigma_k^-1 = 1
  const S tk = S::t(1, 1);
  const S sk = S::sigma(1, 1);
  const S sinv = S::sigma(1, 1, -1);
  CHECK(tk * sinv * sk - sk * tk * sinv == S::scalar(1, Scalar(1)));

  gen::Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 2));
    const auto a = random_shift(rng, n);
    const auto b = random_shift(rng, n);
    CHECK(shift_algebra_iso(a * b) == shift_algebra_iso(a) * shift_algebra_iso(b));
    CHECK(weyl_to_shift(shift_algebra_iso(a)) == a);
  }
  const auto bad = WeylElement::scalar(1, MRat(MPoly(Scalar(1)), MPoly::var(0) + MPoly(Scalar(1))));
  CHECK_THROWS_AS(weyl_to_shift(bad), ArityError);
}

TEST_CASE("symmetric polynomials in elementary coordinates") {
  const SymData sym = sym_data(2);
  const MPoly p2 = MPoly::var(0).pow(2) + MPoly::var(1).pow(2);
  CHECK(symmetric_to_sigma(p2, sym) == s(1).pow(2) - s(2) * Scalar(2));
  CHECK_THROWS_AS(symmetric_to_sigma(MPoly::var(0), sym), NotInvariant);

  gen::Rng rng(73);
  for (int n = 1; n <= 3; ++n) {
    const SymData sd = sym_data(n);
    for (int trial = 0; trial < 5; ++trial) {
      const MPoly f = rng.mpoly(n, 3, 2);
      // Symmetrize over all permutations.
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      MPoly sym_f;
      do {
        sym_f += f.rename([&](int v) { return perm[static_cast<std::size_t>(v)]; });
      } while (std::next_permutation(perm.begin(), perm.end()));
      const MPoly in_sigma = symmetric_to_sigma(sym_f, sd);
      CHECK(in_sigma.compose([&](int v) { return sd.sigma[static_cast<std::size_t>(v)]; }) == sym_f);
    }
  }
}

TEST_CASE("rewriting in symmetric coordinates, n = 2") {
  const int n = 2;
  WeylElement euler(n), grad(n), square(n);
  for (int i = 1; i <= n; ++i) {
    const auto x = WeylElement::x(n, i);
    const auto d = WeylElement::d(n, i);
    euler = euler + x * d;
    grad = grad + d;
    square = square + x * x * d;
  }
  CHECK(rewrite_in_sigma(euler).terms == sigma_op(n, {{{1, 0}, s(1)}, {{0, 1}, s(2) * Scalar(2)}}).terms);
  CHECK(rewrite_in_sigma(grad).terms == sigma_op(n, {{{1, 0}, MPoly(Scalar(2))}, {{0, 1}, s(1)}}).terms);
  CHECK(rewrite_in_sigma(square).terms ==
        sigma_op(n, {{{1, 0}, s(1).pow(2) - s(2) * Scalar(2)}, {{0, 1}, s(1) * s(2)}}).terms);
  for (const auto& op : {euler, grad, square}) {
    CHECK(sigma_to_x(rewrite_in_sigma(op)) == op);
    for (const auto& c : rewrite_checks(op)) CHECK_MESSAGE(c.status == Status::Pass, (c.name + ": " + c.witness));
  }
  CHECK_THROWS_AS(rewrite_in_sigma(WeylElement::d(2, 1)), NotInvariant);
  CHECK_THROWS_AS(rewrite_in_sigma(WeylElement::d(4, 1) + WeylElement::d(4, 2) + WeylElement::d(4, 3) + WeylElement::d(4, 4)),
                  ArityError);
}

TEST_CASE("rewriting with discriminant denominators and n = 1, 3") {
  const SymData sym = sym_data(2);
  WeylElement grad(2);
  for (int i = 1; i <= 2; ++i) grad = grad + WeylElement::d(2, i);
  const auto localized = WeylElement::scalar(2, MRat(MPoly(Scalar(1)), sym.Delta)) * grad;
  const auto op = rewrite_in_sigma(localized);
  bool has_den = false;
  for (const auto& [beta, g] : op.terms) has_den = has_den || !g.den().is_constant();
  CHECK(has_den);
  for (const auto& c : rewrite_checks(localized)) CHECK_MESSAGE(c.status == Status::Pass, (c.name + ": " + c.witness));

  const auto one = WeylElement::x(1, 1) * WeylElement::d(1, 1);
  CHECK(rewrite_in_sigma(one).terms == sigma_op(1, {{{1}, s(1)}}).terms);

  WeylElement lap(3);
  for (int i = 1; i <= 3; ++i) lap = lap + WeylElement::d(3, i) * WeylElement::d(3, i);
  CHECK(sigma_to_x(rewrite_in_sigma(lap)) == lap);
}
