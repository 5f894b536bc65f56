#include "wgt/noether.hpp"

#include <numeric>

#include "wgt/errors.hpp"

namespace wgt {

namespace {

// All gamma with 0 <= gamma <= alpha componentwise.
std::vector<DiffIndex> lower_indices(const DiffIndex& alpha) {
  std::vector<DiffIndex> out{DiffIndex(alpha.size(), 0)};
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    std::vector<DiffIndex> next;
    for (const auto& g : out) {
      for (int c = 0; c <= alpha[i]; ++c) {
        next.push_back(g);
        next.back()[i] = c;
      }
    }
    out = std::move(next);
  }
  return out;
}

// Multi-indices of total degree <= d.
std::vector<DiffIndex> indices_up_to(int n, int d) {
  std::vector<DiffIndex> out;
  for (const auto& a : lower_indices(DiffIndex(static_cast<std::size_t>(n), d))) {
    if (std::accumulate(a.begin(), a.end(), 0) <= d) out.push_back(a);
  }
  return out;
}

MRat derive(MRat f, const DiffIndex& gamma) {
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (int c = 0; c < gamma[i] && !f.is_zero(); ++c) f = f.derivative(static_cast<int>(i));
  }
  return f;
}

std::string var_name(const char* prefix, int v) { return prefix + std::to_string(v + 1); }

std::string index_string(const DiffIndex& alpha, const char* prefix) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += prefix + std::to_string(i + 1);
    if (alpha[i] > 1) out += "^" + std::to_string(alpha[i]);
  }
  return out;
}

std::string operator_string(const std::map<DiffIndex, MRat>& terms, const char* var, const char* dvar) {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [alpha, c] = *it;
    const std::string coeff = c.to_string([&](int v) { return var_name(var, v); });
    const std::string d = index_string(alpha, dvar);
    if (!out.empty()) out += " + ";
    if (d.empty()) out += coeff;
    else if (c == MRat(1)) out += d;
    else out += "(" + coeff + ")*" + d;
  }
  return out;
}

// prod x_i^{m_i} as a rational function, negative exponents in the denominator.
MRat laurent_monomial(const std::vector<int>& m) {
  Monomial num;
  Monomial den;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > 0) num = num * Monomial::var(static_cast<int>(i), m[i]);
    if (m[i] < 0) den = den * Monomial::var(static_cast<int>(i), -m[i]);
  }
  return MRat::from_coprime(MPoly::term(Scalar(1), num), MPoly::term(Scalar(1), den));
}

}  // namespace

// ---------------------------------------------------------------- Weyl algebra

WeylElement WeylElement::scalar(int n, const MRat& c) { return term(n, c, DiffIndex(static_cast<std::size_t>(n), 0)); }

WeylElement WeylElement::x(int n, int i) {
  if (i < 1 || i > n) throw IndexError("x_" + std::to_string(i) + " out of range");
  return scalar(n, MRat(MPoly::var(i - 1)));
}

WeylElement WeylElement::d(int n, int i) {
  if (i < 1 || i > n) throw IndexError("d_" + std::to_string(i) + " out of range");
  DiffIndex a(static_cast<std::size_t>(n), 0);
  a[static_cast<std::size_t>(i - 1)] = 1;
  return term(n, MRat(1), a);
}

WeylElement WeylElement::term(int n, const MRat& c, DiffIndex alpha) {
  if (static_cast<int>(alpha.size()) != n) throw ArityError("differential index has the wrong length");
  WeylElement out(n);
  out.add(alpha, c);
  return out;
}

int WeylElement::order() const {
  int best = 0;
  for (const auto& [a, c] : terms_) best = std::max(best, std::accumulate(a.begin(), a.end(), 0));
  return best;
}

void WeylElement::add(const DiffIndex& alpha, const MRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(alpha);
  if (it == terms_.end()) {
    terms_.emplace(alpha, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MRat WeylElement::apply(const MRat& f) const {
  MRat out;
  for (const auto& [a, c] : terms_) out += c * derive(f, a);
  return out;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  if (a.n_ != b.n_) throw ArityError("Weyl elements over different n");
  WeylElement out = a;
  for (const auto& [al, c] : b.terms_) out.add(al, c);
  return out;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  if (a.n_ != b.n_) throw ArityError("Weyl elements over different n");
  WeylElement out = a;
  for (const auto& [al, c] : b.terms_) out.add(al, -c);
  return out;
}

// (c d^alpha)(e d^beta) = sum_{gamma <= alpha} binom(alpha, gamma) c (d^gamma e) d^{alpha - gamma + beta}
WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.n_ != b.n_) throw ArityError("Weyl elements over different n");
  WeylElement out(a.n_);
  for (const auto& [alpha, c] : a.terms_) {
    const auto gammas = lower_indices(alpha);
    for (const auto& [beta, e] : b.terms_) {
      for (const auto& gamma : gammas) {
        const MRat de = derive(e, gamma);
        if (de.is_zero()) continue;
        Scalar mult(1);
        DiffIndex idx(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) {
          mult *= binomial(alpha[i], gamma[i]);
          idx[i] = alpha[i] - gamma[i] + beta[i];
        }
        out.add(idx, c * de * MRat(mult));
      }
    }
  }
  return out;
}

WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b) { return a * b; }

std::string WeylElement::to_string() const { return operator_string(terms_, "x", "d"); }

WeylElement sn_act(const std::vector<int>& g, const WeylElement& a) {
  if (static_cast<int>(g.size()) != a.n()) throw ArityError("permutation length differs from n");
  WeylElement out(a.n());
  for (const auto& [alpha, c] : a.terms()) {
    DiffIndex moved(alpha.size(), 0);
    for (std::size_t i = 0; i < alpha.size(); ++i) moved[static_cast<std::size_t>(g[i])] = alpha[i];
    out.add(moved, c.rename([&](int v) { return g.at(static_cast<std::size_t>(v)); }));
  }
  return out;
}

bool is_symmetric(const WeylElement& a) {
  for (int i = 0; i + 1 < a.n(); ++i) {
    std::vector<int> g(static_cast<std::size_t>(a.n()));
    std::iota(g.begin(), g.end(), 0);
    std::swap(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(i + 1)]);
    if (!(sn_act(g, a) == a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- shift algebra

ShiftAlgebraElement ShiftAlgebraElement::scalar(int n, const Scalar& c) {
  return term(n, MPoly(c), std::vector<int>(static_cast<std::size_t>(n), 0));
}

ShiftAlgebraElement ShiftAlgebraElement::t(int n, int k) {
  if (k < 1 || k > n) throw IndexError("t_" + std::to_string(k) + " out of range");
  return term(n, MPoly::var(k - 1), std::vector<int>(static_cast<std::size_t>(n), 0));
}

ShiftAlgebraElement ShiftAlgebraElement::sigma(int n, int k, int power) {
  if (k < 1 || k > n) throw IndexError("sigma_" + std::to_string(k) + " out of range");
  std::vector<int> m(static_cast<std::size_t>(n), 0);
  m[static_cast<std::size_t>(k - 1)] = power;
  return term(n, MPoly(Scalar(1)), m);
}

ShiftAlgebraElement ShiftAlgebraElement::term(int n, const MPoly& r, std::vector<int> shift) {
  if (static_cast<int>(shift.size()) != n) throw ArityError("shift vector has the wrong length");
  ShiftAlgebraElement out(n);
  out.add(shift, r);
  return out;
}

void ShiftAlgebraElement::add(const std::vector<int>& shift, const MPoly& r) {
  if (r.is_zero()) return;
  auto it = terms_.find(shift);
  if (it == terms_.end()) {
    terms_.emplace(shift, r);
    return;
  }
  it->second += r;
  if (it->second.is_zero()) terms_.erase(it);
}

ShiftAlgebraElement operator+(const ShiftAlgebraElement& a, const ShiftAlgebraElement& b) {
  if (a.n_ != b.n_) throw ArityError("shift elements over different n");
  ShiftAlgebraElement out = a;
  for (const auto& [m, r] : b.terms_) out.add(m, r);
  return out;
}

ShiftAlgebraElement operator-(const ShiftAlgebraElement& a, const ShiftAlgebraElement& b) {
  if (a.n_ != b.n_) throw ArityError("shift elements over different n");
  ShiftAlgebraElement out = a;
  for (const auto& [m, r] : b.terms_) out.add(m, -r);
  return out;
}

// (r1 sigma^m1)(r2 sigma^m2) = r1 r2(t - m1) sigma^{m1 + m2}
ShiftAlgebraElement operator*(const ShiftAlgebraElement& a, const ShiftAlgebraElement& b) {
  if (a.n_ != b.n_) throw ArityError("shift elements over different n");
  ShiftAlgebraElement out(a.n_);
  for (const auto& [m1, r1] : a.terms_) {
    for (const auto& [m2, r2] : b.terms_) {
      const MPoly twisted = r2.compose([&](int v) { return MPoly::var(v) - MPoly(Scalar(m1[static_cast<std::size_t>(v)])); });
      std::vector<int> m(m1.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      out.add(m, r1 * twisted);
    }
  }
  return out;
}

std::string ShiftAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, r] : terms_) {
    std::string shift;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!shift.empty()) shift += "*";
      shift += "sigma" + std::to_string(i + 1);
      if (m[i] != 1) shift += "^" + std::to_string(m[i]);
    }
    const std::string coeff = r.to_string([](int v) { return var_name("t", v); });
    if (!out.empty()) out += " + ";
    if (shift.empty()) out += coeff;
    else if (r == MPoly(Scalar(1))) out += shift;
    else out += "(" + coeff + ")*" + shift;
  }
  return out;
}

WeylElement shift_algebra_iso(const ShiftAlgebraElement& el) {
  const int n = el.n();
  std::vector<WeylElement> images;
  for (int k = 1; k <= n; ++k) images.push_back(WeylElement::d(n, k) * WeylElement::x(n, k));
  WeylElement out(n);
  for (const auto& [m, r] : el.terms()) {
    WeylElement poly(n);
    for (const auto& [mono, c] : r.terms()) {
      WeylElement prod = WeylElement::scalar(n, MRat(c));
      for (const auto& [v, e] : mono.factors()) {
        for (int a = 0; a < e; ++a) prod = prod * images[static_cast<std::size_t>(v)];
      }
      poly = poly + prod;
    }
    out = out + poly * WeylElement::scalar(n, laurent_monomial(m));
  }
  return out;
}

ShiftAlgebraElement weyl_to_shift(const WeylElement& a) {
  const int n = a.n();
  ShiftAlgebraElement out(n);
  for (const auto& [alpha, c] : a.terms()) {
    if (c.den().size() != 1) throw ArityError("coefficient " + c.to_string(default_var_name) + " is not a Laurent polynomial");
    const Monomial& den = c.den().leading_monomial();
    const Scalar& den_c = c.den().leading_coefficient();
    ShiftAlgebraElement coeff(n);
    for (const auto& [mono, cc] : c.num().terms()) {
      std::vector<int> m(static_cast<std::size_t>(n), 0);
      for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(v)] = mono.degree(v) - den.degree(v);
      coeff.add(m, MPoly(cc / den_c));
    }
    ShiftAlgebraElement ops = ShiftAlgebraElement::scalar(n, Scalar(1));
    for (int k = 1; k <= n; ++k) {
      const auto dk = ShiftAlgebraElement::t(n, k) * ShiftAlgebraElement::sigma(n, k, -1);
      for (int e = 0; e < alpha[static_cast<std::size_t>(k - 1)]; ++e) ops = ops * dk;
    }
    out = out + coeff * ops;
  }
  return out;
}

std::vector<CheckRecord> iso_checks(int n) {
  using S = ShiftAlgebraElement;
  std::string twist;
  std::string commute;
  std::string pullback;
  long count = 0;
  for (int k = 1; k <= n; ++k) {
    for (int m = 1; m <= n; ++m) {
      ++count;
      const S lhs = S::sigma(n, k) * S::t(n, m) * S::sigma(n, k, -1);
      const S rhs = S::t(n, m) - S::scalar(n, Scalar(k == m ? 1 : 0));
      if (!(lhs == rhs)) twist = "sigma_k t_m sigma_k^-1 in the shift algebra, k=" + std::to_string(k);
      if (!(shift_algebra_iso(S::sigma(n, k)) * shift_algebra_iso(S::t(n, m)) * shift_algebra_iso(S::sigma(n, k, -1)) ==
            shift_algebra_iso(rhs))) {
        twist = "image of sigma_k t_m sigma_k^-1, k=" + std::to_string(k) + " m=" + std::to_string(m);
      }
      const auto sk = shift_algebra_iso(S::sigma(n, k));
      const auto sm = shift_algebra_iso(S::sigma(n, m));
      const auto tk = shift_algebra_iso(S::t(n, k));
      const auto tm = shift_algebra_iso(S::t(n, m));
      if (!(sk * sm == sm * sk) || !(tk * tm == tm * tk)) commute = "k=" + std::to_string(k) + " m=" + std::to_string(m);
      if (!(sk * shift_algebra_iso(S::sigma(n, k, -1)) == WeylElement::scalar(n, MRat(1)))) commute = "sigma inverse";

      const auto dk = WeylElement::d(n, k);
      const auto xm = WeylElement::x(n, m);
      const S rel = weyl_to_shift(dk * xm - xm * dk);
      if (!(rel == S::scalar(n, Scalar(k == m ? 1 : 0)))) pullback = "[d_k, x_m] pulls back to " + rel.to_string();
    }
    if (!(shift_algebra_iso(weyl_to_shift(WeylElement::x(n, k))) == WeylElement::x(n, k)) ||
        !(shift_algebra_iso(weyl_to_shift(WeylElement::d(n, k))) == WeylElement::d(n, k)) ||
        !(weyl_to_shift(shift_algebra_iso(S::t(n, k))) == S::t(n, k))) {
      pullback = "generator round trip at k=" + std::to_string(k);
    }
  }
  return {make_check("iso_twist", twist.empty(), twist, count),
          make_check("iso_commuting", commute.empty(), commute, count),
          make_check("iso_pullback", pullback.empty(), pullback, count)};
}

// ---------------------------------------------------------------- symmetric coordinates

SymData sym_data(int n) {
  if (n < 1) throw ArityError("n must be positive");
  SymData s;
  s.n = n;
  std::vector<MPoly> e(static_cast<std::size_t>(n) + 1);
  e[0] = MPoly(Scalar(1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * MPoly::var(i);
  }
  s.sigma.assign(e.begin() + 1, e.end());
  s.delta = MPoly(Scalar(1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s.delta = s.delta * (MPoly::var(i) - MPoly::var(j));
  }
  s.Delta = s.delta * s.delta;
  return s;
}

MPoly symmetric_to_sigma(const MPoly& f, const SymData& sym) {
  MPoly rest = f;
  MPoly out;
  while (!rest.is_zero()) {
    const Monomial lm = rest.leading_monomial();
    const Scalar c = rest.leading_coefficient();
    for (int v : lm.is_one() ? std::vector<int>{} : rest.variables()) {
      if (v >= sym.n) throw NotInvariant("polynomial involves a variable beyond x_" + std::to_string(sym.n));
    }
    Monomial in_sigma;
    MPoly in_x(c);
    for (int j = 0; j < sym.n; ++j) {
      const int gap = lm.degree(j) - (j + 1 < sym.n ? lm.degree(j + 1) : 0);
      if (gap < 0) throw NotInvariant("polynomial is not symmetric");
      if (gap == 0) continue;
      in_sigma = in_sigma * Monomial::var(j, gap);
      in_x = in_x * sym.sigma[static_cast<std::size_t>(j)].pow(gap);
    }
    out += MPoly::term(c, in_sigma);
    rest -= in_x;
  }
  return out;
}

namespace {

MRat rational_to_sigma(const MRat& f, const SymData& sym) {
  return MRat(symmetric_to_sigma(f.num(), sym), symmetric_to_sigma(f.den(), sym));
}

MRat sigma_in_x(const MRat& f, const SymData& sym) {
  auto sub = [&](int v) { return sym.sigma.at(static_cast<std::size_t>(v)); };
  return MRat(f.num().compose(sub), f.den().compose(sub));
}

}  // namespace

std::string SigmaOperator::to_string() const { return operator_string(terms, "s", "ds"); }

// g_beta = (1/beta!) sum_{gamma <= beta} binom(beta, gamma) (-sigma)^{beta - gamma} a(sigma^gamma)
SigmaOperator rewrite_in_sigma(const WeylElement& a) {
  const int n = a.n();
  if (n > 3) throw ArityError("rewrite_in_sigma is limited to n <= 3");
  if (!is_symmetric(a)) throw NotInvariant("operator is not S_n-invariant");
  const SymData sym = sym_data(n);
  SigmaOperator out;
  out.n = n;
  std::map<DiffIndex, MRat> images;
  auto image = [&](const DiffIndex& gamma) -> const MRat& {
    auto it = images.find(gamma);
    if (it != images.end()) return it->second;
    MPoly power(Scalar(1));
    for (int j = 0; j < n; ++j) power = power * sym.sigma[static_cast<std::size_t>(j)].pow(gamma[static_cast<std::size_t>(j)]);
    return images.emplace(gamma, rational_to_sigma(a.apply(MRat(power)), sym)).first->second;
  };
  for (const auto& beta : indices_up_to(n, a.order())) {
    MRat g;
    Scalar beta_fact(1);
    for (int b : beta) beta_fact *= factorial(b);
    for (const auto& gamma : lower_indices(beta)) {
      MPoly shift(Scalar(1));
      Scalar mult(1);
      for (int j = 0; j < n; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        mult *= binomial(beta[uj], gamma[uj]);
        shift = shift * (-MPoly::var(j)).pow(beta[uj] - gamma[uj]);
      }
      g += MRat(shift * mult) * image(gamma);
    }
    g = g * MRat(Scalar(1) / beta_fact);
    if (!g.is_zero()) out.terms.emplace(beta, g);
  }
  return out;
}

WeylElement sigma_to_x(const SigmaOperator& op) {
  const int n = op.n;
  const SymData sym = sym_data(n);
  const auto un = static_cast<std::size_t>(n);
  // jac[i][j] = d sigma_j / d x_i; invert [jac | I] by Gauss-Jordan.
  std::vector<std::vector<MRat>> m(un, std::vector<MRat>(2 * un));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) m[i][j] = MRat(sym.sigma[j].derivative(static_cast<int>(i)));
    m[i][un + i] = MRat(1);
  }
  for (std::size_t col = 0; col < un; ++col) {
    std::size_t piv = col;
    while (piv < un && m[piv][col].is_zero()) ++piv;
    if (piv == un) throw InvariantViolation("Jacobian of the symmetric coordinates is singular");
    std::swap(m[col], m[piv]);
    const MRat inv = MRat(1) / m[col][col];
    for (auto& e : m[col]) e = e * inv;
    for (std::size_t r = 0; r < un; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const MRat f = m[r][col];
      for (std::size_t c = 0; c < 2 * un; ++c) m[r][c] -= f * m[col][c];
    }
  }
  // d/d sigma_j = sum_i (jac^{-1})_{ji} d_i
  std::vector<WeylElement> dsigma;
  for (std::size_t j = 0; j < un; ++j) {
    WeylElement d(n);
    for (std::size_t i = 0; i < un; ++i) {
      DiffIndex a(un, 0);
      a[i] = 1;
      d.add(a, m[j][un + i]);
    }
    dsigma.push_back(std::move(d));
  }
  WeylElement out(n);
  for (const auto& [beta, g] : op.terms) {
    WeylElement t = WeylElement::scalar(n, sigma_in_x(g, sym));
    for (std::size_t j = 0; j < un; ++j) {
      for (int e = 0; e < beta[j]; ++e) t = t * dsigma[j];
    }
    out = out + t;
  }
  return out;
}

std::vector<CheckRecord> rewrite_checks(const WeylElement& a) {
  const SigmaOperator op = rewrite_in_sigma(a);
  const SymData sym = sym_data(a.n());
  const MPoly disc = symmetric_to_sigma(sym.Delta, sym);
  const long count = static_cast<long>(op.terms.size());

  const WeylElement back = sigma_to_x(op);
  const bool round = back == a;

  std::string sym_witness;
  std::string den_witness;
  for (const auto& [beta, g] : op.terms) {
    const MRat in_x = sigma_in_x(g, sym);
    for (int i = 0; i + 1 < a.n(); ++i) {
      auto swap = [i](int v) { return v == i ? i + 1 : (v == i + 1 ? i : v); };
      if (!(in_x.rename(swap) == in_x)) sym_witness = "coefficient " + g.to_string(default_var_name);
    }
    if (g.den().is_constant()) continue;
    bool divides = false;
    MPoly power(Scalar(1));
    for (int k = 1; k <= g.den().total_degree() && !divides; ++k) {
      power = power * disc;
      divides = exact_divide(power, g.den()).has_value();
    }
    if (!divides) den_witness = "denominator " + g.den().to_string(default_var_name);
  }
  if (!is_symmetric(back)) sym_witness = "mapped-back operator is not symmetric";
  return {make_check("round_trip", round, round ? "" : "sigma_to_x gives " + back.to_string(), count),
          make_check("sigma_coefficients_symmetric", sym_witness.empty(), sym_witness, count),
          make_check("discriminant_denominators", den_witness.empty(), den_witness, count)};
}

}  // namespace wgt
