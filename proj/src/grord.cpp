#include "wgt/grord.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wgt/errors.hpp"

namespace wgt {

GradedVariables::GradedVariables(Pyramid pyr) : pyr_(std::move(pyr)) {
  const int n = pyr_.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int lo = i >= j ? 1 : pyr_.p(j) - pyr_.p(i) + 1;
      for (int k = lo; k <= pyr_.p(j); ++k) vars_.push_back({i, j, k});
    }
  }
}

std::optional<int> GradedVariables::id(int i, int j, int k) const {
  for (std::size_t a = 0; a < vars_.size(); ++a) {
    if (vars_[a].i == i && vars_[a].j == j && vars_[a].k == k) return static_cast<int>(a);
  }
  return std::nullopt;
}

std::string GradedVariables::name(int id) const {
  if (id == size()) return "u";
  const auto& x = at(id);
  return "X" + std::to_string(x.i) + std::to_string(x.j) + "^" + std::to_string(x.k);
}

std::string GradedVariables::describe(const Monomial& m) const {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += name(v);
    if (e > 1) out += "**" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------- weights

long long WeightFunction::weight(const Monomial& m) const {
  long long total = 0;
  for (const auto& [var, e] : m.factors()) total += w.at(static_cast<std::size_t>(var)) * e;
  return total;
}

namespace {

enum class VarClass { Positive, Upper, Diagonal, Deep };

VarClass classify(const GradedVariable& x, const Pyramid& pyr) {
  if (x.i < x.j) return VarClass::Upper;
  if (x.i == x.j) return VarClass::Diagonal;
  if (x.i == x.j + 1 && x.k == pyr.p(x.j)) return VarClass::Positive;
  return VarClass::Deep;
}

}  // namespace

WeightFunction build_weight(const GradedVariables& vars) {
  const Pyramid& pyr = vars.pyramid();
  const long long n = pyr.n();
  if (n > 12) throw ArityError("weight constants overflow 64-bit integers for n > 12");
  WeightFunction wf;
  wf.N = 2 * n * n + 1;
  wf.P = pyr.max_row() + 1;
  const long long N3 = wf.N * wf.N * wf.N;
  wf.deep = N3 * wf.N * wf.N;
  wf.shift = wf.deep * wf.N;
  for (int id = 0; id < vars.size(); ++id) {
    const auto& x = vars.at(id);
    long long v = 0;
    switch (classify(x, pyr)) {
      case VarClass::Positive:
        v = x.i;
        break;
      case VarClass::Upper:
        v = -wf.N;
        break;
      case VarClass::Diagonal:
        v = -N3 + x.i * wf.P + x.k;
        break;
      case VarClass::Deep:
        v = -wf.deep;
        break;
    }
    wf.v.push_back(v);
    wf.w.push_back(v + x.k * wf.shift);
  }

  // (i) v(X_{i+1,i}^{p_i}) = i + 1.
  {
    std::string witness;
    for (int i = 1; i < n; ++i) {
      const auto id = vars.id(i + 1, i, pyr.p(i));
      if (!id || wf.v[static_cast<std::size_t>(*id)] != i + 1) witness = "X" + std::to_string(i + 1) + std::to_string(i);
    }
    wf.conditions.push_back(make_check("weight_condition_i", witness.empty(), witness, n - 1));
  }
  // (ii) v = -N on i < j, with N > 2n^2.
  {
    std::string witness = wf.N > 2 * n * n ? "" : "N too small";
    long count = 0;
    for (int id = 0; id < vars.size(); ++id) {
      if (vars.at(id).i < vars.at(id).j) {
        ++count;
        if (wf.v[static_cast<std::size_t>(id)] != -wf.N) witness = vars.name(id);
      }
    }
    wf.conditions.push_back(make_check("weight_condition_ii", witness.empty(), witness, count));
  }
  // A monomial of any d_rs has at most n factors; "significantly" is read as
  // "one factor outweighs n factors of the milder classes".
  long long milder = 0;
  long long diag_mag = 0;
  for (int id = 0; id < vars.size(); ++id) {
    const auto c = classify(vars.at(id), pyr);
    const long long mag = std::llabs(wf.v[static_cast<std::size_t>(id)]);
    if (c == VarClass::Positive || c == VarClass::Upper) milder = std::max(milder, mag);
    if (c == VarClass::Diagonal) diag_mag = std::max(diag_mag, mag);
  }
  // (iii) diagonal values far below the above, ordered by (i, k).
  {
    std::string witness;
    long count = 0;
    for (int a = 0; a < vars.size(); ++a) {
      const auto& x = vars.at(a);
      if (x.i != x.j) continue;
      ++count;
      const long long va = wf.v[static_cast<std::size_t>(a)];
      if (va >= 0 || -va <= 2 * n * milder) witness = vars.name(a) + " not far enough below";
      for (int b = 0; b < vars.size(); ++b) {
        const auto& y = vars.at(b);
        if (y.i != y.j) continue;
        const bool should_exceed = x.i > y.i || (x.i == y.i && x.k > y.k);
        if (should_exceed && !(va > wf.v[static_cast<std::size_t>(b)])) {
          witness = vars.name(a) + " vs " + vars.name(b);
        }
      }
    }
    wf.conditions.push_back(make_check("weight_condition_iii", witness.empty(), witness, count));
  }
  // (iv) deep negative values dominate everything above.
  {
    std::string witness;
    long count = 0;
    for (int id = 0; id < vars.size(); ++id) {
      if (classify(vars.at(id), pyr) != VarClass::Deep) continue;
      ++count;
      const long long v = wf.v[static_cast<std::size_t>(id)];
      if (v >= 0 || -v <= 2 * n * std::max(milder, diag_mag)) witness = vars.name(id);
    }
    wf.conditions.push_back(make_check("weight_condition_iv", witness.empty(), witness, count));
  }
  {
    std::string witness;
    for (int id = 0; id < vars.size(); ++id) {
      if (wf.w[static_cast<std::size_t>(id)] <= 0) witness = vars.name(id) + " has nonpositive weight";
    }
    wf.conditions.push_back(make_check("weight_positive", witness.empty(), witness, vars.size()));
  }
  return wf;
}

// ---------------------------------------------------------------- d_rs

namespace {

MPoly variable_or_delta(const GradedVariables& vars, int i, int j, int k) {
  if (k == 0) return MPoly(Scalar(i == j ? 1 : 0));
  const auto id = vars.id(i, j, k);
  return id ? MPoly::var(*id) : MPoly();
}

int permutation_sign(const std::vector<int>& sigma) {
  int inv = 0;
  for (std::size_t a = 0; a < sigma.size(); ++a) {
    for (std::size_t b = a + 1; b < sigma.size(); ++b) inv += sigma[a] > sigma[b];
  }
  return inv % 2 == 0 ? 1 : -1;
}

void compositions(const Pyramid& pyr, int r, int s, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int j = static_cast<int>(cur.size()) + 1;
  if (j > r) {
    if (s == 0) out.push_back(cur);
    return;
  }
  for (int k = 0; k <= std::min(s, pyr.p(j)); ++k) {
    cur.push_back(k);
    compositions(pyr, r, s - k, cur, out);
    cur.pop_back();
  }
}

void check_rs(int r, int s, const Pyramid& pyr) {
  if (r < 1 || r > pyr.n() || s < 1 || s > pyr.prefix(r)) {
    throw IndexError("d_rs with r=" + std::to_string(r) + ", s=" + std::to_string(s) + " out of range");
  }
}

// det of a square MPoly matrix by Bareiss elimination.
MPoly bareiss_det(std::vector<std::vector<MPoly>> m) {
  const std::size_t n = m.size();
  MPoly prev(Scalar(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return MPoly();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw InvariantViolation("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
    }
    prev = m[k][k];
  }
  return n == 0 ? MPoly(Scalar(1)) : m[n - 1][n - 1] * Scalar(sign);
}

}  // namespace

MPoly dcoeff_polynomial(int r, int s, const GradedVariables& vars) {
  const Pyramid& pyr = vars.pyramid();
  check_rs(r, s, pyr);
  std::vector<std::vector<int>> comps;
  std::vector<int> cur;
  compositions(pyr, r, s, cur, comps);
  MPoly out;
  std::vector<int> sigma(static_cast<std::size_t>(r));
  for (const auto& ks : comps) {
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      MPoly term(Scalar(permutation_sign(sigma)));
      for (int j = 1; j <= r && !term.is_zero(); ++j) {
        term = term * variable_or_delta(vars, sigma[static_cast<std::size_t>(j - 1)], j, ks[static_cast<std::size_t>(j - 1)]);
      }
      out += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

MPoly dcoeff_by_determinant(int r, int s, const GradedVariables& vars) {
  const Pyramid& pyr = vars.pyramid();
  check_rs(r, s, pyr);
  const int u = vars.size();
  std::vector<std::vector<MPoly>> m(static_cast<std::size_t>(r), std::vector<MPoly>(static_cast<std::size_t>(r)));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      MPoly entry;
      for (int k = 0; k <= pyr.p(j); ++k) {
        entry += variable_or_delta(vars, i, j, k) * MPoly::term(Scalar(1), Monomial::var(u, pyr.p(j) - k));
      }
      m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(entry);
    }
  }
  const auto by_power = bareiss_det(std::move(m)).coefficients_in(u);
  const auto it = by_power.find(pyr.prefix(r) - s);
  return it == by_power.end() ? MPoly() : it->second;
}

MPoly dcoeff_by_shifted_determinant(int r, int s, const GradedVariables& vars) {
  const Pyramid& pyr = vars.pyramid();
  check_rs(r, s, pyr);
  const int u = vars.size();
  auto entry = [&](int i, int j) {
    MPoly e;
    const MPoly shifted_u = MPoly::var(u) - MPoly(Scalar(j - 1));
    for (int k = 0; k <= pyr.p(j); ++k) e += variable_or_delta(vars, i, j, k) * shifted_u.pow(pyr.p(j) - k);
    return e;
  };
  MPoly det;
  std::vector<int> sigma(static_cast<std::size_t>(r));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    MPoly term(Scalar(permutation_sign(sigma)));
    for (int j = 1; j <= r; ++j) term = term * entry(sigma[static_cast<std::size_t>(j - 1)], j);
    det += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  const auto by_power = det.coefficients_in(u);
  const auto it = by_power.find(pyr.prefix(r) - s);
  if (it == by_power.end()) return MPoly();
  MPoly top;
  for (const auto& [m, c] : it->second.terms()) {
    int kdeg = 0;
    for (const auto& [v, e] : m.factors()) kdeg += vars.at(v).k * e;
    if (kdeg == s) top += MPoly::term(c, m);
  }
  return top;
}

Monomial weighted_leading_monomial(const MPoly& p, const WeightFunction& w, bool* strict) {
  if (p.is_zero()) throw ArityError("leading monomial of zero");
  const Monomial* best = nullptr;
  long long best_w = 0;
  bool unique = true;
  // Terms arrive lex-descending, so keeping the first maximum is the lex tie-break.
  for (const auto& [m, c] : p.terms()) {
    const long long wm = w.weight(m);
    if (!best || wm > best_w) {
      best = &m;
      best_w = wm;
      unique = true;
    } else if (wm == best_w) {
      unique = false;
    }
  }
  if (strict) *strict = unique;
  return *best;
}

namespace {

// t with p_r + ... + p_{r-t+1} < s <= p_r + ... + p_{r-t}; t = 0 when s <= p_r.
int chain_length(int r, int s, const Pyramid& pyr) {
  int acc = pyr.p(r);
  int t = 0;
  while (s > acc) {
    ++t;
    if (r - t < 1) throw IndexError("s exceeds p_1 + ... + p_r");
    acc += pyr.p(r - t);
  }
  return t;
}

int require_id(const GradedVariables& vars, int i, int j, int k) {
  const auto id = vars.id(i, j, k);
  if (!id) {
    throw InvariantViolation("predicted variable X" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(k) +
                             " is out of range");
  }
  return *id;
}

}  // namespace

Monomial predicted_leading(int r, int s, const GradedVariables& vars) {
  const Pyramid& pyr = vars.pyramid();
  check_rs(r, s, pyr);
  const int t = chain_length(r, s, pyr);
  if (t == 0) return Monomial::var(require_id(vars, r, r, s));
  Monomial m;
  int used = 0;
  for (int a = 1; a <= t; ++a) {
    const int i = r - a + 1;
    m = m * Monomial::var(require_id(vars, i, i - 1, pyr.p(i - 1)));
    used += pyr.p(i - 1);
  }
  return m * Monomial::var(require_id(vars, r - t, r, s - used));
}

int distinguished_variable(int r, int s, const GradedVariables& vars) {
  const Pyramid& pyr = vars.pyramid();
  check_rs(r, s, pyr);
  const int t = chain_length(r, s, pyr);
  if (t == 0) return require_id(vars, r, r, s);
  int used = 0;
  for (int a = 1; a <= t; ++a) used += pyr.p(r - a);
  return require_id(vars, r - t, r, s - used);
}

LeadingReport verify_leading_claims(const Pyramid& pyr) {
  const GradedVariables vars(pyr);
  LeadingReport rep;
  rep.weight = build_weight(vars);
  rep.checks = rep.weight.conditions;

  std::string oracle_witness;
  std::string homog_witness;
  std::string lm_witness;
  std::string strict_witness;
  long count = 0;
  for (int r = 1; r <= pyr.n(); ++r) {
    for (int s = 1; s <= pyr.prefix(r); ++s) {
      ++count;
      const MPoly d = dcoeff_polynomial(r, s, vars);
      const std::string tag = "d_" + std::to_string(r) + "," + std::to_string(s);
      if (oracle_witness.empty()) {
        if (!(d == dcoeff_by_determinant(r, s, vars))) oracle_witness = tag + " differs from the determinant";
        else if (!(d == dcoeff_by_shifted_determinant(r, s, vars))) oracle_witness = tag + " differs from the shifted determinant";
      }
      for (const auto& [m, c] : d.terms()) {
        int kdeg = 0;
        for (const auto& [v, e] : m.factors()) kdeg += vars.at(v).k * e;
        if (kdeg != s && homog_witness.empty()) homog_witness = tag + " has a term of k-degree " + std::to_string(kdeg);
      }
      bool strict = true;
      LeadingRow row{r, s, predicted_leading(r, s, vars), weighted_leading_monomial(d, rep.weight, &strict),
                     distinguished_variable(r, s, vars)};
      if (!strict && strict_witness.empty()) strict_witness = tag + " has a weight tie at the top";
      if (!(row.computed == row.predicted) && lm_witness.empty()) {
        lm_witness = tag + ": computed " + vars.describe(row.computed) + ", predicted " + vars.describe(row.predicted);
      }
      rep.rows.push_back(std::move(row));
    }
  }
  rep.checks.push_back(make_check("dcoeff_oracles", oracle_witness.empty(), oracle_witness, count));
  rep.checks.push_back(make_check("dcoeff_homogeneous", homog_witness.empty(), homog_witness, count));
  rep.checks.push_back(make_check("leading_strict", strict_witness.empty(), strict_witness, count));
  rep.checks.push_back(make_check("leading_predicted", lm_witness.empty(), lm_witness, count));

  std::string dist_witness;
  for (const auto& row : rep.rows) {
    if (row.computed.degree(row.distinguished) != 1) {
      dist_witness = "X(" + std::to_string(row.r) + "," + std::to_string(row.s) + ") = " + vars.name(row.distinguished) +
                     " has degree " + std::to_string(row.computed.degree(row.distinguished));
      break;
    }
    for (const auto& other : rep.rows) {
      if (&other == &row) continue;
      if (other.computed.degree(row.distinguished) != 0) {
        dist_witness = vars.name(row.distinguished) + " of (" + std::to_string(row.r) + "," + std::to_string(row.s) +
                       ") also enters the leading monomial of (" + std::to_string(other.r) + "," +
                       std::to_string(other.s) + ")";
        break;
      }
    }
    if (!dist_witness.empty()) break;
  }
  rep.checks.push_back(make_check("distinguished_variables", dist_witness.empty(), dist_witness,
                                  static_cast<long>(rep.rows.size())));
  return rep;
}

}  // namespace wgt
