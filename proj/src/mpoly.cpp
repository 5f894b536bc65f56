#include "wgt/arith/mpoly.hpp"

#include <algorithm>
#include <set>

#include "wgt/errors.hpp"

namespace wgt {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(int v, int exponent) {
  Monomial m;
  if (exponent != 0) m.f_.emplace_back(v, exponent);
  return m;
}

int Monomial::degree(int v) const {
  for (const auto& [var, e] : f_) {
    if (var == v) return e;
    if (var > v) break;
  }
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& f : f_) d += f.second;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& [v, e] : f_) {
    while (j < other.f_.size() && other.f_[j].first < v) ++j;
    if (j == other.f_.size() || other.f_[j].first != v || other.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial out;
  std::size_t j = 0;
  for (const auto& [v, e] : f_) {
    int d = e;
    if (j < other.f_.size() && other.f_[j].first == v) d -= other.f_[j++].second;
    if (d < 0) throw ArityError("monomial quotient is not a monomial");
    if (d > 0) out.f_.emplace_back(v, d);
  }
  if (j != other.f_.size()) throw ArityError("monomial quotient is not a monomial");
  return out;
}

Monomial Monomial::with_degree(int v, int exponent) const {
  Monomial out;
  bool placed = false;
  for (const auto& [var, e] : f_) {
    if (!placed && var >= v) {
      if (exponent > 0) out.f_.emplace_back(v, exponent);
      placed = true;
      if (var == v) continue;
    }
    out.f_.emplace_back(var, e);
  }
  if (!placed && exponent > 0) out.f_.emplace_back(v, exponent);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.f_.reserve(a.f_.size() + b.f_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      out.f_.push_back(a.f_[i++]);
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      out.f_.push_back(b.f_[j++]);
    } else {
      out.f_.emplace_back(a.f_[i].first, a.f_[i].second + b.f_[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

int Monomial::lex_compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.f_.size() && j < b.f_.size()) {
    if (a.f_[i].first == b.f_[j].first) {
      if (a.f_[i].second != b.f_[j].second) return a.f_[i].second > b.f_[j].second ? 1 : -1;
      ++i;
      ++j;
    } else {
      return a.f_[i].first < b.f_[j].first ? 1 : -1;
    }
  }
  if (i < a.f_.size()) return 1;
  if (j < b.f_.size()) return -1;
  return 0;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(const Scalar& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

MPoly MPoly::var(int v) { return term(Scalar(1), Monomial::var(v)); }

MPoly MPoly::term(const Scalar& c, Monomial m) {
  MPoly p;
  if (sgn(c) != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Scalar MPoly::constant_term() const {
  const auto it = terms_.find(Monomial());
  return it == terms_.end() ? Scalar(0) : it->second;
}

int MPoly::degree(int v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree(v));
  return d;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

int MPoly::main_variable() const {
  int v = -1;
  for (const auto& [m, c] : terms_) {
    if (!m.is_one() && (v < 0 || m.factors().front().first < v)) v = m.factors().front().first;
  }
  return v;
}

std::vector<int> MPoly::variables() const {
  std::set<int> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) vars.insert(f.first);
  }
  return {vars.begin(), vars.end()};
}

std::map<int, MPoly> MPoly::coefficients_in(int v) const {
  std::map<int, MPoly> out;
  for (const auto& [m, c] : terms_) {
    const int d = m.degree(v);
    out[d].add_term(m.with_degree(v, 0), c);
  }
  return out;
}

MPoly MPoly::derivative(int v) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    const int d = m.degree(v);
    if (d == 0) continue;
    out.add_term(m.with_degree(v, d - 1), c * d);
  }
  return out;
}

MPoly MPoly::substitute(int v, const MPoly& value) const {
  const auto coeffs = coefficients_in(v);
  MPoly out;
  MPoly power(Scalar(1));
  int current = 0;
  for (const auto& [d, c] : coeffs) {
    while (current < d) {
      power = power * value;
      ++current;
    }
    out += c * power;
  }
  return out;
}

MPoly MPoly::substitute(int v, const Scalar& value) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    const int d = m.degree(v);
    if (d == 0) {
      out.add_term(m, c);
      continue;
    }
    Scalar p;
    mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), static_cast<unsigned long>(d));
    mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), static_cast<unsigned long>(d));
    out.add_term(m.with_degree(v, 0), c * p);
  }
  return out;
}

MPoly MPoly::compose(const std::function<MPoly(int)>& values) const {
  std::map<int, std::vector<MPoly>> powers;
  MPoly out;
  for (const auto& [m, c] : terms_) {
    MPoly t(c);
    for (const auto& [v, e] : m.factors()) {
      auto& pw = powers[v];
      if (pw.empty()) pw.push_back(MPoly(Scalar(1)));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * values(v));
      t = t * pw[static_cast<std::size_t>(e)];
    }
    out += t;
  }
  return out;
}

MPoly MPoly::rename(const std::function<int(int)>& perm) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (const auto& [v, e] : m.factors()) r = r * Monomial::var(perm(v), e);
    out.add_term(r, c);
  }
  return out;
}

Scalar MPoly::evaluate(const std::function<Scalar(int)>& values) const {
  std::map<int, Scalar> cache;
  Scalar out = 0;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = cache.find(v);
      if (it == cache.end()) it = cache.emplace(v, values(v)).first;
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    out += t;
  }
  return out;
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Scalar(-c));
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(m == it->first) || c != it->second) return false;
    ++it;
  }
  return true;
}

MPoly MPoly::pow(int e) const {
  MPoly out(Scalar(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

MPoly MPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Scalar(1 / leading_coefficient());
}

std::string MPoly::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool neg = sgn(c) < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (const auto& [v, e] : m.factors()) {
      if (!mono.empty()) mono += "*";
      mono += name(v);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string default_var_name(int v) { return "x" + std::to_string(v); }

// ---------------------------------------------------------------- division and gcd

std::optional<MPoly> exact_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw ArityError("exact_divide: division by zero polynomial");
  if (b.is_constant()) return a * Scalar(1 / b.constant_term());
  MPoly q;
  MPoly r = a;
  const Monomial& lmb = b.leading_monomial();
  const Scalar& lcb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial lm = r.leading_monomial();
    if (!lmb.divides(lm)) return std::nullopt;
    const MPoly t = MPoly::term(r.leading_coefficient() / lcb, lm.quotient(lmb));
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

MPoly require_exact(const MPoly& a, const MPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw InvariantViolation("gcd: expected exact division failed");
  return *std::move(q);
}

MPoly leading_coeff_in(const MPoly& p, int v) { return p.coefficients_in(v).rbegin()->second; }

// Pseudo-remainder of a by b as polynomials in v.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, int v) {
  const int db = b.degree(v);
  const MPoly lb = leading_coeff_in(b, v);
  MPoly r = a;
  int e = a.degree(v) - db + 1;
  while (!r.is_zero() && r.degree(v) >= db) {
    const int dr = r.degree(v);
    const MPoly lr = leading_coeff_in(r, v);
    r = r * lb - lr * MPoly::term(Scalar(1), Monomial::var(v, dr - db)) * b;
    --e;
  }
  if (e > 0) r = r * lb.pow(e);
  return r;
}

MPoly content_in(const MPoly& p, int v) {
  MPoly g;
  for (const auto& [d, c] : p.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_constant()) return MPoly(Scalar(1));
  }
  return g;
}

MPoly primitive_part(const MPoly& p, int v) { return require_exact(p, content_in(p, v)).monic(); }

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(Scalar(1));
  if (exact_divide(a, b)) return b.monic();
  if (exact_divide(b, a)) return a.monic();

  const int va = a.main_variable();
  const int vb = b.main_variable();
  const int v = std::min(va, vb);
  if (va != v) return gcd(a, content_in(b, v));
  if (vb != v) return gcd(content_in(a, v), b);

  const MPoly ca = content_in(a, v);
  const MPoly cb = content_in(b, v);
  const MPoly g = gcd(ca, cb);
  MPoly p = require_exact(a, ca).monic();
  MPoly q = require_exact(b, cb).monic();
  if (p.degree(v) < q.degree(v)) std::swap(p, q);
  while (true) {
    const MPoly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      q = MPoly(Scalar(1));
      break;
    }
    p = std::move(q);
    q = primitive_part(r, v);
  }
  return (g * primitive_part(q, v)).monic();
}

}  // namespace wgt
