#include "wgt/galois.hpp"

#include <deque>
#include <set>

#include "wgt/errors.hpp"

namespace wgt {

std::string GaloisVars::name(int var) const {
  if (var == u) return "u";
  const auto& s = layout_->slots().at(slot_of(var));
  return "x" + std::to_string(s.r) + std::to_string(s.i) + "^" + std::to_string(s.k);
}

ShiftMonomial unit_shift(const GaloisVars& vars, int r, int i, int k, int exponent) {
  if (r >= vars.pyramid().n()) throw IndexError("no shift generator in the top row");
  ShiftMonomial m(vars.layout().size(), 0);
  m[vars.layout().index(r, i, k)] = exponent;
  return m;
}

// ---------------------------------------------------------------- SkewElement

SkewElement SkewElement::term(ShiftMonomial shift, MRat coeff) {
  SkewElement x;
  x.add(shift, coeff);
  return x;
}

const MRat* SkewElement::coeff(const ShiftMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? nullptr : &it->second;
}

void SkewElement::add(const ShiftMonomial& m, const MRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SkewElement operator+(SkewElement a, const SkewElement& b) {
  for (const auto& [m, c] : b.terms_) a.add(m, c);
  return a;
}

MRat shift_coefficient(const MRat& a, const ShiftMonomial& m) {
  MPoly num = a.num();
  MPoly den = a.den();
  for (std::size_t slot = 0; slot < m.size(); ++slot) {
    if (m[slot] == 0) continue;
    const int v = 1 + static_cast<int>(slot);
    const MPoly image = MPoly::var(v) + MPoly(Scalar(m[slot]));
    num = num.substitute(v, image);
    den = den.substitute(v, image);
  }
  return MRat(num, den);
}

SkewElement skew_multiply(const SkewElement& x, const SkewElement& y) {
  SkewElement out;
  for (const auto& [m, a] : x.terms()) {
    for (const auto& [n, b] : y.terms()) {
      ShiftMonomial mn(m.size());
      for (std::size_t k = 0; k < m.size(); ++k) mn[k] = m[k] + n[k];
      out.add(mn, a * shift_coefficient(b, m));
    }
  }
  return out;
}

// ---------------------------------------------------------------- the group G

PermGroupG::PermGroupG(const GaloisVars& vars) : vars_(&vars) {
  const std::size_t size = vars.layout().size();
  for (int r = 1; r <= vars.pyramid().n(); ++r) {
    const auto& row = vars.layout().row(r);
    for (std::size_t a = 0; a + 1 < row.size(); ++a) {
      Perm g(size);
      for (std::size_t k = 0; k < size; ++k) g[k] = k;
      std::swap(g[row[a]], g[row[a + 1]]);
      gens_.push_back(std::move(g));
    }
  }
}

MRat PermGroupG::act(const Perm& g, const MRat& a) const {
  return a.rename([&g](int v) { return v == GaloisVars::u ? v : 1 + static_cast<int>(g[static_cast<std::size_t>(v - 1)]); });
}

ShiftMonomial PermGroupG::act(const Perm& g, const ShiftMonomial& m) const {
  ShiftMonomial out(m.size(), 0);
  for (std::size_t k = 0; k < m.size(); ++k) out[g[k]] = m[k];
  return out;
}

SkewElement PermGroupG::act(const Perm& g, const SkewElement& x) const {
  SkewElement out;
  for (const auto& [m, c] : x.terms()) out.add(act(g, m), act(g, c));
  return out;
}

SkewElement orbit_sum(const MRat& a, const ShiftMonomial& phi, const PermGroupG& group) {
  std::map<ShiftMonomial, MRat> seen;
  std::deque<ShiftMonomial> queue;
  seen.emplace(phi, a);
  queue.push_back(phi);
  while (!queue.empty()) {
    const ShiftMonomial m = queue.front();
    queue.pop_front();
    const MRat c = seen.at(m);
    for (const auto& g : group.generators()) {
      ShiftMonomial next = group.act(g, m);
      if (seen.count(next)) continue;
      seen.emplace(next, group.act(g, c));
      queue.push_back(std::move(next));
    }
  }
  SkewElement out;
  for (const auto& [m, c] : seen) out.add(m, c);
  return out;
}

bool check_invariance(const SkewElement& x, const PermGroupG& group) {
  for (const auto& g : group.generators()) {
    if (!(group.act(g, x) == x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- images

namespace {

MPoly linear(int var, const Scalar& c, int other = -1, const Scalar& oc = 0) {
  MPoly p = MPoly::var(var) * c;
  if (other >= 0) p += MPoly::var(other) * oc;
  return p;
}

// prod_{(k,i) != (s,j)} (u + x_{ri}^k) / prod_{(k,i) != (s,j)} (x_{ri}^k - x_{rj}^s)
// times prod over row `other_row` of (x_{other,q}^m - x_{rj}^s).
MRat interpolation_term(const GaloisVars& vars, int r, int s, int j, int other_row, const Scalar& sign) {
  const Pyramid& pyr = vars.pyramid();
  const int xs = vars.x(r, j, s);
  MPoly num(sign);
  MPoly den(Scalar(1));
  for (int i = 1; i <= r; ++i) {
    for (int k = 1; k <= pyr.p(i); ++k) {
      if (i == j && k == s) continue;
      const int xv = vars.x(r, i, k);
      num = num * (MPoly::var(GaloisVars::u) + MPoly::var(xv));
      den = den * linear(xv, 1, xs, -1);
    }
  }
  if (other_row >= 1) {
    for (int q = 1; q <= other_row; ++q) {
      for (int m = 1; m <= pyr.p(q); ++m) num = num * linear(vars.x(other_row, q, m), 1, xs, -1);
    }
  }
  return MRat::from_coprime(std::move(num), std::move(den));
}

}  // namespace

MRat x_plus(const GaloisVars& vars, int r, int s, int j) { return interpolation_term(vars, r, s, j, r + 1, -1); }

MRat x_minus(const GaloisVars& vars, int r, int s, int j) { return interpolation_term(vars, r, s, j, r - 1, 1); }

SkewElement t_image(ImageKind kind, int r, const GaloisVars& vars) {
  const Pyramid& pyr = vars.pyramid();
  const int n = pyr.n();
  if (r < 1 || r > n || (kind != ImageKind::A && r == n)) throw IndexError("t_image: r out of range");
  const ShiftMonomial identity(vars.layout().size(), 0);
  if (kind == ImageKind::A) {
    MPoly p(Scalar(1));
    for (std::size_t slot : vars.layout().row(r)) p = p * (MPoly::var(GaloisVars::u) + MPoly::var(1 + static_cast<int>(slot)));
    return SkewElement::term(identity, MRat(p));
  }
  SkewElement out;
  for (int j = 1; j <= r; ++j) {
    for (int s = 1; s <= pyr.p(j); ++s) {
      if (kind == ImageKind::B) {
        out.add(unit_shift(vars, r, j, s, 1), x_plus(vars, r, s, j));
      } else {
        out.add(unit_shift(vars, r, j, s, -1), x_minus(vars, r, s, j));
      }
    }
  }
  return out;
}

SparseMatrix act_on_basis(const SkewElement& x, const PatternBasis& basis, const Scalar& u0) {
  const PatternLayout& layout = basis.layout();
  SparseMatrix out(basis.size());
  for (const auto& [m, c] : x.terms()) {
    const MRat cu = c.substitute(GaloisVars::u, u0);
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const GTPattern& mu = basis[col];
      std::vector<Scalar> target = mu.entries();
      for (std::size_t k = 0; k < m.size(); ++k) target[k] += m[k];
      const auto row = basis.find(target);
      if (!row) continue;
      const Scalar value = cu.evaluate([&](int v) {
        const std::size_t slot = static_cast<std::size_t>(v - 1);
        return Scalar(mu.entries()[slot] - (layout.slots()[slot].i - 1));
      });
      out.add_to(*row, col, value);
    }
  }
  return out;
}

std::vector<CheckRecord> cross_check(const Representation& rep, const std::vector<Scalar>& points) {
  const Pyramid& pyr = rep.pyramid();
  const int n = pyr.n();
  const GaloisVars vars(pyr);
  const PermGroupG group(vars);
  std::vector<CheckRecord> out;

  struct Family {
    ImageKind kind;
    const char* name;
  };
  const Family families[] = {{ImageKind::A, "A"}, {ImageKind::B, "B"}, {ImageKind::C, "C"}};
  std::string inv_witness;
  long inv_count = 0;
  std::string orbit_witness;
  long orbit_count = 0;
  std::set<ShiftMonomial> support;
  for (const auto& fam : families) {
    std::string witness;
    long count = 0;
    for (int r = 1; r <= (fam.kind == ImageKind::A ? n : n - 1); ++r) {
      const SkewElement img = t_image(fam.kind, r, vars);
      ++inv_count;
      if (inv_witness.empty() && !check_invariance(img, group)) {
        inv_witness = std::string(fam.name) + "_" + std::to_string(r) + " image is not G-invariant";
      }
      if (fam.kind != ImageKind::A) {
        for (const auto& [m, c] : img.terms()) support.insert(m);
        const MRat lead = fam.kind == ImageKind::B ? x_plus(vars, r, 1, 1) : x_minus(vars, r, 1, 1);
        const SkewElement orbit = orbit_sum(lead, unit_shift(vars, r, 1, 1, fam.kind == ImageKind::B ? 1 : -1), group);
        ++orbit_count;
        if (orbit_witness.empty() && !(orbit == img)) {
          orbit_witness = std::string(fam.name) + "_" + std::to_string(r) + " differs from its orbit-sum form";
        }
      }
      const PolyMatrix& poly =
          fam.kind == ImageKind::A ? rep.A_poly(r) : (fam.kind == ImageKind::B ? rep.B_poly(r) : rep.C_poly(r));
      for (const Scalar& u0 : points) {
        ++count;
        if (!witness.empty()) continue;
        try {
          const SparseMatrix lhs = act_on_basis(img, rep.basis, u0);
          const SparseMatrix rhs = evaluate(poly, u0);
          if (const auto diff = first_difference(lhs, rhs)) {
            witness = std::string(fam.name) + "_" + std::to_string(r) + " at u=" + to_string(u0) + ": " + diff->describe();
          }
        } catch (const EvaluationError& ex) {
          witness = std::string(fam.name) + "_" + std::to_string(r) + " at u=" + to_string(u0) + ": " + ex.what();
        }
      }
    }
    auto rec = make_check(std::string("galois_matrix_") + fam.name, witness.empty(), witness, count);
    if (count == 0) rec.status = Status::Skip;
    out.push_back(std::move(rec));
  }
  out.push_back(make_check("galois_invariance", inv_witness.empty(), inv_witness, inv_count));
  {
    auto rec = make_check("galois_orbit_form", orbit_witness.empty(), orbit_witness, orbit_count);
    if (orbit_count == 0) rec.status = Status::Skip;
    out.push_back(std::move(rec));
  }
  {
    std::string witness;
    long count = 0;
    for (int r = 1; r < n; ++r) {
      for (std::size_t slot : vars.layout().row(r)) {
        const auto& s = vars.layout().slots()[slot];
        for (int e : {1, -1}) {
          ++count;
          if (witness.empty() && !support.count(unit_shift(vars, r, s.i, s.k, e))) {
            witness = "delta_" + std::to_string(r) + std::to_string(s.i) + "^" + std::to_string(s.k) +
                      (e > 0 ? "" : "^-1") + " missing from the supports";
          }
        }
      }
    }
    auto rec = make_check("galois_support", witness.empty(), witness, count);
    if (count == 0) rec.status = Status::Skip;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace wgt
