#include "wgt/gamma.hpp"

#include <algorithm>
#include <map>

#include "wgt/errors.hpp"

namespace wgt {

std::vector<const SparseMatrix*> GammaGenerators::flat() const {
  std::vector<const SparseMatrix*> out;
  for (const auto& row : a) {
    for (const auto& m : row) out.push_back(&m);
  }
  return out;
}

GammaGenerators gamma_generators(const Representation& rep) {
  GammaGenerators g;
  for (int r = 1; r <= rep.n(); ++r) {
    const PolyMatrix& A = rep.A_poly(r);
    const int top = rep.pyramid().prefix(r);
    if (A.degree() != top || !(A.coeff(top) == SparseMatrix::identity(rep.dim()))) {
      throw InvariantViolation("A_" + std::to_string(r) + " is not monic of degree " + std::to_string(top));
    }
    std::vector<SparseMatrix> row;
    for (int k = 1; k <= top; ++k) row.push_back(A.coeff(top - k));
    g.a.push_back(std::move(row));
  }
  return g;
}

Character character_of(const GTPattern& mu) {
  Character ch;
  for (int r = 1; r <= mu.layout().pyramid().n(); ++r) {
    const auto e = elementary_symmetric(mu.row_l_values(r));
    ch.insert(ch.end(), e.begin() + 1, e.end());
  }
  return ch;
}

Character character_of(const Representation& rep, const GammaGenerators& gens, std::size_t idx) {
  Character ch = character_of(rep.basis[idx]);
  std::size_t pos = 0;
  for (int r = 1; r <= rep.n(); ++r) {
    for (int k = 1; k <= rep.pyramid().prefix(r); ++k, ++pos) {
      const Scalar diag = gens.at(r, k).at(idx, idx);
      if (diag != ch[pos]) {
        throw InvariantViolation("a_" + std::to_string(r) + "^(" + std::to_string(k) + ") at basis vector " +
                                 std::to_string(idx) + ": matrix " + to_string(diag) + ", symmetric function " +
                                 to_string(ch[pos]));
      }
    }
  }
  return ch;
}

mpz_class fiber_bound(const Pyramid& pyr) {
  mpz_class b = 1;
  for (int r = 1; r < pyr.n(); ++r) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(pyr.prefix(r)));
    b *= f;
  }
  return b;
}

FiberReport fibers(const Representation& rep) {
  const GammaGenerators gens = gamma_generators(rep);
  FiberReport out;
  std::map<Character, std::size_t> where;
  for (std::size_t idx = 0; idx < rep.dim(); ++idx) {
    Character ch = character_of(rep, gens, idx);
    auto [it, inserted] = where.emplace(ch, out.classes.size());
    if (inserted) out.classes.push_back({std::move(ch), {}});
    out.classes[it->second].members.push_back(idx);
  }
  out.bound = fiber_bound(rep.pyramid());
  for (const auto& c : out.classes) {
    out.largest = std::max(out.largest, c.members.size());
    if (c.members.size() != 1) out.all_singletons = false;
  }
  out.within_bound = mpz_class(static_cast<unsigned long>(out.largest)) <= out.bound;
  return out;
}

std::vector<CheckRecord> gamma_checks(const Representation& rep) {
  std::vector<CheckRecord> out;
  const GammaGenerators gens = gamma_generators(rep);
  const auto all = gens.flat();
  {
    std::string witness;
    long pairs = 0;
    for (std::size_t x = 0; x < all.size() && witness.empty(); ++x) {
      for (std::size_t y = x + 1; y < all.size(); ++y, ++pairs) {
        const SparseMatrix c = commutator(*all[x], *all[y]);
        if (!c.is_zero()) {
          witness = "generators #" + std::to_string(x) + ", #" + std::to_string(y) + " do not commute";
          break;
        }
      }
    }
    out.push_back(make_check("gamma_commute", witness.empty(), witness, pairs));
  }
  {
    std::string witness;
    for (std::size_t idx = 0; idx < rep.dim(); ++idx) {
      try {
        character_of(rep, gens, idx);
      } catch (const InvariantViolation& ex) {
        witness = ex.what();
        break;
      }
    }
    out.push_back(make_check("iota_consistency", witness.empty(), witness, static_cast<long>(rep.dim())));
  }
  const FiberReport fr = fibers(rep);
  {
    std::string witness;
    for (const auto& c : fr.classes) {
      if (c.members.size() > 1) {
        witness = "class of size " + std::to_string(c.members.size()) + " at character " + to_string(c.character);
        break;
      }
    }
    auto rec = make_check("fibers_singleton", fr.all_singletons, witness, static_cast<long>(fr.classes.size()));
    rec.detail = std::to_string(fr.classes.size()) + " classes";
    out.push_back(std::move(rec));
  }
  {
    auto rec = make_check("fiber_bound", fr.within_bound,
                          "largest class " + std::to_string(fr.largest) + " exceeds " + fr.bound.get_str(),
                          static_cast<long>(fr.classes.size()));
    rec.detail = "largest " + std::to_string(fr.largest) + ", bound " + fr.bound.get_str();
    out.push_back(std::move(rec));
  }
  return out;
}

std::string to_string(const Character& ch) {
  std::string out = "(";
  for (std::size_t k = 0; k < ch.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(ch[k]);
  }
  return out + ")";
}

}  // namespace wgt
