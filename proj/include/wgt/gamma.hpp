#pragma once

#include <gmpxx.h>

#include <vector>

#include "wgt/arith/sparse_matrix.hpp"
#include "wgt/check.hpp"
#include "wgt/rep.hpp"

namespace wgt {

// a_r^(k): coefficient of u^{p_1+...+p_r-k} in A_r(u), r = 1..n, k = 1..p_1+...+p_r.
struct GammaGenerators {
  std::vector<std::vector<SparseMatrix>> a;

  const SparseMatrix& at(int r, int k) const {
    return a.at(static_cast<std::size_t>(r - 1)).at(static_cast<std::size_t>(k - 1));
  }
  // All generators in (r, k) order.
  std::vector<const SparseMatrix*> flat() const;
};

GammaGenerators gamma_generators(const Representation& rep);

// Values of the a_r^(k) in (r, k) order.
using Character = std::vector<Scalar>;

// a_r^(k) -> e_k of the row-r l-values of mu.
Character character_of(const GTPattern& mu);

// Same, cross-checked against the diagonal of the generator matrices at basis
// index idx; a mismatch raises InvariantViolation.
Character character_of(const Representation& rep, const GammaGenerators& gens, std::size_t idx);

struct FiberClass {
  Character character;
  std::vector<std::size_t> members;
};

struct FiberReport {
  std::vector<FiberClass> classes;  // in order of first basis member
  bool all_singletons = true;
  std::size_t largest = 0;
  mpz_class bound;
  bool within_bound = true;
};

// p_1! (p_1+p_2)! ... (p_1+...+p_{n-1})!
mpz_class fiber_bound(const Pyramid& pyr);

FiberReport fibers(const Representation& rep);

// Commutativity, iota-consistency, singleton fibers and the size bound.
std::vector<CheckRecord> gamma_checks(const Representation& rep);

std::string to_string(const Character& ch);

}  // namespace wgt
