#include "wgt/arith/unipoly.hpp"

namespace wgt {

std::string to_string(const ScalarPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Scalar& c = p.coeff(k);
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const Scalar mag = neg ? Scalar(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::vector<ScalarPoly> lagrange_basis(const std::vector<Scalar>& nodes) {
  std::vector<ScalarPoly> basis;
  basis.reserve(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    ScalarPoly lj(Scalar(0), {Scalar(1)});
    Scalar denom = 1;
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      if (m == j) continue;
      if (nodes[m] == nodes[j]) {
        throw DegenerateNodes("nodes " + std::to_string(j) + " and " + std::to_string(m) + " coincide at " +
                              nodes[j].get_str());
      }
      lj = lj * ScalarPoly(Scalar(0), {Scalar(-nodes[m]), Scalar(1)});
      denom *= nodes[j] - nodes[m];
    }
    basis.push_back(lj * Scalar(1 / denom));
  }
  return basis;
}

}  // namespace wgt
