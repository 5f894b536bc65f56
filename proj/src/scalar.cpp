#include "wgt/arith/scalar.hpp"

#include "wgt/errors.hpp"

namespace wgt {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  const std::string_view num = slash == std::string_view::npos ? t : t.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ParseError("not an exact fraction: '" + std::string(text) + "'");
  }
  const std::string n(num.front() == '+' ? num.substr(1) : num);
  mpz_class z_num(n, 10);
  mpz_class z_den(std::string(den), 10);
  if (z_den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Scalar q(z_num, z_den);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

std::string to_fraction_string(const Scalar& s) {
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

bool is_integer(const Scalar& s) { return s.get_den() == 1; }

bool is_nonneg_integer(const Scalar& s) { return is_integer(s) && sgn(s) >= 0; }

Scalar binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
  return Scalar(r);
}

Scalar factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(r);
}

std::vector<Scalar> elementary_symmetric(const std::vector<Scalar>& values) {
  std::vector<Scalar> e(values.size() + 1, Scalar(0));
  e[0] = 1;
  for (std::size_t m = 0; m < values.size(); ++m) {
    for (std::size_t k = m + 1; k >= 1; --k) e[k] += e[k - 1] * values[m];
  }
  return e;
}

}  // namespace wgt
