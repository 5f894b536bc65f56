#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wgt {

// Exact rational number; always kept canonical (reduced, positive denominator).
using Scalar = mpq_class;

// Parses "a", "-a", "a/b" (optionally surrounded by whitespace).
Scalar parse_scalar(std::string_view text);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Scalar& s);

// Always "n/d", also for integers ("2/1"); used by the matrix dump format.
std::string to_fraction_string(const Scalar& s);

bool is_integer(const Scalar& s);

// True iff s is an integer >= 0.
bool is_nonneg_integer(const Scalar& s);

Scalar binomial(long n, long k);
Scalar factorial(long n);

// Elementary symmetric polynomials e_0..e_m of the given values.
std::vector<Scalar> elementary_symmetric(const std::vector<Scalar>& values);

}  // namespace wgt
