#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lokal {

using Rational = mpq_class;
using Integer = mpz_class;

/// Always "p/q", with q = 1 for integers; never a decimal.
std::string to_string(const Rational& q);

/// Accepts "p", "p/q", "-p/q". Throws InputError on anything else or q = 0.
Rational rational_from_string(const std::string& text);

/// Dense rational matrix helpers (row-major, exact Gaussian elimination).
using RationalMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);

}  // namespace lokal
