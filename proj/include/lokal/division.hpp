#pragma once

#include <string>
#include <vector>

#include "lokal/diagram.hpp"
#include "lokal/polynomial.hpp"

namespace lokal {

/// F = sum D_i F_i + R up to terms of total degree >= level, with
/// Supp(R) in the complement and Supp(D_i) + beta^i in the i-th cell.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  TruncationLevel level;
};

/// Grauert-Hironaka division of F by the divisors, cells taken in list order.
/// Quotients and remainder are exact below the level (the truncation of the
/// formal division). Throws InputError on a zero divisor or empty list.
DivisionResult divide(const Polynomial& F, const std::vector<Polynomial>& divisors, TruncationLevel level);

/// Working form used by iterated division: processes F below work_level only.
/// The remainder is exact below work_level; quotient i is exact below
/// work_level - |nu(F_i)| and carries no terms at or above that degree.
DivisionResult divide_raw(const Polynomial& F, const std::vector<Polynomial>& divisors, unsigned work_level);

/// Empty string when the support contracts hold, otherwise a description of the first violation.
std::string check_support_contracts(const DivisionResult& r, const std::vector<Polynomial>& divisors);

}  // namespace lokal
