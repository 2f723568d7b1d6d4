#pragma once

#include <random>

#include "lokal/polynomial.hpp"

namespace lokal::testing {

/// Random polynomial with up to `terms` terms, degree in [min_deg, max_deg], small rational coefficients.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg, std::size_t terms,
                                    unsigned min_deg = 0, int max_den = 3) {
  PolynomialBuilder b(nvars);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, max_den);
  std::uniform_int_distribution<unsigned> deg(min_deg, max_deg);
  for (std::size_t t = 0; t < terms; ++t) {
    unsigned d = deg(rng);
    Exponent e(nvars);
    for (std::size_t j = 0; j + 1 < nvars; ++j) {
      std::uniform_int_distribution<unsigned> part(0, d);
      unsigned a = part(rng);
      e.set(j, a);
      d -= a;
    }
    e.set(nvars - 1, d);
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    b.add(e, c);
  }
  return std::move(b).build();
}

}  // namespace lokal::testing
