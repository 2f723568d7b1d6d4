#pragma once

#include <vector>

#include "lokal/samuel.hpp"

namespace lokal {

/// max_k ord_I(g^k) / k over 1 <= k <= k_max.
struct FeketeEstimate {
  Rational best;
  unsigned k_best = 0;
  unsigned k_max = 0;
  std::vector<unsigned> orders;  // ord_I(g^k), k = 1..k_max
};

/// Throws InputError on g = 0, std::logic_error if ord_I(g^2k) < 2 ord_I(g^k) for some k.
FeketeEstimate fekete_lower(const Polynomial& g, const LocalIdeal& I, unsigned k_max = 24);

/// Newton polyhedron conv(exponents) + R^d_{>=0} of a primary monomial ideal, d <= 3,
/// described by its facets <w, x> >= c with c > 0 (primitive integer w >= 0).
class NewtonPolyhedron {
 public:
  struct Facet {
    std::vector<Integer> normal;
    Integer offset;
    std::vector<Exponent> points;  // generator exponents on the facet
  };

  /// Throws InputError on non-monomial generators, more than 3 variables or a non-primary ideal.
  static NewtonPolyhedron of_ideal(const LocalIdeal& I);

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }

  /// Largest t with e in t * NP.
  Rational value(const Exponent& e) const;
  /// d! times the volume of the region below the polyhedron.
  Integer multiplicity() const;

 private:
  std::size_t n_ = 0;
  std::vector<Facet> facets_;
};

/// newton value of a monomial g with respect to a monomial ideal.
Rational newton_value(const LocalIdeal& I, const Polynomial& g);

/// g^e + sum_k a_k(f) g^(e-k) modulo m^level, using the relation computed at a
/// U-level that makes the truncation exact. Zero whenever the relation is correct.
Polynomial cayley_hamilton_residual(const Polynomial& g, const LocalIdeal& I, TruncationLevel level,
                                    const SamuelOptions& opts = {});

}  // namespace lokal
