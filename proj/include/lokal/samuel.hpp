#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "lokal/local.hpp"

namespace lokal {

/// Q[[X]] as a free module over Q[[U]] (U_i acting as f_i) on the basis
/// X^alpha, alpha in the complement of the diagram of I = (f_1..f_n).
class ModuleStructure {
 public:
  /// Requires exactly n = nvars generators and a primary certificate.
  ModuleStructure(const LocalIdeal& I, unsigned u_level, unsigned cap_level = kDefaultCapLevel);

  const LocalIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<Exponent>& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  unsigned u_level() const noexcept { return u_level_; }
  /// X-truncation used on the first division round.
  unsigned x_level() const noexcept { return x_level_at(0); }

  /// Coefficients a_alpha(U) mod (U)^u_level with h = sum a_alpha(f) X^alpha,
  /// indexed like basis(); each is a polynomial in n U-variables.
  std::vector<Polynomial> expand(const Polynomial& h) const;

 private:
  unsigned x_level_at(unsigned round) const { return c_ + (u_level_ - round - 1) * v_; }

  LocalIdeal ideal_;
  const StandardBasis* sb_;
  std::vector<Exponent> basis_;
  std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
  unsigned u_level_, c_, v_;
};

/// det(lambda Id - M) = lambda^e + a_1 lambda^(e-1) + ... + a_e with series entries truncated at U-degree bound.
struct CharPolyData {
  std::size_t degree = 0;
  std::vector<Polynomial> coeffs;                  // a_1..a_e
  std::vector<std::optional<unsigned>> orders;     // ord_U(a_k), nullopt when a_k = 0 mod (U)^u_level
  unsigned u_level = 0;
};

/// Division-free characteristic polynomial (Berkowitz) of a square matrix over
/// Q[U]/(U)^bound. Returns a_1..a_e.
std::vector<Polynomial> characteristic_coefficients(const std::vector<std::vector<Polynomial>>& matrix,
                                                    std::size_t u_vars, unsigned bound);

/// Matrix of multiplication by g on the module basis, entries in the U-series ring.
std::vector<std::vector<Polynomial>> multiplication_matrix(const Polynomial& g, const ModuleStructure& M);

CharPolyData char_poly(const Polynomial& g, const ModuleStructure& M);

struct SamuelOptions {
  SampleSeed seed{};
  unsigned cap_level = kDefaultCapLevel;
  unsigned start_u_level = 0;    // 0 picks the starting level from the orders of g and I
  unsigned max_u_level = 96;
  bool exact = false;            // search over Q instead of two large primes
};

/// v(g) = min_k d_k / k, certified by the rule min <= u_level / e.
struct SamuelValue {
  bool infinite = false;
  Rational value;
  unsigned k = 0;
  unsigned d_k = 0;
  unsigned u_level_used = 0;
  std::size_t multiplicity = 0;
};

SamuelValue samuel_value(const Polynomial& g, const LocalIdeal& I, const SamuelOptions& opts = {});

/// Minimum of samuel_value over the given generators. Throws InputError if all are zero.
Rational samuel_of_ideal(const std::vector<Polynomial>& J, const LocalIdeal& I, const SamuelOptions& opts = {});

/// 1 / v_I(m).
Rational lojasiewicz(const LocalIdeal& I, const SamuelOptions& opts = {});

/// A degree-e(I) monic relation g^e + sum a_k(f) g^(e-k) = 0 over the parameters f
/// (the generators of I, or a random reduction when there are more than n).
struct IntegralDependence {
  std::vector<Polynomial> parameters;
  CharPolyData relation;
};
IntegralDependence integral_dependence_relation(const Polynomial& g, const LocalIdeal& I, unsigned u_level,
                                                const SamuelOptions& opts = {});

/// The parameter ideal used for I: I itself with n generators, else a random reduction
/// checked by agreement of two draws' colengths.
LocalIdeal parameter_ideal(const LocalIdeal& I, const SamuelOptions& opts, unsigned round = 0, unsigned draw = 0);

}  // namespace lokal
