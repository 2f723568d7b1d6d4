#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lokal/samuel.hpp"

namespace lokal {

/// A random i-plane through the origin, parametrized by i variables:
/// the first i coordinates map to the parameters, the rest to random integer combinations.
struct PlaneSample {
  std::size_t i;
  LinearSubstitution map;
  SampleSeed seed;
  std::uint64_t stream;
};

PlaneSample sample_plane(std::size_t d, std::size_t i, const SampleSeed& s, std::uint64_t stream);

/// Pulls the generators back to the plane. Generators vanishing on the plane are dropped;
/// throws NotPrimary if all of them vanish and InputError on a rank-deficient map.
LocalIdeal restrict_ideal(const LocalIdeal& I, const PlaneSample& H);

struct SectionExponent {
  Rational nu;
  std::vector<std::uint64_t> streams;  // plane streams that were compared
  bool agreement = true;
};

/// nu^(i): the Lojasiewicz exponent of I restricted to a generic i-plane, checked on two samples.
SectionExponent section_exponent(const LocalIdeal& I, std::size_t i, const SamuelOptions& opts = {});

struct SectionProfile {
  std::vector<Rational> exponents;     // nu^(1) .. nu^(d)
  unsigned multiplicity = 0;
  std::vector<std::vector<std::uint64_t>> samples_used;
  std::vector<bool> agreement;
};

/// All section exponents and e(I). Throws std::logic_error if the chain is not
/// nondecreasing or nu^(1) differs from ord_m(I).
SectionProfile profile(const LocalIdeal& I, const SamuelOptions& opts = {});

struct InequalityReport {
  unsigned e = 0;
  std::vector<Rational> nu;
  Rational product;
  bool holds = false;
  bool tight = false;
  std::vector<std::uint64_t> seeds;
};

/// e(I) <= nu^(1) ... nu^(d).
InequalityReport verify_inequality(const LocalIdeal& I, const SamuelOptions& opts = {});

struct MixedChainReport {
  std::vector<unsigned> mixed;     // e(I^[k], m^[d-k]) for k = 0..d
  std::vector<Rational> nu;
  std::vector<bool> ratio_ok;      // e_k / e_(k-1) <= nu^(k), k = 1..d
  std::vector<bool> product_ok;    // e_k <= nu^(1) ... nu^(k)
  bool holds = false;
};

MixedChainReport mixed_chain_check(const LocalIdeal& I, const SamuelOptions& opts = {});

struct EqualityFamilyReport {
  std::vector<Polynomial> generators;
  std::vector<Rational> nu;
  std::vector<Rational> expected_nu;   // a_i / b
  unsigned e = 0;
  Rational expected_e;                 // prod a_i / b^d
  unsigned e_reference = 0;            // e(l_1^a_1, ..., l_d^a_d) = e(I^b)
  bool holds = false;
};

/// Builds I from linear forms l_i and exponents a_i: (l_i^a_i) for b = 1, otherwise the
/// integral closure of (l_i^(a_i/b)), which requires b | a_i. Checks nu^(i) = a_i/b and
/// b^d e(I) = prod a_i. Throws InputError on a non-invertible form matrix.
EqualityFamilyReport equality_family_check(const std::vector<Polynomial>& forms, const std::vector<unsigned>& a,
                                           unsigned b, const SamuelOptions& opts = {});

/// Resultant of two binary forms, from the Sylvester matrix of their coefficient lists.
Rational binary_resultant(const Polynomial& F, const Polynomial& G);

struct Prop51Report {
  Rational resultant;                  // of In(g1), In(g2)
  bool initial_forms_coprime = false;  // condition 2a
  std::optional<bool> containment;     // g_i in the closure of I^b; nullopt when inconclusive
  std::vector<Rational> samuel_g;      // v_I(g_1), v_I(g_2) when computed
  unsigned e_g = 0;                    // e(g1, g2), 0 when (g1, g2) is not primary
  unsigned e_I = 0;
  bool multiplicity_match = false;     // e(g1, g2) = b^2 e(I)
  bool hypotheses_hold = false;        // 2a and 2b
  std::vector<Rational> nu;
  Rational product;
  std::optional<bool> conclusion;      // e(I) = nu^(1) nu^(2), checked when the hypotheses hold
  std::string status;                  // "confirmed", "2a-fails", "2b-fails", "inconclusive-containment", "violated"
};

/// Dimension 2 only: checks conditions 2a and 2b for (g1, g2, b) and, when they hold,
/// that equality e(I) = nu^(1) nu^(2) follows.
Prop51Report prop51_check(const LocalIdeal& I, const Polynomial& g1, const Polynomial& g2, unsigned b,
                          const SamuelOptions& opts = {});

}  // namespace lokal
