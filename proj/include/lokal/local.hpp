#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "lokal/diagram.hpp"
#include "lokal/polynomial.hpp"

namespace lokal {

/// Default truncation cap for primary certification.
inline constexpr unsigned kDefaultCapLevel = 64;

/// Seed and coefficient range for the randomized genericity choices.
struct SampleSeed {
  std::uint64_t seed = 0;
  long coefficient_bound = 997;

  SampleSeed() = default;
  /// Throws InputError when bound < 2.
  SampleSeed(std::uint64_t s, long bound);
};

/// Draws integer coefficients from an independent stream of a SampleSeed.
class Sampler {
 public:
  Sampler(const SampleSeed& s, std::uint64_t stream);
  /// Uniform on [-bound, bound] without 0.
  Integer nonzero();
  /// Random linear combination of the given polynomials.
  Polynomial combination(const std::vector<Polynomial>& polys);
  /// Random linear form in n variables.
  Polynomial linear_form(std::size_t n);

 private:
  std::mt19937_64 rng_;
  long bound_;
};

/// Exponents of I's diagram with a certificate that m^level lies in I.
struct PrimaryCertificate {
  unsigned level;     // smallest c with m^c inside I; complement degrees are < c
  Diagram diagram;
  std::size_t colength;
  unsigned max_vertex_degree;
};

/// For each vertex beta of the diagram (in order) an element R = sum_i c_i f_i of I with nu(R) = beta, Init(R) = 1.
struct StandardBasis {
  std::vector<Polynomial> elements;
  std::vector<std::vector<Polynomial>> cofactors;
};

/// An ideal of the local ring Q[X]_(X) given by generators in the maximal ideal.
/// Copies share a certification cache, filled at most once.
class LocalIdeal {
 public:
  /// Throws InputError on an empty list, a zero generator or a nonzero constant term,
  /// DimensionMismatch on mixed variable counts.
  explicit LocalIdeal(std::vector<Polynomial> generators);
  static LocalIdeal maximal(std::size_t nvars);

  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::size_t nvars() const noexcept { return gens_.front().nvars(); }
  std::size_t size() const noexcept { return gens_.size(); }
  /// ord_m(I), the least order of a generator.
  unsigned order() const;
  bool is_monomial() const;

  /// Diagram and colength; throws NotPrimary if no certificate is reached below cap_level.
  const PrimaryCertificate& certificate(unsigned cap_level = kDefaultCapLevel) const;
  const StandardBasis& standard_basis(unsigned cap_level = kDefaultCapLevel) const;

 private:
  struct Cache;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

LocalIdeal substitute_linear(const LocalIdeal& I, const LinearSubstitution& L);

/// Echelon certification of the diagram of I. Throws NotPrimary with the partial diagram.
PrimaryCertificate diagram_of_ideal(const LocalIdeal& I, unsigned cap_level = kDefaultCapLevel);

/// Largest m <= m_max with g in I^m. at_cap is set when g lies in I^{m_max},
/// so the true order may be larger.
struct IdealOrder {
  unsigned value;
  bool at_cap;
};
IdealOrder ord_ideal(const Polynomial& g, const LocalIdeal& I, unsigned m_max);

/// ord_I(g) for several g at once, sharing the power ladder.
std::vector<IdealOrder> ord_ideal_many(const std::vector<Polynomial>& gs, const LocalIdeal& I, unsigned m_max);

/// e(I) as colength of a parameter ideal (randomized reduction when I has more than n generators).
unsigned multiplicity(const LocalIdeal& I, const SampleSeed& s, unsigned cap_level = kDefaultCapLevel);

/// e(I^[k], m^[d-k]) via k random combinations of the generators and d-k random linear forms.
unsigned mixed_multiplicity(const LocalIdeal& I, std::size_t k, const SampleSeed& s,
                            unsigned cap_level = kDefaultCapLevel);

/// The ideal of k random combinations of I's generators and n-k random linear forms.
LocalIdeal random_parameter_ideal(const LocalIdeal& I, std::size_t k, Sampler& sampler);

/// Bound used on the given escalation round (0 for the first attempt).
long escalated_bound(long bound, unsigned round);

/// Number of escalations allowed after the first disagreement.
inline constexpr unsigned kMaxEscalations = 3;

}  // namespace lokal
