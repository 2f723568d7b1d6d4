#include "lokal/sections.hpp"

#include <algorithm>
#include <stdexcept>

#include "lokal/errors.hpp"

namespace lokal {

namespace {

constexpr std::uint64_t kPlaneStreamBase = 1000;

std::uint64_t plane_stream(std::size_t i, unsigned round, unsigned draw) {
  return kPlaneStreamBase + 16 * i + 2 * round + draw;
}

Rational product_of(const std::vector<Rational>& v, std::size_t upto) {
  Rational p = 1;
  for (std::size_t j = 0; j < upto; ++j) p *= v[j];
  return p;
}

}  // namespace

PlaneSample sample_plane(std::size_t d, std::size_t i, const SampleSeed& s, std::uint64_t stream) {
  if (i < 1 || i > d) throw InputError("plane dimension must lie between 1 and the number of variables");
  Sampler sampler(s, stream);
  RationalMatrix m(d, std::vector<Rational>(i, 0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < i; ++c) m[r][c] = r < i ? Rational(r == c ? 1 : 0) : Rational(sampler.nonzero());
  return PlaneSample{i, LinearSubstitution(d, i, std::move(m)), s, stream};
}

LocalIdeal restrict_ideal(const LocalIdeal& I, const PlaneSample& H) {
  if (H.map.source_nvars() != I.nvars()) throw DimensionMismatch("plane and ideal in different dimensions");
  if (H.map.rank() != H.i) throw InputError("plane parametrization is rank deficient");
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    Polynomial r = substitute_linear(g, H.map);
    if (!r.is_zero()) gens.push_back(std::move(r));
  }
  if (gens.empty()) throw NotPrimary("every generator vanishes on the plane", "");
  return LocalIdeal(std::move(gens));
}

namespace {

std::optional<Rational> sampled_section(const LocalIdeal& I, std::size_t i, const SamuelOptions& opts,
                                        const SampleSeed& s, std::uint64_t stream) {
  try {
    const LocalIdeal J = restrict_ideal(I, sample_plane(I.nvars(), i, s, stream));
    if (i == 1) return Rational(J.order());  // on a line, (t^k) has exponent k
    return lojasiewicz(J, opts);
  } catch (const NotPrimary&) {
    return std::nullopt;
  }
}

}  // namespace

SectionExponent section_exponent(const LocalIdeal& I, std::size_t i, const SamuelOptions& opts) {
  const std::size_t d = I.nvars();
  if (i < 1 || i > d) throw InputError("section index must lie between 1 and the number of variables");
  I.certificate(opts.cap_level);
  SectionExponent out;
  if (i == d) {
    out.nu = lojasiewicz(I, opts);
    return out;
  }
  const std::optional<Rational> direct = i == 1 ? std::optional<Rational>(Rational(I.order())) : std::nullopt;
  for (unsigned round = 0; round <= kMaxEscalations; ++round) {
    const SampleSeed s(opts.seed.seed, escalated_bound(opts.seed.coefficient_bound, round));
    const auto sa = plane_stream(i, round, 0), sb = plane_stream(i, round, 1);
    const auto a = sampled_section(I, i, opts, s, sa);
    const auto b = sampled_section(I, i, opts, s, sb);
    out.streams.push_back(sa);
    out.streams.push_back(sb);
    if (a && b && *a == *b && (!direct || *a == *direct)) {
      out.nu = *a;
      out.agreement = round == 0;
      return out;
    }
  }
  throw GenericityFailure("plane sections disagree for i = " + std::to_string(i));
}

SectionProfile profile(const LocalIdeal& I, const SamuelOptions& opts) {
  SectionProfile p;
  for (std::size_t i = 1; i <= I.nvars(); ++i) {
    SectionExponent s = section_exponent(I, i, opts);
    p.exponents.push_back(s.nu);
    p.samples_used.push_back(s.streams);
    p.agreement.push_back(s.agreement);
  }
  p.multiplicity = multiplicity(I, opts.seed, opts.cap_level);
  if (p.exponents.front() != I.order()) throw std::logic_error("first section exponent differs from ord_m(I)");
  for (std::size_t i = 1; i < p.exponents.size(); ++i)
    if (p.exponents[i] < p.exponents[i - 1]) throw std::logic_error("section exponents are not nondecreasing");
  return p;
}

InequalityReport verify_inequality(const LocalIdeal& I, const SamuelOptions& opts) {
  const SectionProfile p = profile(I, opts);
  InequalityReport r;
  r.e = p.multiplicity;
  r.nu = p.exponents;
  r.product = product_of(p.exponents, p.exponents.size());
  r.holds = r.e <= r.product;
  r.tight = r.e == r.product;
  for (const auto& s : p.samples_used) r.seeds.insert(r.seeds.end(), s.begin(), s.end());
  return r;
}

MixedChainReport mixed_chain_check(const LocalIdeal& I, const SamuelOptions& opts) {
  MixedChainReport r;
  const std::size_t d = I.nvars();
  r.nu = profile(I, opts).exponents;
  for (std::size_t k = 0; k <= d; ++k) r.mixed.push_back(mixed_multiplicity(I, k, opts.seed, opts.cap_level));
  r.holds = true;
  for (std::size_t k = 1; k <= d; ++k) {
    const bool ratio = Rational(r.mixed[k]) <= r.nu[k - 1] * r.mixed[k - 1];
    const bool prod = Rational(r.mixed[k]) <= product_of(r.nu, k);
    r.ratio_ok.push_back(ratio);
    r.product_ok.push_back(prod);
    r.holds = r.holds && ratio && prod;
  }
  return r;
}

namespace {

bool is_linear_form(const Polynomial& l) { return !l.is_zero() && l.order() == 1 && l.degree() == 1; }

// Minimal exponents alpha with sum alpha_i / c_i >= 1, i.e. the integral closure of (y_i^c_i).
std::vector<Exponent> closure_of_powers(const std::vector<unsigned>& c) {
  const std::size_t d = c.size();
  std::vector<unsigned> bounds(c.begin(), c.end());
  std::vector<Exponent> out;
  Exponent cur(d);
  Integer L = 1;
  for (unsigned ci : c) L = lcm(L, Integer(ci));
  for (;;) {
    Integer s = 0;
    for (std::size_t j = 0; j < d; ++j) s += Integer(cur[j]) * (L / c[j]);
    if (s >= L) out.push_back(cur);
    std::size_t j = 0;
    while (j < d) {
      if (cur[j] < bounds[j]) {
        cur.set(j, cur[j] + 1);
        break;
      }
      cur.set(j, 0);
      ++j;
    }
    if (j == d) break;
  }
  return Diagram::from_vertices(out).vertices();
}

}  // namespace

EqualityFamilyReport equality_family_check(const std::vector<Polynomial>& forms, const std::vector<unsigned>& a,
                                           unsigned b, const SamuelOptions& opts) {
  const std::size_t d = forms.size();
  if (d == 0 || a.size() != d) throw InputError("need one exponent per linear form");
  if (b == 0) throw InputError("b must be positive");
  RationalMatrix m(d, std::vector<Rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (forms[i].nvars() != d) throw DimensionMismatch("need as many linear forms as variables");
    if (!is_linear_form(forms[i])) throw InputError("l_" + std::to_string(i + 1) + " is not a linear form");
    for (std::size_t j = 0; j < d; ++j) m[i][j] = forms[i].coefficient(Exponent::unit(d, j));
    if (a[i] == 0) throw InputError("exponents must be positive");
    if (i > 0 && a[i] < a[i - 1]) throw InputError("exponents must be nondecreasing");
    if (a[i] % b != 0) throw InputError("b must divide every exponent");
  }
  if (rank(m) != d) throw InputError("the linear forms are not independent");
  // y_i -> l_i
  const LinearSubstitution L(d, d, m);
  std::vector<unsigned> reduced;
  for (unsigned ai : a) reduced.push_back(ai / b);
  EqualityFamilyReport r;
  for (const auto& alpha : closure_of_powers(reduced))
    r.generators.push_back(substitute_linear(Polynomial::monomial(alpha), L));
  std::vector<Polynomial> ref;
  for (std::size_t i = 0; i < d; ++i) ref.push_back(power(forms[i], a[i]));

  const LocalIdeal I(r.generators);
  const SectionProfile p = profile(I, opts);
  r.nu = p.exponents;
  r.e = p.multiplicity;
  r.e_reference = multiplicity(LocalIdeal(ref), opts.seed, opts.cap_level);
  Rational prod = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Rational q(a[i], b);
    q.canonicalize();
    r.expected_nu.push_back(q);
    prod *= a[i];
  }
  Rational bd = 1;
  for (std::size_t i = 0; i < d; ++i) bd *= b;
  r.expected_e = prod / bd;
  r.holds = r.nu == r.expected_nu && Rational(r.e) == r.expected_e && Rational(r.e_reference) == prod;
  return r;
}

Rational binary_resultant(const Polynomial& F, const Polynomial& G) {
  if (F.nvars() != 2 || G.nvars() != 2) throw DimensionMismatch("binary forms need two variables");
  if (F.is_zero() || G.is_zero()) return 0;
  const unsigned p = F.order(), q = G.order();
  if (F.degree() != p || G.degree() != q) throw InputError("resultant needs homogeneous forms");
  const std::size_t size = p + q;
  if (size == 0) return 1;
  RationalMatrix S(size, std::vector<Rational>(size, 0));
  // coefficient of x^(deg-i) y^i sits in column shift + i
  for (std::size_t r = 0; r < q; ++r)
    for (unsigned i = 0; i <= p; ++i) S[r][r + i] = F.coefficient(Exponent{p - i, i});
  for (std::size_t r = 0; r < p; ++r)
    for (unsigned i = 0; i <= q; ++i) S[q + r][r + i] = G.coefficient(Exponent{q - i, i});
  return determinant(S);
}

Prop51Report prop51_check(const LocalIdeal& I, const Polynomial& g1, const Polynomial& g2, unsigned b,
                          const SamuelOptions& opts) {
  if (I.nvars() != 2) throw DimensionMismatch("this check is for two variables");
  if (g1.nvars() != 2 || g2.nvars() != 2) throw DimensionMismatch("g1 and g2 need two variables");
  if (g1.is_zero() || g2.is_zero()) throw InputError("g1 and g2 must be nonzero");
  if (b == 0) throw InputError("b must be positive");
  Prop51Report r;
  r.e_I = multiplicity(I, opts.seed, opts.cap_level);
  r.resultant = binary_resultant(g1.initial_form(), g2.initial_form());
  r.initial_forms_coprime = r.resultant != 0;
  if (!r.initial_forms_coprime) {
    r.status = "2a-fails";
    return r;
  }
  // g lies in the integral closure of I^b exactly when v_I(g) >= b
  try {
    r.containment = true;
    for (const auto* g : {&g1, &g2}) {
      const SamuelValue v = samuel_value(*g, I, opts);
      r.samuel_g.push_back(v.infinite ? Rational(-1) : v.value);
      if (!v.infinite && v.value < b) r.containment = false;
    }
  } catch (const NonTermination&) {
    r.containment.reset();
    r.status = "inconclusive-containment";
    return r;
  }
  try {
    r.e_g = static_cast<unsigned>(diagram_of_ideal(LocalIdeal({g1, g2}), opts.cap_level).colength);
  } catch (const NotPrimary&) {
    r.e_g = 0;
  } catch (const InputError&) {
    r.e_g = 0;  // a unit or constant term: (g1, g2) is not inside the maximal ideal
  }
  r.multiplicity_match = r.e_g != 0 && Rational(r.e_g) == Rational(b * b) * r.e_I;
  r.hypotheses_hold = *r.containment && r.multiplicity_match;
  if (!r.hypotheses_hold) {
    r.status = "2b-fails";
    return r;
  }
  const SectionProfile p = profile(I, opts);
  r.nu = p.exponents;
  r.product = product_of(p.exponents, p.exponents.size());
  r.conclusion = Rational(p.multiplicity) == r.product;
  r.status = *r.conclusion ? "confirmed" : "violated";
  return r;
}

}  // namespace lokal
