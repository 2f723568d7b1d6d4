#include "lokal/local.hpp"

#include <algorithm>
#include <mutex>
#include <optional>

#include "lokal/echelon.hpp"
#include "lokal/errors.hpp"

namespace lokal {

SampleSeed::SampleSeed(std::uint64_t s, long bound) : seed(s), coefficient_bound(bound) {
  if (bound < 2) throw InputError("coefficient bound must be at least 2");
}

Sampler::Sampler(const SampleSeed& s, std::uint64_t stream) : bound_(s.coefficient_bound) {
  if (bound_ < 2) throw InputError("coefficient bound must be at least 2");
  std::seed_seq seq{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  rng_.seed(seq);
}

Integer Sampler::nonzero() {
  // plain modulo keeps the stream identical across standard libraries
  const auto span = static_cast<std::uint64_t>(2 * bound_);
  const long r = static_cast<long>(rng_() % span);
  return Integer(r < bound_ ? r - bound_ : r - bound_ + 1);
}

Polynomial Sampler::combination(const std::vector<Polynomial>& polys) {
  PolynomialBuilder b(polys.front().nvars());
  for (const auto& p : polys) b.add(p, Rational(nonzero()));
  return std::move(b).build();
}

Polynomial Sampler::linear_form(std::size_t n) {
  PolynomialBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.add(Exponent::unit(n, i), Rational(nonzero()));
  return std::move(b).build();
}

struct LocalIdeal::Cache {
  std::mutex mu;
  std::optional<PrimaryCertificate> certificate;
  std::optional<StandardBasis> basis;
};

LocalIdeal::LocalIdeal(std::vector<Polynomial> generators)
    : gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (gens_.empty()) throw InputError("an ideal needs at least one generator");
  const std::size_t n = gens_.front().nvars();
  for (const auto& g : gens_) {
    if (g.nvars() != n) throw DimensionMismatch("generators in different numbers of variables");
    if (g.is_zero()) throw InputError("zero generator");
    if (g.order() == 0) throw InputError("generator with a nonzero constant term");
  }
}

LocalIdeal LocalIdeal::maximal(std::size_t nvars) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Polynomial::variable(nvars, i));
  return LocalIdeal(std::move(gens));
}

unsigned LocalIdeal::order() const {
  unsigned o = gens_.front().order();
  for (const auto& g : gens_) o = std::min(o, g.order());
  return o;
}

bool LocalIdeal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

const PrimaryCertificate& LocalIdeal::certificate(unsigned cap_level) const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->certificate) cache_->certificate = diagram_of_ideal(*this, cap_level);
  return *cache_->certificate;
}

namespace {

Polynomial shifted(const Polynomial& f, const Exponent& shift, unsigned bound) {
  Polynomial out(f.nvars());
  out.add_scaled_shifted(1, shift, f, bound);
  return out;
}

// Rows X^gamma f_j below the bound, inserted in increasing order of their initial exponent.
Echelon ideal_echelon(const std::vector<Polynomial>& gens, unsigned bound, bool with_cofactors) {
  const std::size_t n = gens.front().nvars();
  struct Pending {
    Exponent lead;
    std::size_t j;
    Exponent gamma;
  };
  std::vector<Pending> pending;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const unsigned o = gens[j].order();
    if (o >= bound) continue;
    for (const auto& gamma : exponents_below(n, bound - o))
      pending.push_back({gamma + gens[j].initial_exponent(), j, gamma});
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const Pending& a, const Pending& b) { return OrderLess{}(a.lead, b.lead); });
  Echelon E(n, bound);
  for (const auto& p : pending) {
    std::vector<Polynomial> cof;
    if (with_cofactors) {
      cof.assign(gens.size(), Polynomial(n));
      cof[p.j] = Polynomial::monomial(p.gamma);
    }
    E.insert(shifted(gens[p.j], p.gamma, bound), std::move(cof));
  }
  return E;
}

std::vector<Exponent> pivots(const Echelon& E) {
  std::vector<Exponent> out;
  for (const auto& [e, row] : E.rows()) out.push_back(e);
  return out;
}

}  // namespace

PrimaryCertificate diagram_of_ideal(const LocalIdeal& I, unsigned cap_level) {
  const std::size_t n = I.nvars();
  if (I.size() < n)
    throw NotPrimary("an ideal with fewer generators than variables is not primary to the maximal ideal", "");
  unsigned top = 0;
  for (const auto& g : I.generators()) top = std::max(top, g.order());
  unsigned N = std::min(std::max(top + 2, 3u), std::max(cap_level, 2u));
  for (;;) {
    const Echelon E = ideal_echelon(I.generators(), N, false);
    // All monomials of degree c in the span give m^c in I + m^N, hence m^c in I by Nakayama.
    for (unsigned c = 1; c < N; ++c) {
      const auto layer = exponents_of_degree(n, c);
      if (!std::all_of(layer.begin(), layer.end(), [&](const Exponent& e) { return E.has_pivot(e); })) continue;
      std::vector<Exponent> low;
      for (const auto& e : pivots(E))
        if (e.degree() <= c) low.push_back(e);
      Diagram d = Diagram::from_vertices(low);
      unsigned vmax = 0;
      for (const auto& v : d.vertices()) vmax = std::max(vmax, v.degree());
      const std::size_t colength = d.complement().size();
      return PrimaryCertificate{c, std::move(d), colength, vmax};
    }
    if (N >= cap_level) {
      const auto p = pivots(E);
      throw NotPrimary("no power of the maximal ideal found in the ideal below degree " + std::to_string(N),
                       p.empty() ? "{}" : Diagram::from_vertices(p).to_string());
    }
    N = std::min(cap_level, N + std::max(1u, N / 2));
  }
}

const StandardBasis& LocalIdeal::standard_basis(unsigned cap_level) const {
  const PrimaryCertificate cert = certificate(cap_level);
  std::lock_guard lock(cache_->mu);
  if (cache_->basis) return *cache_->basis;
  const Echelon E = ideal_echelon(gens_, cert.level + 1, true);
  StandardBasis sb;
  for (const auto& beta : cert.diagram.vertices()) {
    const auto& row = E.row(beta);
    PolynomialBuilder b(nvars());
    for (std::size_t i = 0; i < gens_.size(); ++i)
      if (!row.cofactors[i].is_zero()) b.add(row.cofactors[i] * gens_[i]);
    Polynomial R = std::move(b).build();
    if (R.is_zero() || !(R.initial_exponent() == beta)) throw std::logic_error("standard basis element has the wrong initial exponent");
    sb.elements.push_back(std::move(R));
    sb.cofactors.push_back(row.cofactors);
  }
  cache_->basis = std::move(sb);
  return *cache_->basis;
}

LocalIdeal substitute_linear(const LocalIdeal& I, const LinearSubstitution& L) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(substitute_linear(g, L));
  return LocalIdeal(std::move(gens));
}

namespace {

// Minimal generators of the monomial ideal (A) + ... + (A) (m summands).
std::vector<Exponent> monomial_power(const std::vector<Exponent>& gens, unsigned m) {
  std::vector<Exponent> cur{Exponent(gens.front().size())};
  for (unsigned k = 0; k < m; ++k) {
    std::vector<Exponent> next;
    for (const auto& a : cur)
      for (const auto& b : gens) next.push_back(a + b);
    cur = Diagram::from_vertices(next).vertices();
  }
  return cur;
}

bool in_monomial_ideal(const Polynomial& g, const std::vector<Exponent>& gens) {
  for (const auto& [e, c] : g.terms())
    if (std::none_of(gens.begin(), gens.end(), [&](const Exponent& v) { return v.divides(e); })) return false;
  return true;
}

}  // namespace

std::vector<IdealOrder> ord_ideal_many(const std::vector<Polynomial>& gs, const LocalIdeal& I, unsigned m_max) {
  const PrimaryCertificate& cert = I.certificate();
  const unsigned o = I.order();
  std::vector<IdealOrder> out(gs.size(), IdealOrder{0, m_max == 0});
  std::vector<unsigned> cap(gs.size(), 0);
  unsigned M = 0;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].nvars() != I.nvars()) throw DimensionMismatch("element and ideal in different numbers of variables");
    if (gs[i].is_zero()) throw InputError("ord_I of the zero element is infinite");
    // g in I^m forces ord_m(g) >= m ord_m(I)
    cap[i] = std::min(m_max, gs[i].order() / o);
    M = std::max(M, cap[i]);
  }
  if (M == 0) return out;

  std::vector<Exponent> mono;
  if (I.is_monomial())
    for (const auto& g : I.generators()) mono.push_back(g.initial_exponent());

  // m^N lies in I^m for N >= (m-1) v + c, so membership modulo m^N is exact.
  const unsigned N = (M - 1) * cert.max_vertex_degree + cert.level;
  std::optional<Echelon> E;
  for (unsigned m = 1; m <= M; ++m) {
    if (mono.empty()) {
      if (!E) {
        E = ideal_echelon(I.generators(), N, false);
      } else {
        Echelon next(I.nvars(), N);
        for (const auto& [p, row] : E->rows())
          for (const auto& f : I.generators()) next.insert(multiply(row.poly, f, N));
        E = std::move(next);
      }
    }
    const auto power = mono.empty() ? std::vector<Exponent>{} : monomial_power(mono, m);
    bool alive = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (cap[i] < m || out[i].value != m - 1) continue;
      const bool member = mono.empty() ? E->contains(gs[i]) : in_monomial_ideal(gs[i], power);
      if (member) {
        out[i].value = m;
        out[i].at_cap = m == m_max;
        alive = true;
      }
    }
    if (!alive) break;
  }
  return out;
}

IdealOrder ord_ideal(const Polynomial& g, const LocalIdeal& I, unsigned m_max) {
  return ord_ideal_many({g}, I, m_max).front();
}

LocalIdeal random_parameter_ideal(const LocalIdeal& I, std::size_t k, Sampler& sampler) {
  const std::size_t n = I.nvars();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Polynomial c = sampler.combination(I.generators());
    // a vanishing combination is a non-generic draw; the colength check downstream rejects it
    if (c.is_zero()) c = Polynomial::variable(n, 0);
    gens.push_back(std::move(c));
  }
  for (std::size_t i = k; i < n; ++i) gens.push_back(sampler.linear_form(n));
  return LocalIdeal(std::move(gens));
}

long escalated_bound(long bound, unsigned round) {
  for (unsigned r = 0; r < round; ++r) bound = bound * 10 + 7;
  return bound;
}

namespace {

std::optional<std::size_t> sampled_colength(const LocalIdeal& I, std::size_t k, const SampleSeed& s,
                                            std::uint64_t stream, unsigned cap_level) {
  Sampler sampler(s, stream);
  try {
    return diagram_of_ideal(random_parameter_ideal(I, k, sampler), cap_level).colength;
  } catch (const NotPrimary&) {
    return std::nullopt;
  }
}

unsigned generic_colength(const LocalIdeal& I, std::size_t k, const SampleSeed& s, unsigned cap_level) {
  for (unsigned round = 0; round <= kMaxEscalations; ++round) {
    const SampleSeed sr(s.seed, escalated_bound(s.coefficient_bound, round));
    const auto a = sampled_colength(I, k, sr, 2 * round, cap_level);
    const auto b = sampled_colength(I, k, sr, 2 * round + 1, cap_level);
    if (a && b && *a == *b) return static_cast<unsigned>(*a);
  }
  throw GenericityFailure("random reductions disagree after " + std::to_string(kMaxEscalations) +
                          " escalations");
}

}  // namespace

unsigned multiplicity(const LocalIdeal& I, const SampleSeed& s, unsigned cap_level) {
  const PrimaryCertificate& cert = I.certificate(cap_level);
  if (I.size() == I.nvars()) return static_cast<unsigned>(cert.colength);
  return generic_colength(I, I.nvars(), s, cap_level);
}

unsigned mixed_multiplicity(const LocalIdeal& I, std::size_t k, const SampleSeed& s, unsigned cap_level) {
  if (k > I.nvars()) throw InputError("mixed multiplicity index exceeds the number of variables");
  const PrimaryCertificate& cert = I.certificate(cap_level);
  if (k == I.nvars() && I.size() == I.nvars()) return static_cast<unsigned>(cert.colength);
  return generic_colength(I, k, s, cap_level);
}

}  // namespace lokal
