#include "lokal/samuel.hpp"

#include <algorithm>
#include <map>

#include "lokal/division.hpp"
#include "lokal/errors.hpp"
#include "modular.hpp"

namespace lokal {

ModuleStructure::ModuleStructure(const LocalIdeal& I, unsigned u_level, unsigned cap_level)
    : ideal_(I), sb_(nullptr), u_level_(u_level) {
  if (I.size() != I.nvars())
    throw InputError("the module structure needs exactly as many generators as variables");
  if (u_level < 1) throw InputError("U-level must be at least 1");
  const PrimaryCertificate& cert = I.certificate(cap_level);
  sb_ = &I.standard_basis(cap_level);
  basis_ = cert.diagram.complement();
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  c_ = cert.level;
  v_ = cert.max_vertex_degree;
}

// Round k divides the X-coefficient C_gamma of U^gamma (|gamma| = k) by the
// standard basis, banks the remainder and hands sum_beta D_beta c_beta,i on to
// gamma + e_i. Since m^s lies in I^j once s >= (j-1) v + c, anything of X-degree
// at least c + (D-k-1) v at round k only affects U-degrees >= D.
std::vector<Polynomial> ModuleStructure::expand(const Polynomial& h) const {
  const std::size_t n = ideal_.nvars();
  if (h.nvars() != n) throw DimensionMismatch("element and module in different numbers of variables");
  std::vector<PolynomialBuilder> out(basis_.size(), PolynomialBuilder(n));
  std::map<Exponent, Polynomial, OrderLess> layer;
  layer.emplace(Exponent(n), truncate(h, x_level_at(0)));
  for (unsigned k = 0; k < u_level_ && !layer.empty(); ++k) {
    const unsigned T = x_level_at(k);
    std::map<Exponent, Polynomial, OrderLess> next;
    for (auto& [gamma, C] : layer) {
      if (C.is_zero()) continue;
      const DivisionResult r = divide_raw(C, sb_->elements, T);
      for (const auto& [alpha, coef] : r.remainder.terms()) out[index_.at(alpha)].add(gamma, coef);
      if (k + 1 == u_level_) continue;
      const unsigned Tn = x_level_at(k + 1);
      for (std::size_t i = 0; i < n; ++i) {
        PolynomialBuilder acc(n);
        for (std::size_t b = 0; b < r.quotients.size(); ++b) {
          if (r.quotients[b].is_zero() || sb_->cofactors[b][i].is_zero()) continue;
          acc.add(multiply(r.quotients[b], sb_->cofactors[b][i], Tn));
        }
        Polynomial Ci = std::move(acc).build();
        if (Ci.is_zero()) continue;
        auto [it, inserted] = next.try_emplace(gamma + Exponent::unit(n, i), n);
        it->second += Ci;
      }
    }
    layer = std::move(next);
  }
  std::vector<Polynomial> result;
  for (auto& b : out) result.push_back(std::move(b).build());
  return result;
}

std::vector<Polynomial> characteristic_coefficients(const std::vector<std::vector<Polynomial>>& A,
                                                    std::size_t u_vars, unsigned bound) {
  const std::size_t e = A.size();
  for (const auto& row : A)
    if (row.size() != e) throw InputError("characteristic polynomial of a non-square matrix");
  const Polynomial zero(u_vars);
  std::vector<Polynomial> p{Polynomial::constant(u_vars, 1)};
  for (std::size_t k = 1; k <= e; ++k) {
    const std::size_t m = k - 1;  // the leading m x m block, with column C and row R beside it
    std::vector<Polynomial> t(k + 1, zero);
    t[0] = Polynomial::constant(u_vars, 1);
    t[1] = -truncate(A[m][m], bound);
    std::vector<Polynomial> w(m, zero);
    for (std::size_t r = 0; r < m; ++r) w[r] = truncate(A[r][m], bound);
    for (std::size_t j = 2; j <= k; ++j) {
      PolynomialBuilder dot(u_vars);
      for (std::size_t c = 0; c < m; ++c)
        if (!A[m][c].is_zero() && !w[c].is_zero()) dot.add(multiply(A[m][c], w[c], bound), -1);
      t[j] = std::move(dot).build();
      if (j == k) break;
      std::vector<Polynomial> nw(m, zero);
      for (std::size_t r = 0; r < m; ++r) {
        PolynomialBuilder acc(u_vars);
        for (std::size_t c = 0; c < m; ++c)
          if (!A[r][c].is_zero() && !w[c].is_zero()) acc.add(multiply(A[r][c], w[c], bound));
        nw[r] = std::move(acc).build();
      }
      w = std::move(nw);
    }
    std::vector<Polynomial> np(k + 1, zero);
    for (std::size_t i = 0; i <= k; ++i) {
      PolynomialBuilder acc(u_vars);
      for (std::size_t j = 0; j <= std::min(i, k - 1); ++j)
        if (!t[i - j].is_zero() && !p[j].is_zero()) acc.add(multiply(t[i - j], p[j], bound));
      np[i] = std::move(acc).build();
    }
    p = std::move(np);
  }
  return std::vector<Polynomial>(p.begin() + 1, p.end());
}

std::vector<std::vector<Polynomial>> multiplication_matrix(const Polynomial& g, const ModuleStructure& M) {
  const std::size_t e = M.rank();
  std::vector<std::vector<Polynomial>> A(e, std::vector<Polynomial>(e, Polynomial(g.nvars())));
  for (std::size_t col = 0; col < e; ++col) {
    const auto image = M.expand(multiply(g, Polynomial::monomial(M.basis()[col]), M.x_level()));
    for (std::size_t row = 0; row < e; ++row) A[row][col] = image[row];
  }
  return A;
}

CharPolyData char_poly(const Polynomial& g, const ModuleStructure& M) {
  if (g.nvars() != M.ideal().nvars()) throw DimensionMismatch("element and ideal in different numbers of variables");
  CharPolyData out;
  out.degree = M.rank();
  out.u_level = M.u_level();
  out.coeffs = characteristic_coefficients(multiplication_matrix(g, M), g.nvars(), M.u_level());
  for (const auto& a : out.coeffs) out.orders.push_back(a.is_zero() ? std::nullopt : std::optional(a.order()));
  return out;
}

LocalIdeal parameter_ideal(const LocalIdeal& I, const SamuelOptions& opts, unsigned round, unsigned draw) {
  if (I.size() == I.nvars()) return I;
  const SampleSeed sr(opts.seed.seed, escalated_bound(opts.seed.coefficient_bound, round));
  Sampler sampler(sr, 2 * round + draw);
  return random_parameter_ideal(I, I.nvars(), sampler);
}

namespace {

unsigned ceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

// Orders of a_1..a_e mod (U)^D. Over a prime a nonzero coefficient is nonzero over Q,
// so each modular order bounds the rational one from above; the two primes are
// combined by taking the smaller.
std::vector<std::optional<unsigned>> char_orders(const Polynomial& g, const LocalIdeal& I, unsigned D,
                                                 const SamuelOptions& opts) {
  if (opts.exact) return char_poly(g, ModuleStructure(I, D, opts.cap_level)).orders;
  std::optional<std::vector<std::optional<unsigned>>> best;
  for (const std::uint64_t p : detail::kPrimes) {
    const auto r = detail::modular_char_orders(g, I, D, opts.cap_level, detail::Zp(p));
    if (!r) continue;
    if (!best) {
      best = r;
      continue;
    }
    for (std::size_t k = 0; k < r->size(); ++k)
      if ((*r)[k] && (!(*best)[k] || *(*r)[k] < *(*best)[k])) (*best)[k] = (*r)[k];
  }
  if (!best) return char_poly(g, ModuleStructure(I, D, opts.cap_level)).orders;
  return *best;
}

SamuelValue samuel_on_parameters(const Polynomial& g, const LocalIdeal& I, const SamuelOptions& opts) {
  const PrimaryCertificate& cert = I.certificate(opts.cap_level);
  const auto e = static_cast<unsigned>(cert.colength);
  SamuelValue out;
  out.multiplicity = e;
  // v(g) >= ord(g) / c because m^c lies in I, so smaller levels cannot certify.
  unsigned D = opts.start_u_level ? opts.start_u_level : std::max(1u, ceil_div(e * g.order(), cert.level));
  for (;;) {
    if (D > opts.max_u_level)
      throw NonTermination("U-level " + std::to_string(D) + " exceeds the cap " + std::to_string(opts.max_u_level));
    const auto orders = char_orders(g, I, D, opts);
    std::optional<Rational> best;
    for (unsigned k = 1; k <= e; ++k) {
      const auto& d = orders[k - 1];
      if (!d) continue;
      const Rational r(*d, k);
      if (!best || r < *best) {
        best = r;
        out.k = k;
        out.d_k = *d;
      }
    }
    // hidden coefficients have d_k >= D, so d_k / k >= D / e
    if (best && *best * e <= D) {
      out.value = *best;
      out.value.canonicalize();
      out.u_level_used = D;
      return out;
    }
    if (best) {
      const Rational need = *best * e;
      const Integer up = (need.get_num() + need.get_den() - 1) / need.get_den();
      D = std::max(D + 1, static_cast<unsigned>(up.get_ui()));
    } else {
      D *= 2;
    }
  }
}

}  // namespace

SamuelValue samuel_value(const Polynomial& g, const LocalIdeal& I, const SamuelOptions& opts) {
  if (g.nvars() != I.nvars()) throw DimensionMismatch("element and ideal in different numbers of variables");
  I.certificate(opts.cap_level);
  if (g.is_zero()) {
    SamuelValue inf;
    inf.infinite = true;
    return inf;
  }
  if (I.size() == I.nvars()) return samuel_on_parameters(g, I, opts);
  if (I.size() < I.nvars()) throw NotPrimary("too few generators", "");
  for (unsigned round = 0; round <= kMaxEscalations; ++round) {
    std::optional<SamuelValue> v[2];
    for (unsigned draw = 0; draw < 2; ++draw) {
      try {
        v[draw] = samuel_on_parameters(g, parameter_ideal(I, opts, round, draw), opts);
      } catch (const NotPrimary&) {
      }
    }
    if (v[0] && v[1] && v[0]->value == v[1]->value && v[0]->multiplicity == v[1]->multiplicity) return *v[0];
  }
  throw GenericityFailure("random reductions give different Samuel values after " +
                          std::to_string(kMaxEscalations) + " escalations");
}

Rational samuel_of_ideal(const std::vector<Polynomial>& J, const LocalIdeal& I, const SamuelOptions& opts) {
  std::optional<Rational> best;
  for (const auto& g : J) {
    const SamuelValue v = samuel_value(g, I, opts);
    if (v.infinite) continue;
    if (!best || v.value < *best) best = v.value;
  }
  if (!best) throw InputError("every generator of J is zero");
  return *best;
}

Rational lojasiewicz(const LocalIdeal& I, const SamuelOptions& opts) {
  const Rational v = samuel_of_ideal(LocalIdeal::maximal(I.nvars()).generators(), I, opts);
  Rational inv = 1 / v;
  inv.canonicalize();
  return inv;
}

IntegralDependence integral_dependence_relation(const Polynomial& g, const LocalIdeal& I, unsigned u_level,
                                                const SamuelOptions& opts) {
  if (g.nvars() != I.nvars()) throw DimensionMismatch("element and ideal in different numbers of variables");
  I.certificate(opts.cap_level);
  std::optional<LocalIdeal> J;
  if (I.size() == I.nvars()) {
    J = I;
  } else {
    for (unsigned round = 0; round <= kMaxEscalations && !J; ++round) {
      try {
        LocalIdeal a = parameter_ideal(I, opts, round, 0);
        LocalIdeal b = parameter_ideal(I, opts, round, 1);
        if (a.certificate(opts.cap_level).colength == b.certificate(opts.cap_level).colength) J = a;
      } catch (const NotPrimary&) {
      }
    }
    if (!J) throw GenericityFailure("no agreeing reduction found");
  }
  if (u_level == 0) u_level = std::max(1u, samuel_value(g, *J, opts).u_level_used);
  return IntegralDependence{J->generators(), char_poly(g, ModuleStructure(*J, u_level, opts.cap_level))};
}

}  // namespace lokal
