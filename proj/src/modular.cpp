#include "modular.hpp"

#include <algorithm>
#include <map>

#include "lokal/diagram.hpp"

namespace lokal::detail {

std::uint64_t Zp::inv(std::uint64_t a) const {
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> Zp::reduce(const Rational& q) const {
  static_assert(sizeof(unsigned long) == 8);
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  if (den == 0) return std::nullopt;
  return mul(num, inv(den));
}

DenseIndex::DenseIndex(std::size_t nvars, unsigned bound) : n_(nvars), exps_(exponents_below(nvars, bound)) {
  binom_.assign(bound + nvars + 2, std::vector<std::uint64_t>(nvars + 1, 0));
  for (std::size_t t = 0; t < binom_.size(); ++t) {
    binom_[t][0] = 1;
    for (std::size_t r = 1; r <= nvars && r <= t; ++r)
      binom_[t][r] = binom_[t - 1][r - 1] + (r <= t - 1 ? binom_[t - 1][r] : 0);
  }
}

std::uint32_t DenseIndex::rank(const Exponent& e) const {
  const unsigned d = e.degree();
  // exponents of degree < d come first
  std::uint64_t r = d ? binom_[d - 1 + n_][n_] : 0;
  unsigned s = d;
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    const std::size_t rest = n_ - i - 1;
    const unsigned a = e[i];
    if (a) r += binom_[s + rest][rest] - binom_[s - a + rest][rest];
    s -= a;
  }
  return static_cast<std::uint32_t>(r);
}

namespace {

struct ModTerm {
  std::uint32_t rank;
  std::uint64_t coef;
};
using ModPoly = std::vector<ModTerm>;  // increasing rank, no zero coefficients

// Dense accumulator over a DenseIndex with a list of touched slots.
class Scratch {
 public:
  explicit Scratch(std::size_t size) : val_(size, 0), seen_(size, 0) {}
  void add(std::uint32_t r, std::uint64_t c, const Zp& F) {
    if (!seen_[r]) {
      seen_[r] = 1;
      touched_.push_back(r);
    }
    val_[r] = F.add(val_[r], c);
  }
  ModPoly take() {
    std::sort(touched_.begin(), touched_.end());
    ModPoly out;
    out.reserve(touched_.size());
    for (const auto r : touched_) {
      if (val_[r]) out.push_back({r, val_[r]});
      val_[r] = 0;
      seen_[r] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<std::uint64_t> val_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint32_t> touched_;
};

std::optional<ModPoly> reduce(const Polynomial& f, const DenseIndex& idx, unsigned bound, const Zp& F) {
  ModPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e.degree() >= bound) break;
    const auto r = F.reduce(c);
    if (!r) return std::nullopt;
    if (*r) out.push_back({idx.rank(e), *r});
  }
  return out;
}

void mul_into(Scratch& acc, const ModPoly& a, const ModPoly& b, unsigned bound, const DenseIndex& idx, const Zp& F,
              std::uint64_t scale = 1) {
  if (b.empty()) return;
  const unsigned b0 = idx.exponent(b.front().rank).degree();
  for (const auto& ta : a) {
    const Exponent& ea = idx.exponent(ta.rank);
    const unsigned da = ea.degree();
    if (da + b0 >= bound) break;
    const std::uint64_t s = F.mul(ta.coef, scale);
    for (const auto& tb : b) {
      const Exponent& eb = idx.exponent(tb.rank);
      if (da + eb.degree() >= bound) break;
      acc.add(idx.rank(ea + eb), F.mul(s, tb.coef), F);
    }
  }
}

struct Divisor {
  ModPoly poly;
  Exponent beta;
  std::uint64_t inv_init;
};

// Division of f below work_level, sweeping the dense work array in increasing order.
void divide_raw(const ModPoly& f, const std::vector<Divisor>& divisors, const DiagramPartition& cells,
                unsigned work_level, const DenseIndex& idx, const Zp& F, std::vector<std::uint64_t>& work,
                std::vector<ModPoly>& quotients, ModPoly& remainder) {
  const std::uint32_t end = static_cast<std::uint32_t>(idx.count_below(work_level));
  for (auto& q : quotients) q.clear();
  remainder.clear();
  if (f.empty() || f.front().rank >= end) return;
  for (const auto& t : f) {
    if (t.rank >= end) break;
    work[t.rank] = t.coef;
  }
  for (std::uint32_t r = f.front().rank; r < end; ++r) {
    const std::uint64_t val = work[r];
    if (!val) continue;
    work[r] = 0;
    const Exponent& delta = idx.exponent(r);
    const auto cell = cells.cell_of(delta);
    if (!cell) {
      remainder.push_back({r, val});
      continue;
    }
    const Divisor& d = divisors[*cell];
    const Exponent shift = delta - d.beta;
    const std::uint64_t c = F.mul(val, d.inv_init);
    quotients[*cell].push_back({idx.rank(shift), c});
    const unsigned sdeg = shift.degree();
    for (std::size_t t = 1; t < d.poly.size(); ++t) {
      const Exponent& et = idx.exponent(d.poly[t].rank);
      if (et.degree() + sdeg >= work_level) break;
      auto& slot = work[idx.rank(et + shift)];
      slot = F.sub(slot, F.mul(c, d.poly[t].coef));
    }
  }
}

// Berkowitz over (Z/p)[U]/(U)^bound.
std::vector<ModPoly> char_coefficients(const std::vector<std::vector<ModPoly>>& A, const DenseIndex& idx,
                                       unsigned bound, const Zp& F) {
  const std::size_t e = A.size();
  Scratch acc(idx.size());
  const ModPoly one{{0, 1}};
  std::vector<ModPoly> p{one};
  for (std::size_t k = 1; k <= e; ++k) {
    const std::size_t m = k - 1;
    std::vector<ModPoly> t(k + 1);
    t[0] = one;
    for (const auto& term : A[m][m]) t[1].push_back({term.rank, F.neg(term.coef)});
    std::vector<ModPoly> w(m);
    for (std::size_t r = 0; r < m; ++r) w[r] = A[r][m];
    for (std::size_t j = 2; j <= k; ++j) {
      for (std::size_t c = 0; c < m; ++c)
        if (!A[m][c].empty() && !w[c].empty()) mul_into(acc, A[m][c], w[c], bound, idx, F, F.neg(1));
      t[j] = acc.take();
      if (j == k) break;
      std::vector<ModPoly> nw(m);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c)
          if (!A[r][c].empty() && !w[c].empty()) mul_into(acc, A[r][c], w[c], bound, idx, F);
        nw[r] = acc.take();
      }
      w = std::move(nw);
    }
    std::vector<ModPoly> np(k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = 0; j <= std::min(i, k - 1); ++j)
        if (!t[i - j].empty() && !p[j].empty()) mul_into(acc, t[i - j], p[j], bound, idx, F);
      np[i] = acc.take();
    }
    p = std::move(np);
  }
  return std::vector<ModPoly>(p.begin() + 1, p.end());
}

}  // namespace

std::optional<std::vector<std::optional<unsigned>>> modular_char_orders(const Polynomial& g, const LocalIdeal& I,
                                                                        unsigned u_level, unsigned cap_level,
                                                                        const Zp& F) {
  const std::size_t n = I.nvars();
  const PrimaryCertificate& cert = I.certificate(cap_level);
  const StandardBasis& sb = I.standard_basis(cap_level);
  const std::vector<Exponent> basis = cert.diagram.complement();
  const unsigned c = cert.level, v = cert.max_vertex_degree;
  auto x_level_at = [&](unsigned round) { return c + (u_level - round - 1) * v; };
  const unsigned top = x_level_at(0);
  const DenseIndex X(n, top), U(n, u_level);
  std::vector<std::int32_t> basis_slot(X.size(), -1);
  for (std::size_t i = 0; i < basis.size(); ++i) basis_slot[X.rank(basis[i])] = static_cast<std::int32_t>(i);

  std::vector<Divisor> divisors;
  std::vector<Exponent> betas;
  std::vector<std::vector<ModPoly>> cof(sb.elements.size());
  for (std::size_t b = 0; b < sb.elements.size(); ++b) {
    const Exponent beta = sb.elements[b].initial_exponent();
    auto d = reduce(sb.elements[b], X, top, F);
    if (!d || d->empty() || X.exponent(d->front().rank) != beta) return std::nullopt;
    betas.push_back(beta);
    const std::uint64_t init = d->front().coef;
    divisors.push_back({std::move(*d), beta, F.inv(init)});
    for (std::size_t i = 0; i < n; ++i) {
      auto r = reduce(sb.cofactors[b][i], X, top, F);
      if (!r) return std::nullopt;
      cof[b].push_back(std::move(*r));
    }
  }
  const DiagramPartition cells(betas);
  const auto gm = reduce(g, X, top, F);
  if (!gm) return std::nullopt;

  const std::size_t e = basis.size();
  std::vector<std::vector<ModPoly>> A(e, std::vector<ModPoly>(e));
  std::vector<std::uint64_t> work(X.size(), 0);
  Scratch acc(X.size());
  std::vector<Scratch> out(e, Scratch(U.size()));
  std::vector<ModPoly> quotients(divisors.size());
  ModPoly remainder;
  for (std::size_t col = 0; col < e; ++col) {
    std::map<Exponent, ModPoly, OrderLess> layer;
    mul_into(acc, *gm, ModPoly{{X.rank(basis[col]), 1}}, top, X, F);
    layer.emplace(Exponent(n), acc.take());
    for (unsigned k = 0; k < u_level && !layer.empty(); ++k) {
      const unsigned T = x_level_at(k);
      const bool last = k + 1 == u_level;
      const unsigned Tn = last ? 0 : x_level_at(k + 1);
      // products feeding each gamma + e_i, gathered before accumulation
      std::map<Exponent, std::vector<std::pair<ModPoly, std::size_t>>, OrderLess> feed;
      for (const auto& [gamma, C] : layer) {
        if (C.empty()) continue;
        divide_raw(C, divisors, cells, T, X, F, work, quotients, remainder);
        const std::uint32_t gr = U.rank(gamma);
        for (const auto& t : remainder) out[basis_slot[t.rank]].add(gr, t.coef, F);
        if (last) continue;
        for (std::size_t b = 0; b < quotients.size(); ++b)
          if (!quotients[b].empty())
            for (std::size_t i = 0; i < n; ++i)
              if (!cof[b][i].empty()) feed[gamma + Exponent::unit(n, i)].emplace_back(quotients[b], b * n + i);
      }
      layer.clear();
      for (const auto& [delta, parts] : feed) {
        for (const auto& [q, bi] : parts) mul_into(acc, q, cof[bi / n][bi % n], Tn, X, F);
        layer.emplace(delta, acc.take());
      }
    }
    for (std::size_t row = 0; row < e; ++row) A[row][col] = out[row].take();
  }

  const auto coeffs = char_coefficients(A, U, u_level, F);
  std::vector<std::optional<unsigned>> orders;
  for (const auto& a : coeffs)
    orders.push_back(a.empty() ? std::nullopt : std::optional(U.exponent(a.front().rank).degree()));
  return orders;
}

}  // namespace lokal::detail
