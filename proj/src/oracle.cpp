#include "lokal/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "lokal/errors.hpp"

namespace lokal {

FeketeEstimate fekete_lower(const Polynomial& g, const LocalIdeal& I, unsigned k_max) {
  if (g.is_zero()) throw InputError("the Fekete bound needs a nonzero element");
  if (k_max == 0) throw InputError("k_max must be positive");
  std::vector<Polynomial> powers;
  Polynomial p = g;
  for (unsigned k = 1; k <= k_max; ++k) {
    powers.push_back(p);
    if (k < k_max) p = p * g;
  }
  const auto ords = ord_ideal_many(powers, I, 1u << 20);
  FeketeEstimate out;
  out.k_max = k_max;
  out.best = 0;
  for (unsigned k = 1; k <= k_max; ++k) {
    out.orders.push_back(ords[k - 1].value);
    Rational r(ords[k - 1].value, k);
    r.canonicalize();
    if (out.k_best == 0 || r > out.best) {
      out.best = r;
      out.k_best = k;
    }
  }
  for (unsigned k = 1; 2 * k <= k_max; ++k)
    if (out.orders[2 * k - 1] < 2 * out.orders[k - 1]) throw std::logic_error("ord_I(g^k) is not superadditive");
  return out;
}

namespace {

using IntVec = std::vector<Integer>;

Integer dot(const IntVec& w, const Exponent& e) {
  Integer s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * e[i];
  return s;
}

// One-dimensional null space of the rows (d-1 of them in dimension d), as a primitive integer vector.
std::optional<IntVec> normal_of(const std::vector<std::vector<Rational>>& rows, std::size_t d) {
  RationalMatrix m = rows;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][c] == 0) continue;
      const Rational f = m[k][c] / m[r][c];
      for (std::size_t j = 0; j < d; ++j) m[k][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r != d - 1) return std::nullopt;
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Rational> w(d, 0);
  w[free_col] = 1;
  for (std::size_t k = 0; k < r; ++k) w[pivot_col[k]] = -m[k][free_col] / m[k][pivot_col[k]];
  Integer den = 1;
  for (const auto& x : w) den = lcm(den, Integer(x.get_den()));
  IntVec out;
  Integer g = 0;
  for (const auto& x : w) {
    out.push_back(Integer(x * den));
    g = gcd(g, out.back());
  }
  for (auto& x : out) x /= g;
  return out;
}

Integer det3(const Exponent& a, const Exponent& b, const Exponent& c) {
  auto v = [](const Exponent& e, std::size_t i) { return Integer(e[i]); };
  return v(a, 0) * (v(b, 1) * v(c, 2) - v(b, 2) * v(c, 1)) - v(a, 1) * (v(b, 0) * v(c, 2) - v(b, 2) * v(c, 0)) +
         v(a, 2) * (v(b, 0) * v(c, 1) - v(b, 1) * v(c, 0));
}

// Convex hull (counter-clockwise) of points on a plane, projected by dropping coordinate skip.
std::vector<Exponent> planar_hull(std::vector<Exponent> pts, std::size_t skip) {
  std::size_t u = skip == 0 ? 1 : 0, v = skip == 2 ? 1 : 2;
  std::sort(pts.begin(), pts.end(), [&](const Exponent& a, const Exponent& b) {
    return a[u] != b[u] ? a[u] < b[u] : a[v] < b[v];
  });
  auto cross = [&](const Exponent& o, const Exponent& a, const Exponent& b) -> Integer {
    return (Integer(a[u]) - o[u]) * (Integer(b[v]) - o[v]) - (Integer(a[v]) - o[v]) * (Integer(b[u]) - o[u]);
  };
  if (pts.size() < 3) return pts;
  std::vector<Exponent> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

NewtonPolyhedron NewtonPolyhedron::of_ideal(const LocalIdeal& I) {
  const std::size_t d = I.nvars();
  if (d > 3) throw InputError("Newton polyhedra are only computed in up to 3 variables");
  if (!I.is_monomial()) throw InputError("the Newton oracle needs a monomial ideal");
  std::vector<Exponent> raw;
  for (const auto& g : I.generators()) raw.push_back(g.initial_exponent());
  const Diagram D = Diagram::from_vertices(raw);
  if (!D.has_finite_complement()) throw InputError("the Newton oracle needs a primary ideal");
  const std::vector<Exponent>& pts = D.vertices();

  NewtonPolyhedron P;
  P.n_ = d;
  // Every compact facet is spanned by d affinely independent generator exponents.
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t from) {
    if (depth == d) {
      std::vector<std::vector<Rational>> rows;
      for (std::size_t k = 1; k < d; ++k) {
        std::vector<Rational> row;
        for (std::size_t j = 0; j < d; ++j) row.emplace_back(Integer(pts[pick[k]][j]) - pts[pick[0]][j]);
        rows.push_back(std::move(row));
      }
      auto w = normal_of(rows, d);
      if (!w) return;
      if (std::all_of(w->begin(), w->end(), [](const Integer& x) { return x <= 0; }))
        for (auto& x : *w) x = -x;
      if (std::any_of(w->begin(), w->end(), [](const Integer& x) { return x < 0; })) return;
      const Integer c = dot(*w, pts[pick[0]]);
      if (c <= 0) return;
      Facet f{*w, c, {}};
      for (const auto& p : pts) {
        const Integer v = dot(*w, p);
        if (v < c) return;
        if (v == c) f.points.push_back(p);
      }
      for (const auto& g : P.facets_)
        if (g.normal == f.normal) return;
      P.facets_.push_back(std::move(f));
      return;
    }
    for (std::size_t i = from; i < pts.size(); ++i) {
      pick[depth] = i;
      choose(depth + 1, i + 1);
    }
  };
  choose(0, 0);
  return P;
}

Rational NewtonPolyhedron::value(const Exponent& e) const {
  if (e.size() != n_) throw DimensionMismatch("exponent and polyhedron in different dimensions");
  std::optional<Rational> best;
  for (const auto& f : facets_) {
    Rational r(dot(f.normal, e), f.offset);
    r.canonicalize();
    if (!best || r < *best) best = r;
  }
  return *best;
}

Integer NewtonPolyhedron::multiplicity() const {
  Integer total = 0;
  for (const auto& f : facets_) {
    if (n_ == 1) {
      total += f.offset / f.normal[0];
    } else if (n_ == 2) {
      auto pts = f.points;
      std::sort(pts.begin(), pts.end(), [](const Exponent& a, const Exponent& b) { return a[0] < b[0]; });
      const Exponent &p = pts.front(), &q = pts.back();
      total += abs(Integer(p[0]) * q[1] - Integer(p[1]) * q[0]);
    } else {
      std::size_t skip = 0;
      for (std::size_t j = 1; j < 3; ++j)
        if (abs(f.normal[j]) > abs(f.normal[skip])) skip = j;
      const auto h = planar_hull(f.points, skip);
      for (std::size_t i = 1; i + 1 < h.size(); ++i) total += abs(det3(h[0], h[i], h[i + 1]));
    }
  }
  return total;
}

Rational newton_value(const LocalIdeal& I, const Polynomial& g) {
  if (!g.is_monomial()) throw InputError("the Newton oracle needs a monomial element");
  return NewtonPolyhedron::of_ideal(I).value(g.initial_exponent());
}

Polynomial cayley_hamilton_residual(const Polynomial& g, const LocalIdeal& I, TruncationLevel level,
                                    const SamuelOptions& opts) {
  const unsigned N = level.degree_bound;
  // Parameters have order >= ord_m(I), so U-degrees >= ceil(N / ord_m(I)) vanish modulo m^N.
  const unsigned o = I.order();
  const unsigned D = (N + o - 1) / o;
  const IntegralDependence rel = integral_dependence_relation(g, I, D, opts);
  const auto& f = rel.parameters;
  const std::size_t n = I.nvars();
  const std::size_t e = rel.relation.degree;

  std::vector<std::vector<Polynomial>> fpow(n);
  auto fp = [&](std::size_t i, unsigned k) -> const Polynomial& {
    if (fpow[i].empty()) fpow[i].push_back(Polynomial::constant(n, 1));
    while (fpow[i].size() <= k) fpow[i].push_back(multiply(fpow[i].back(), f[i], N));
    return fpow[i][k];
  };
  std::vector<Polynomial> gpow{Polynomial::constant(n, 1)};
  while (gpow.size() <= e) gpow.push_back(multiply(gpow.back(), g, N));

  const unsigned og = g.is_zero() ? N : g.order();
  PolynomialBuilder out(n);
  out.add(gpow[e]);
  for (std::size_t k = 1; k <= e; ++k) {
    const unsigned gdeg = static_cast<unsigned>(std::min<std::size_t>(N, og * (e - k)));
    if (gdeg >= N) continue;
    PolynomialBuilder ak(n);
    for (const auto& [gamma, c] : rel.relation.coeffs[k - 1].terms()) {
      unsigned low = 0;
      for (std::size_t i = 0; i < n; ++i) low += gamma[i] * f[i].order();
      if (low + gdeg >= N) continue;
      Polynomial term = Polynomial::constant(n, c);
      for (std::size_t i = 0; i < n; ++i)
        if (gamma[i]) term = multiply(term, fp(i, gamma[i]), N - gdeg);
      ak.add(term);
    }
    out.add(multiply(std::move(ak).build(), gpow[e - k], N));
  }
  return std::move(out).build();
}

}  // namespace lokal
