#include "lokal/diagram.hpp"

#include <algorithm>

#include "lokal/errors.hpp"

namespace lokal {

namespace {

bool in_cone_union(const std::vector<Exponent>& gens, const Exponent& e) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exponent& g) { return g.divides(e); });
}

// Exponents with e_j < bounds[j] that fail pred, sorted by order_compare.
template <class Pred>
std::vector<Exponent> enumerate_box(const std::vector<unsigned>& bounds, Pred excluded) {
  const std::size_t n = bounds.size();
  std::vector<Exponent> out;
  Exponent cur(n);
  for (;;) {
    if (!excluded(cur)) out.push_back(cur);
    std::size_t j = 0;
    while (j < n) {
      if (cur[j] + 1 < bounds[j]) {
        cur.set(j, cur[j] + 1);
        break;
      }
      cur.set(j, 0);
      ++j;
    }
    if (j == n) break;
  }
  std::sort(out.begin(), out.end(), OrderLess{});
  return out;
}

// Per-axis pure-power bounds, or nullopt if some axis has none.
std::optional<std::vector<unsigned>> axis_bounds(std::size_t n, const std::vector<Exponent>& gens) {
  std::vector<unsigned> bounds(n, 0);
  for (const auto& g : gens) {
    std::size_t nonzero = 0, axis = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (g[j]) ++nonzero, axis = j;
    if (nonzero == 0) return std::vector<unsigned>(n, 0);  // the full diagram
    if (nonzero == 1 && (bounds[axis] == 0 || g[axis] < bounds[axis])) bounds[axis] = g[axis];
  }
  for (unsigned b : bounds)
    if (b == 0) return std::nullopt;
  return bounds;
}

}  // namespace

Diagram Diagram::from_vertices(const std::vector<Exponent>& raw) {
  if (raw.empty()) throw InputError("a diagram needs at least one vertex");
  const std::size_t n = raw.front().size();
  for (const auto& e : raw)
    if (e.size() != n) throw DimensionMismatch("diagram vertices of different lengths");
  std::vector<Exponent> sorted = raw;
  std::sort(sorted.begin(), sorted.end(), OrderLess{});
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  // A divisor of e is never larger than e in order_compare, so a single
  // increasing pass against already-kept vertices suffices.
  std::vector<Exponent> kept;
  for (const auto& e : sorted)
    if (!in_cone_union(kept, e)) kept.push_back(e);
  return Diagram(n, std::move(kept));
}

bool Diagram::contains(const Exponent& e) const {
  if (e.size() != n_) throw DimensionMismatch("exponent length differs from diagram");
  return in_cone_union(vertices_, e);
}

bool Diagram::has_finite_complement() const { return axis_bounds(n_, vertices_).has_value(); }

std::vector<Exponent> Diagram::complement() const {
  auto bounds = axis_bounds(n_, vertices_);
  if (!bounds) throw InfiniteComplement("diagram " + to_string() + " has an infinite complement");
  if (std::all_of(bounds->begin(), bounds->end(), [](unsigned b) { return b == 0; })) return {};
  return enumerate_box(*bounds, [&](const Exponent& e) { return in_cone_union(vertices_, e); });
}

std::string Diagram::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += vertices_[i].to_string();
  }
  return s + "}";
}

std::strong_ordering compare(const Diagram& a, const Diagram& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("comparing diagrams in different dimensions");
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  const std::size_t common = std::min(va.size(), vb.size());
  for (std::size_t i = 0; i < common; ++i)
    if (auto c = order_compare(va[i], vb[i]); c != 0) return c;
  // The shorter sequence continues with infinity, which exceeds any vertex.
  return vb.size() <=> va.size();
}

DiagramPartition::DiagramPartition(std::vector<Exponent> betas) : betas_(std::move(betas)) {
  if (betas_.empty()) throw InputError("a partition needs at least one exponent");
  for (const auto& b : betas_)
    if (b.size() != betas_.front().size()) throw DimensionMismatch("partition exponents of different lengths");
}

std::optional<std::size_t> DiagramPartition::cell_of(const Exponent& e) const {
  if (e.size() != betas_.front().size()) throw DimensionMismatch("exponent length differs from partition");
  for (std::size_t i = 0; i < betas_.size(); ++i)
    if (betas_[i].divides(e)) return i;
  return std::nullopt;
}

std::vector<Exponent> DiagramPartition::complement() const {
  return Diagram::from_vertices(betas_).complement();
}

std::string render_staircase(const Diagram& d, unsigned width, unsigned height) {
  if (d.nvars() != 2) throw DimensionMismatch("staircase rendering needs two variables");
  unsigned mx = 1, my = 1;
  for (const auto& v : d.vertices()) {
    mx = std::max(mx, v[0] + 1);
    my = std::max(my, v[1] + 1);
  }
  if (width == 0) width = mx + 1;
  if (height == 0) height = my + 1;
  std::string out;
  for (unsigned row = height; row-- > 0;) {
    for (unsigned col = 0; col < width; ++col) out += d.contains(Exponent{col, row}) ? '#' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace lokal
