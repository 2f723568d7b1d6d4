#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lokal/exponent.hpp"

namespace lokal {

/// A translation-stable subset of N^n, stored by its Dickson vertices
/// (non-redundant, sorted by order_compare).
class Diagram {
 public:
  /// Minimalizes raw generators. Throws InputError on empty input and
  /// DimensionMismatch on mixed lengths.
  static Diagram from_vertices(const std::vector<Exponent>& raw);

  std::size_t nvars() const noexcept { return n_; }
  const std::vector<Exponent>& vertices() const noexcept { return vertices_; }

  bool contains(const Exponent& e) const;

  /// True iff every axis carries a pure-power vertex, i.e. the complement is finite.
  bool has_finite_complement() const;

  /// N^n minus the diagram, in increasing order. Throws InfiniteComplement.
  std::vector<Exponent> complement() const;

  std::string to_string() const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  Diagram(std::size_t n, std::vector<Exponent> v) : n_(n), vertices_(std::move(v)) {}
  std::size_t n_;
  std::vector<Exponent> vertices_;
};

/// The total order on diagrams: lexicographic comparison of the vertex
/// sequences, each padded with a symbol larger than every exponent.
std::strong_ordering compare(const Diagram& a, const Diagram& b);

/// The cells Delta_i = (beta^i + N^n) minus the earlier cones, plus the complement.
class DiagramPartition {
 public:
  /// Throws InputError on an empty list.
  explicit DiagramPartition(std::vector<Exponent> betas);

  const std::vector<Exponent>& betas() const noexcept { return betas_; }

  /// Index i of the cell containing e, or nullopt when e lies in the complement.
  std::optional<std::size_t> cell_of(const Exponent& e) const;
  bool in_complement(const Exponent& e) const { return !cell_of(e).has_value(); }

  /// Finite complement in increasing order. Throws InfiniteComplement.
  std::vector<Exponent> complement() const;

 private:
  std::vector<Exponent> betas_;
};

/// ASCII staircase of a two-variable diagram: rows from high y down to y = 0,
/// '#' for diagram cells and '.' for complement cells.
std::string render_staircase(const Diagram& d, unsigned width = 0, unsigned height = 0);

}  // namespace lokal
