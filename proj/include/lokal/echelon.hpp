#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lokal/polynomial.hpp"

namespace lokal {

/// Row echelon form of a subspace of Q[X]/m^bound. Each row is keyed by its
/// pivot, the order_compare-minimal exponent, and scaled so that the pivot
/// coefficient is 1. Rows may carry cofactor vectors that are transformed
/// alongside them (truncated at the same bound).
class Echelon {
 public:
  struct Row {
    Polynomial poly;
    std::vector<Polynomial> cofactors;
  };

  Echelon(std::size_t nvars, unsigned bound) : n_(nvars), bound_(bound) {}

  unsigned bound() const noexcept { return bound_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Reduces the row against the current pivots; stores it when something is left.
  /// Returns the new pivot, or nullopt if the row was already in the span.
  std::optional<Exponent> insert(Polynomial row, std::vector<Polynomial> cofactors = {});

  /// Membership of g (truncated at the bound) in the span.
  bool contains(const Polynomial& g) const;

  bool has_pivot(const Exponent& e) const { return rows_.count(e) != 0; }
  const Row& row(const Exponent& pivot) const { return rows_.at(pivot); }
  const std::map<Exponent, Row, OrderLess>& rows() const noexcept { return rows_; }

 private:
  std::size_t n_;
  unsigned bound_;
  std::map<Exponent, Row, OrderLess> rows_;
};

}  // namespace lokal
