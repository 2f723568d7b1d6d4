#include "lokal/echelon.hpp"

namespace lokal {

std::optional<Exponent> Echelon::insert(Polynomial row, std::vector<Polynomial> cofactors) {
  row = truncate(row, bound_);
  const Exponent zero(n_);
  while (!row.is_zero()) {
    const Exponent lead = row.initial_exponent();
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      const Rational inv = 1 / row.initial_coefficient();
      row *= inv;
      for (auto& c : cofactors) c *= inv;
      rows_.emplace(lead, Row{std::move(row), std::move(cofactors)});
      return lead;
    }
    const Rational c = -row.initial_coefficient();
    row.add_scaled_shifted(c, zero, it->second.poly, bound_);
    for (std::size_t i = 0; i < cofactors.size(); ++i)
      cofactors[i].add_scaled_shifted(c, zero, it->second.cofactors[i], bound_);
  }
  return std::nullopt;
}

bool Echelon::contains(const Polynomial& g) const {
  Polynomial row = truncate(g, bound_);
  const Exponent zero(n_);
  while (!row.is_zero()) {
    auto it = rows_.find(row.initial_exponent());
    if (it == rows_.end()) return false;
    row.add_scaled_shifted(-row.initial_coefficient(), zero, it->second.poly, bound_);
  }
  return true;
}

}  // namespace lokal
