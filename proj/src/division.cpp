#include "lokal/division.hpp"

#include <algorithm>
#include <map>

#include "lokal/errors.hpp"

namespace lokal {

namespace {

std::vector<Exponent> initial_exponents(const std::vector<Polynomial>& divisors, std::size_t n) {
  if (divisors.empty()) throw InputError("division needs at least one divisor");
  std::vector<Exponent> betas;
  for (const auto& d : divisors) {
    if (d.nvars() != n) throw DimensionMismatch("divisor has a different number of variables");
    if (d.is_zero()) throw InputError("zero divisor in division");
    betas.push_back(d.initial_exponent());
  }
  return betas;
}

}  // namespace

DivisionResult divide_raw(const Polynomial& F, const std::vector<Polynomial>& divisors, unsigned work_level) {
  const std::size_t n = F.nvars();
  const DiagramPartition cells(initial_exponents(divisors, n));
  std::vector<PolynomialBuilder> quotients(divisors.size(), PolynomialBuilder(n));
  PolynomialBuilder remainder(n);

  std::map<Exponent, Rational, OrderLess> work;
  for (const auto& [e, c] : F.terms()) {
    if (e.degree() >= work_level) break;
    work.emplace(e, c);
  }
  Rational q, prod;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Exponent& delta = node.key();
    const auto cell = cells.cell_of(delta);
    if (!cell) {
      remainder.add(delta, node.mapped());
      continue;
    }
    const Polynomial& Fi = divisors[*cell];
    const Exponent shift = delta - cells.betas()[*cell];
    q = node.mapped() / Fi.initial_coefficient();
    quotients[*cell].add(shift, q);
    const unsigned sdeg = shift.degree();
    const auto& terms = Fi.terms();
    for (std::size_t t = 1; t < terms.size(); ++t) {
      if (terms[t].first.degree() + sdeg >= work_level) break;
      prod = q * terms[t].second;
      auto [it, inserted] = work.try_emplace(terms[t].first + shift);
      it->second -= prod;
      if (it->second == 0) work.erase(it);
    }
  }
  DivisionResult r{{}, std::move(remainder).build(), TruncationLevel(std::max(work_level, 1u))};
  for (auto& b : quotients) r.quotients.push_back(std::move(b).build());
  return r;
}

DivisionResult divide(const Polynomial& F, const std::vector<Polynomial>& divisors, TruncationLevel level) {
  const auto betas = initial_exponents(divisors, F.nvars());
  unsigned reach = 0;
  for (const auto& b : betas) reach = std::max(reach, b.degree());
  DivisionResult r = divide_raw(F, divisors, level.degree_bound + reach);
  for (auto& q : r.quotients) q = truncate(q, level);
  r.remainder = truncate(r.remainder, level);
  r.level = level;
  return r;
}

std::string check_support_contracts(const DivisionResult& r, const std::vector<Polynomial>& divisors) {
  const DiagramPartition cells(initial_exponents(divisors, r.remainder.nvars()));
  for (const auto& [e, c] : r.remainder.terms())
    if (!cells.in_complement(e)) return "remainder term " + e.to_string() + " lies in the diagram";
  for (std::size_t i = 0; i < r.quotients.size(); ++i) {
    for (const auto& [e, c] : r.quotients[i].terms()) {
      const auto cell = cells.cell_of(e + cells.betas()[i]);
      if (!cell || *cell != i)
        return "quotient " + std::to_string(i + 1) + " term " + e.to_string() + " leaves its cell";
    }
  }
  return {};
}

}  // namespace lokal
