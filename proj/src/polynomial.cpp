#include "lokal/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "lokal/errors.hpp"

namespace lokal {

TruncationLevel::TruncationLevel(unsigned bound) : degree_bound(bound) {
  if (bound < 1) throw InputError("truncation level must be at least 1");
}

// ---------------------------------------------------------------------------
// PolynomialBuilder

void PolynomialBuilder::add(const Exponent& e, const Rational& c) {
  if (e.size() != n_) throw DimensionMismatch("term has wrong number of variables");
  if (c != 0) terms_.emplace_back(e, c);
}

void PolynomialBuilder::add(const Polynomial& p, const Rational& scale) {
  if (p.nvars() != n_) throw DimensionMismatch("polynomial has wrong number of variables");
  if (scale == 0) return;
  for (const auto& [e, c] : p.terms()) terms_.emplace_back(e, c * scale);
}

Polynomial PolynomialBuilder::build() && {
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return OrderLess{}(a.first, b.first); });
  Polynomial out(n_);
  for (auto& t : terms_) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
    } else {
      if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().second == 0) out.terms_.pop_back();
  terms_.clear();
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::size_t nvars, std::vector<Term> terms) : n_(nvars) {
  PolynomialBuilder b(nvars);
  for (auto& [e, c] : terms) b.add(e, c);
  *this = std::move(b).build();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Exponent(nvars), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DimensionMismatch("variable index out of range");
  return monomial(Exponent::unit(nvars, i));
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return OrderLess{}(t.first, x); });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

const Exponent& Polynomial::initial_exponent() const {
  if (terms_.empty()) throw MathError("initial exponent of the zero polynomial");
  return terms_.front().first;
}

const Rational& Polynomial::initial_coefficient() const {
  if (terms_.empty()) throw MathError("initial coefficient of the zero polynomial");
  return terms_.front().second;
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial p(n_);
  for (const auto& t : terms_)
    if (t.first.degree() == d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::initial_form() const {
  return terms_.empty() ? Polynomial(n_) : homogeneous_part(order());
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  add_scaled_shifted(1, Exponent(n_), other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  add_scaled_shifted(-1, Exponent(n_), other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

void Polynomial::add_scaled_shifted(const Rational& c, const Exponent& shift, const Polynomial& other,
                                    unsigned bound) {
  if (other.n_ != n_ || shift.size() != n_)
    throw DimensionMismatch("polynomials in different numbers of variables");
  if (c == 0 || other.terms_.empty()) return;
  const unsigned sdeg = shift.degree();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  const auto b_end = other.terms_.end();
  OrderLess less;
  while (b != b_end) {
    if (bound && b->first.degree() + sdeg >= bound) break;
    Exponent eb = b->first + shift;
    while (a != terms_.end() && less(a->first, eb)) out.push_back(std::move(*a++));
    if (a != terms_.end() && a->first == eb) {
      a->second += c * b->second;
      if (a->second != 0) out.push_back(std::move(*a));
      ++a;
    } else {
      out.emplace_back(eb, c * b->second);
    }
    ++b;
  }
  while (a != terms_.end()) out.push_back(std::move(*a++));
  terms_ = std::move(out);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

Polynomial multiply(const Polynomial& a, const Polynomial& b, unsigned bound) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("polynomials in different numbers of variables");
  const std::size_t n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Polynomial(n);
  if (a.size() == 1 || b.size() == 1) {
    const auto& mono = a.size() == 1 ? a : b;
    const auto& other = a.size() == 1 ? b : a;
    Polynomial out(n);
    out.add_scaled_shifted(mono.terms()[0].second, mono.terms()[0].first, other, bound);
    return out;
  }
  std::unordered_map<Exponent, Rational, ExponentHash> acc;
  acc.reserve(a.size() * 2);
  Rational prod;
  for (const auto& [ea, ca] : a.terms()) {
    const unsigned da = ea.degree();
    if (bound && da >= bound) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (bound && da + eb.degree() >= bound) break;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ea + eb, prod);
      if (!inserted) it->second += prod;
    }
  }
  PolynomialBuilder builder(n);
  for (auto& [e, c] : acc) builder.add(e, c);
  return std::move(builder).build();
}

Polynomial power(const Polynomial& f, unsigned k, unsigned bound) {
  Polynomial result = Polynomial::constant(f.nvars(), 1);
  if (bound) result = truncate(result, bound);
  Polynomial base = bound ? truncate(f, bound) : f;
  while (k) {
    if (k & 1u) result = multiply(result, base, bound);
    k >>= 1;
    if (k) base = multiply(base, base, bound);
  }
  return result;
}

Polynomial truncate(const Polynomial& f, TruncationLevel level) { return truncate(f, level.degree_bound); }

Polynomial truncate(const Polynomial& f, unsigned bound) {
  if (bound == 0) return Polynomial(f.nvars());
  if (f.degree() < bound) return f;
  PolynomialBuilder b(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    if (e.degree() >= bound) break;
    b.add(e, c);
  }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// LinearSubstitution

LinearSubstitution::LinearSubstitution(std::size_t source_nvars, std::size_t target_nvars,
                                       RationalMatrix matrix)
    : source_(source_nvars), target_(target_nvars), m_(std::move(matrix)) {
  if (m_.size() != source_)
    throw DimensionMismatch("substitution matrix needs one row per source variable");
  for (const auto& row : m_)
    if (row.size() != target_)
      throw DimensionMismatch("substitution matrix needs one column per target variable");
  if (source_ > kMaxVars || target_ > kMaxVars) throw InputError("too many variables in substitution");
}

LinearSubstitution LinearSubstitution::identity(std::size_t nvars) {
  RationalMatrix m(nvars, std::vector<Rational>(nvars, 0));
  for (std::size_t i = 0; i < nvars; ++i) m[i][i] = 1;
  return LinearSubstitution(nvars, nvars, std::move(m));
}

Polynomial LinearSubstitution::image(std::size_t j) const {
  PolynomialBuilder b(target_);
  for (std::size_t k = 0; k < target_; ++k) b.add(Exponent::unit(target_, k), m_.at(j)[k]);
  return std::move(b).build();
}

std::size_t LinearSubstitution::rank() const { return lokal::rank(m_); }

Polynomial substitute_linear(const Polynomial& f, const LinearSubstitution& L) {
  if (f.nvars() != L.source_nvars())
    throw DimensionMismatch("substitution expects " + std::to_string(L.source_nvars()) +
                            " variables, polynomial has " + std::to_string(f.nvars()));
  const std::size_t n = L.source_nvars();
  // powers[j][k] = image(j)^k, grown on demand
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t j = 0; j < n; ++j) powers[j].push_back(Polynomial::constant(L.target_nvars(), 1));
  auto pw = [&](std::size_t j, unsigned k) -> const Polynomial& {
    while (powers[j].size() <= k) powers[j].push_back(powers[j].back() * L.image(j));
    return powers[j][k];
  };
  PolynomialBuilder out(L.target_nvars());
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(L.target_nvars(), c);
    for (std::size_t j = 0; j < n; ++j)
      if (e[j]) term = term * pw(j, e[j]);
    out.add(term);
  }
  return std::move(out).build();
}

}  // namespace lokal
