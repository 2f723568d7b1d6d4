#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "lokal/exponent.hpp"
#include "lokal/rational.hpp"

namespace lokal {

/// Series are represented by truncations: terms of total degree >= degree_bound are dropped.
struct TruncationLevel {
  unsigned degree_bound;

  /// Throws InputError unless bound >= 1.
  explicit TruncationLevel(unsigned bound);
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted by
/// order_compare (initial term first) and no stored coefficient is zero.
class Polynomial {
 public:
  using Term = std::pair<Exponent, Rational>;

  explicit Polynomial(std::size_t nvars = 0) : n_(nvars) {}
  /// Accepts terms in any order; repeated exponents are summed and zeros dropped.
  Polynomial(std::size_t nvars, std::vector<Term> terms);

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  Rational coefficient(const Exponent& e) const;

  /// nu(f): the order_compare-minimal exponent of the support. Throws on zero.
  const Exponent& initial_exponent() const;
  /// Init(f) = a_{nu(f)}. Throws on zero.
  const Rational& initial_coefficient() const;

  /// ord_m(f), the lowest total degree present. Throws on zero.
  unsigned order() const { return initial_exponent().degree(); }
  /// Highest total degree present (0 for the zero polynomial).
  unsigned degree() const noexcept { return terms_.empty() ? 0 : terms_.back().first.degree(); }

  /// Lowest-degree homogeneous component.
  Polynomial initial_form() const;
  Polynomial homogeneous_part(unsigned d) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  /// this += c * X^shift * other, dropping terms of degree >= bound (0 = no bound).
  void add_scaled_shifted(const Rational& c, const Exponent& shift, const Polynomial& other,
                          unsigned bound = 0);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  friend class PolynomialBuilder;
  std::size_t n_;
  std::vector<Term> terms_;
};

/// Product with all terms of degree >= bound dropped (bound 0 means exact).
Polynomial multiply(const Polynomial& a, const Polynomial& b, unsigned bound = 0);
Polynomial power(const Polynomial& f, unsigned k, unsigned bound = 0);
Polynomial truncate(const Polynomial& f, TruncationLevel level);
Polynomial truncate(const Polynomial& f, unsigned bound);

/// Accumulates terms in arbitrary order and emits a canonical Polynomial.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(std::size_t nvars) : n_(nvars) {}
  void add(const Exponent& e, const Rational& c);
  void add(const Polynomial& p, const Rational& scale = 1);
  Polynomial build() &&;

 private:
  std::size_t n_;
  std::vector<Polynomial::Term> terms_;
};

/// x_j -> sum_k matrix[j][k] t_k for each source variable j.
class LinearSubstitution {
 public:
  LinearSubstitution(std::size_t source_nvars, std::size_t target_nvars, RationalMatrix matrix);
  static LinearSubstitution identity(std::size_t nvars);

  std::size_t source_nvars() const noexcept { return source_; }
  std::size_t target_nvars() const noexcept { return target_; }
  const RationalMatrix& matrix() const noexcept { return m_; }

  /// The linear form in the target variables that source variable j maps to.
  Polynomial image(std::size_t j) const;
  std::size_t rank() const;
  bool is_invertible() const { return source_ == target_ && rank() == source_; }

 private:
  std::size_t source_, target_;
  RationalMatrix m_;
};

/// Exact composition f(L(t)). Throws DimensionMismatch if f.nvars() != L.source_nvars().
Polynomial substitute_linear(const Polynomial& f, const LinearSubstitution& L);

}  // namespace lokal
