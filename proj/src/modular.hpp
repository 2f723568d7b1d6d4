#pragma once

// Valuation search over Z/p. Internal to the library.

#include <cstdint>
#include <optional>
#include <vector>

#include "lokal/local.hpp"

namespace lokal::detail {

class Zp {
 public:
  explicit Zp(std::uint64_t p) : p_(p) {}
  std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a ? p_ - a : 0; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t inv(std::uint64_t a) const;
  /// nullopt when p divides the denominator.
  std::optional<std::uint64_t> reduce(const Rational& q) const;

 private:
  std::uint64_t p_;
};

/// Exponents of degree < bound numbered in order_compare order.
class DenseIndex {
 public:
  DenseIndex(std::size_t nvars, unsigned bound);
  std::size_t size() const noexcept { return exps_.size(); }
  /// Number of exponents of degree < d (d <= bound).
  std::size_t count_below(unsigned d) const noexcept { return d ? binom_[d - 1 + n_][n_] : 0; }
  std::uint32_t rank(const Exponent& e) const;
  const Exponent& exponent(std::uint32_t r) const noexcept { return exps_[r]; }

 private:
  std::size_t n_;
  std::vector<Exponent> exps_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

/// Two primes just below 2^62 and 2^61.
inline constexpr std::uint64_t kPrimes[] = {4611686018427387847ull, 2305843009213693951ull};

/// ord_U(a_k) for k = 1..e of the characteristic polynomial of g on the module of
/// I (exactly n generators), computed mod (U)^u_level over Z/p. nullopt when some
/// coefficient of the standard basis or of g does not reduce mod p.
std::optional<std::vector<std::optional<unsigned>>> modular_char_orders(const Polynomial& g, const LocalIdeal& I,
                                                                        unsigned u_level, unsigned cap_level,
                                                                        const Zp& field);

}  // namespace lokal::detail
