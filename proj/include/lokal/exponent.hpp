#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lokal {

/// Largest number of variables an Exponent can carry.
inline constexpr std::size_t kMaxVars = 8;

/// A multi-index in N^n with n <= kMaxVars, stored inline.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t nvars);
  Exponent(std::initializer_list<unsigned> coords);
  explicit Exponent(std::span<const unsigned> coords);

  static Exponent unit(std::size_t nvars, std::size_t i);

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return c_[i]; }
  void set(std::size_t i, unsigned value);

  /// |alpha| = alpha_1 + ... + alpha_n.
  unsigned degree() const noexcept {
    unsigned d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += c_[i];
    return d;
  }

  bool is_zero() const noexcept { return degree() == 0; }

  /// True iff *this + N^n contains other.
  bool divides(const Exponent& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (c_[i] > other.c_[i]) return false;
    return true;
  }

  Exponent& operator+=(const Exponent& other);
  /// Requires divides(*this) on the right-hand side; throws otherwise.
  Exponent& operator-=(const Exponent& other);

  friend Exponent operator+(Exponent a, const Exponent& b) { return a += b; }
  friend Exponent operator-(Exponent a, const Exponent& b) { return a -= b; }

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  std::vector<unsigned> coords() const;
  std::string to_string() const;

 private:
  std::array<std::uint16_t, kMaxVars> c_{};
  std::uint8_t n_ = 0;
};

/// Compares the tuples (|a|, a_1, ..., a_n) lexicographically.
/// Throws DimensionMismatch when the lengths differ.
std::strong_ordering order_compare(const Exponent& a, const Exponent& b);

/// Unchecked strict-weak-order form of order_compare, for containers.
struct OrderLess {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept;
};

/// All exponents in n variables of total degree exactly d, in increasing order.
std::vector<Exponent> exponents_of_degree(std::size_t nvars, unsigned d);

/// All exponents in n variables of total degree < bound, in increasing order.
std::vector<Exponent> exponents_below(std::size_t nvars, unsigned bound);

}  // namespace lokal
