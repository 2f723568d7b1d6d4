#include "lokal/exponent.hpp"

#include <limits>

#include "lokal/errors.hpp"

namespace lokal {

namespace {

void check_nvars(std::size_t n) {
  if (n > kMaxVars)
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported, got " +
                     std::to_string(n));
}

std::uint16_t narrow(unsigned v) {
  if (v > std::numeric_limits<std::uint16_t>::max())
    throw MathError("exponent entry " + std::to_string(v) + " out of range");
  return static_cast<std::uint16_t>(v);
}

void fill_degree(std::size_t nvars, std::size_t pos, unsigned remaining, Exponent& cur,
                 std::vector<Exponent>& out) {
  if (pos + 1 == nvars) {
    cur.set(pos, remaining);
    out.push_back(cur);
    return;
  }
  for (unsigned a = 0; a <= remaining; ++a) {
    cur.set(pos, a);
    fill_degree(nvars, pos + 1, remaining - a, cur, out);
  }
  cur.set(pos, 0);
}

}  // namespace

Exponent::Exponent(std::size_t nvars) {
  check_nvars(nvars);
  n_ = static_cast<std::uint8_t>(nvars);
}

Exponent::Exponent(std::initializer_list<unsigned> coords)
    : Exponent(std::span<const unsigned>(coords.begin(), coords.size())) {}

Exponent::Exponent(std::span<const unsigned> coords) : Exponent(coords.size()) {
  for (std::size_t i = 0; i < coords.size(); ++i) c_[i] = narrow(coords[i]);
}

Exponent Exponent::unit(std::size_t nvars, std::size_t i) {
  Exponent e(nvars);
  e.set(i, 1);
  return e;
}

void Exponent::set(std::size_t i, unsigned value) { c_[i] = narrow(value); }

Exponent& Exponent::operator+=(const Exponent& other) {
  if (other.n_ != n_) throw DimensionMismatch("exponent length mismatch in addition");
  for (std::size_t i = 0; i < n_; ++i) c_[i] = narrow(unsigned{c_[i]} + other.c_[i]);
  return *this;
}

Exponent& Exponent::operator-=(const Exponent& other) {
  if (other.n_ != n_) throw DimensionMismatch("exponent length mismatch in subtraction");
  if (!other.divides(*this)) throw MathError("exponent subtraction would go negative");
  for (std::size_t i = 0; i < n_; ++i) c_[i] = static_cast<std::uint16_t>(c_[i] - other.c_[i]);
  return *this;
}

std::vector<unsigned> Exponent::coords() const { return {c_.begin(), c_.begin() + n_}; }

std::string Exponent::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

std::strong_ordering order_compare(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("cannot compare exponents of lengths " + std::to_string(a.size()) +
                            " and " + std::to_string(b.size()));
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
  std::size_t h = e.size();
  for (std::size_t i = 0; i < e.size(); ++i) h = h * 1000003u ^ e[i];
  return h;
}

std::vector<Exponent> exponents_of_degree(std::size_t nvars, unsigned d) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Exponent cur(nvars);
  fill_degree(nvars, 0, d, cur, out);
  return out;
}

std::vector<Exponent> exponents_below(std::size_t nvars, unsigned bound) {
  std::vector<Exponent> out;
  for (unsigned d = 0; d < bound; ++d) {
    auto layer = exponents_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace lokal
