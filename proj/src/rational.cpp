#include "lokal/rational.hpp"

#include <utility>

#include "lokal/errors.hpp"

namespace lokal {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw InputError("malformed rational '" + text + "'");
  Integer d(den);
  if (d == 0) throw InputError("zero denominator in '" + text + "'");
  Rational q(Integer(num[0] == '+' ? num.substr(1) : num), d);
  q.canonicalize();
  return q;
}

namespace {

// Row-reduces in place, returning (rank, determinant-if-square).
std::pair<std::size_t, Rational> eliminate(RationalMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  Rational det = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) {
      det = 0;
      continue;
    }
    if (p != r) {
      std::swap(m[p], m[r]);
      det = -det;
    }
    det *= m[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  if (r < rows) det = 0;
  return {r, det};
}

}  // namespace

std::size_t rank(RationalMatrix m) { return eliminate(m).first; }

Rational determinant(RationalMatrix m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw DimensionMismatch("determinant of a non-square matrix");
  if (m.empty()) return 1;
  return eliminate(m).second;
}

}  // namespace lokal
