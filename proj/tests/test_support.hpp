#pragma once

#include <random>

#include "doctest.h"

#include "lokal/expression.hpp"
#include "lokal/polynomial.hpp"
#include "random_poly.hpp"

namespace lokal::testing {

inline Polynomial P(const char* text, std::size_t nvars = 2) { return parse(text, default_names(nvars)); }

}  // namespace lokal::testing

namespace doctest {
template <>
struct StringMaker<lokal::Polynomial> {
  static String convert(const lokal::Polynomial& f) { return lokal::format(f).c_str(); }
};
}  // namespace doctest
