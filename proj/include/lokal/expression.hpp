#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lokal/polynomial.hpp"

namespace lokal {

/// Positional variable names; index i names variable i.
using VariableNames = std::vector<std::string>;

/// x, y, z for up to three variables, x1..xn otherwise.
VariableNames default_names(std::size_t nvars);

/// Parses the polynomial grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' natural)?
///   base   := rational | identifier | '(' expr ')'
///   rational := integer ('/' positive-integer)?
/// Whitespace is insignificant; implicit multiplication is rejected.
/// Throws ParseError (with position) on syntax errors and unknown variables.
Polynomial parse(std::string_view text, const VariableNames& vars);

/// Canonical text: terms in increasing order_compare, coefficient before the
/// monomial, "0 - ..." when the leading coefficient is negative (the grammar
/// has no unary minus). parse(format(f)) == f.
std::string format(const Polynomial& f, const VariableNames& vars);
std::string format(const Polynomial& f);

}  // namespace lokal
