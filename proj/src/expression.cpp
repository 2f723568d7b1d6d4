#include "lokal/expression.hpp"

#include <cctype>

#include "lokal/errors.hpp"

namespace lokal {

VariableNames default_names(std::size_t nvars) {
  static const char* const xyz[] = {"x", "y", "z"};
  if (nvars <= 3) return VariableNames(xyz, xyz + nvars);
  VariableNames names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VariableNames& vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(unexpected(), pos_);
    return p;
  }

 private:
  std::string_view text_;
  const VariableNames& vars_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string unexpected() {
    if (pos_ >= text_.size()) return "unexpected end of input";
    return std::string("unexpected '") + text_[pos_] + "'";
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      Polynomial rhs = term();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      std::string d = digits();
      if (d.empty()) throw ParseError("expected a natural exponent after '^'", at);
      if (d.size() > 6) throw ParseError("exponent too large", at);
      b = power(b, static_cast<unsigned>(std::stoul(d)));
    }
    return b;
  }

  Polynomial base() {
    const char c = peek();
    const std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits());
      Integer den(1);
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t dat = pos_;
        std::string d = digits();
        if (d.empty()) throw ParseError("expected a positive integer denominator", dat);
        den = Integer(d);
        if (den == 0) throw ParseError("zero denominator", dat);
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::constant(vars_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      std::string name(text_.substr(pos_, end - pos_));
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
          pos_ = end;
          return Polynomial::variable(vars_.size(), i);
        }
      }
      throw ParseError("unknown variable '" + name + "'", at);
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') throw ParseError("expected ')', " + unexpected(), pos_);
      ++pos_;
      return inner;
    }
    throw ParseError(unexpected(), pos_);
  }
};

std::string monomial_text(const Exponent& e, const VariableNames& vars) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string magnitude_text(const Rational& q) {
  std::string s = Integer(abs(q.get_num())).get_str();
  if (q.get_den() != 1) s += "/" + q.get_den().get_str();
  return s;
}

}  // namespace

Polynomial parse(std::string_view text, const VariableNames& vars) {
  if (vars.size() > kMaxVars) throw InputError("too many variables");
  return Parser(text, vars).run();
}

std::string format(const Polynomial& f, const VariableNames& vars) {
  if (vars.size() != f.nvars()) throw DimensionMismatch("wrong number of variable names");
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) s += "0 - ";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_text(e, vars);
    const Rational mag = abs(c);
    if (mono.empty()) {
      s += magnitude_text(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += magnitude_text(mag) + "*" + mono;
    }
  }
  return s;
}

std::string format(const Polynomial& f) { return format(f, default_names(f.nvars())); }

}  // namespace lokal
