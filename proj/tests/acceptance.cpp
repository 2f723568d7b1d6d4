// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Expected values are hand-derived and written out below; tolerances are exact
// equality throughout, and each criterion carries a wall-clock limit.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lokal/division.hpp"
#include "lokal/errors.hpp"
#include "lokal/expression.hpp"
#include "lokal/oracle.hpp"
#include "lokal/sections.hpp"
#include "random_poly.hpp"

using namespace lokal;
using lokal::testing::random_polynomial;

namespace {

Polynomial P(const std::string& text, std::size_t n) { return parse(text, default_names(n)); }

LocalIdeal ideal(const std::vector<std::string>& gens, std::size_t n) {
  std::vector<Polynomial> g;
  for (const auto& t : gens) g.push_back(P(t, n));
  return LocalIdeal(std::move(g));
}

Rational R(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string show(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string show(const LocalIdeal& I) {
  std::string s = "(";
  for (std::size_t i = 0; i < I.size(); ++i) s += (i ? ", " : "") + format(I.generators()[i]);
  return s + ")";
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail.clear();
    if (!pass) detail += "; ";
    pass = false;
    detail += why;
  }
};

bool run(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) o.fail("time " + std::to_string(s) + " s over the limit");
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << "criterion " << id << " [" << title << "]: " << (o.pass ? "PASS" : "FAIL") << " (" << s << " s, limit "
       << limit_s << " s) " << o.detail;
  std::cout << line.str() << std::endl;
  return o.pass;
}

// Ideals shared by the property suites: monomial, binomial and perturbed, in 2 and 3 variables.
struct CorpusIdeal {
  std::string name;
  LocalIdeal I;
};

std::vector<CorpusIdeal> corpus() {
  std::vector<CorpusIdeal> out;
  auto add = [&](const std::string& name, std::vector<std::string> gens, std::size_t n) {
    out.push_back({name, ideal(gens, n)});
  };
  add("mono x2,y3", {"x^2", "y^3"}, 2);
  add("mono x2,xy,y3", {"x^2", "x*y", "y^3"}, 2);
  add("mono x3,xy2,y5", {"x^3", "x*y^2", "y^5"}, 2);
  add("mono x4,x2y,y3", {"x^4", "x^2*y", "y^3"}, 2);
  add("mono x2,y2", {"x^2", "y^2"}, 2);
  add("mono x5,x2y2,y4", {"x^5", "x^2*y^2", "y^4"}, 2);
  add("mono x2,y3,z5", {"x^2", "y^3", "z^5"}, 3);
  add("mono x2,y2,z2,xyz", {"x^2", "y^2", "z^2", "x*y*z"}, 3);
  add("mono x3,y2,z3,xz", {"x^3", "y^2", "z^3", "x*z"}, 3);
  add("mono x2,xy,y2,z3", {"x^2", "x*y", "y^2", "z^3"}, 3);
  add("bin x2-y3,xy", {"x^2 - y^3", "x*y"}, 2);
  add("bin x2+y3,xy2", {"x^2 + y^3", "x*y^2"}, 2);
  add("bin x3-y2,x2y", {"x^3 - y^2", "x^2*y"}, 2);
  add("bin xy,x2-y2", {"x*y", "x^2 - y^2"}, 2);
  add("bin x2+yz,y2+xz,z3", {"x^2 + y*z", "y^2 + x*z", "z^3"}, 3);
  add("bin x2-y2,y2-z2,xyz", {"x^2 - y^2", "y^2 - z^2", "x*y*z"}, 3);
  add("bin xy-z2,x2,y3", {"x*y - z^2", "x^2", "y^3"}, 3);
  // perturbations: a monomial ideal plus random terms of higher degree
  std::mt19937_64 rng(20240611);
  const std::vector<std::pair<std::vector<std::string>, std::size_t>> bases = {
      {{"x^2", "y^3"}, 2},        {{"x^2", "x*y", "y^3"}, 2}, {{"x^3", "y^2"}, 2},          {{"x^2", "y^4"}, 2},
      {{"x*y", "x^3", "y^3"}, 2}, {{"x^2", "y^2", "z^3"}, 3}, {{"x^2", "y^2", "z^2"}, 3}, {{"x^3", "y^2", "z^2"}, 3},
  };
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const auto& [gens, n] = bases[i];
    std::vector<Polynomial> g;
    for (const auto& t : gens) {
      const Polynomial base = P(t, n);
      const unsigned o = base.order();
      g.push_back(base + random_polynomial(rng, n, o + 2, 2, o + 1, 1));
    }
    out.push_back({"perturbed #" + std::to_string(i), LocalIdeal(std::move(g))});
  }
  return out;
}

RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    RationalMatrix m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    if (determinant(m) != 0) return m;
  }
}

// ---- criteria ----

Outcome equality_family() {
  Outcome o;
  struct Case {
    LocalIdeal I;
    std::vector<Rational> nu;
    unsigned e;
  };
  const std::vector<Case> cases = {{ideal({"x^2", "y^3"}, 2), {R(2), R(3)}, 6},
                                   {ideal({"x^2", "y^3", "z^5"}, 3), {R(2), R(3), R(5)}, 30}};
  for (const auto& c : cases) {
    const auto t0 = std::chrono::steady_clock::now();
    const InequalityReport r = verify_inequality(c.I);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.detail += show(c.I) + ": nu=" + show(r.nu) + " e=" + std::to_string(r.e) + (r.tight ? " tight" : " not tight") +
                "; ";
    if (r.nu != c.nu || r.e != c.e || !r.tight || !r.holds) o.fail(show(c.I) + " differs from the expected values");
    if (s > 60) o.fail(show(c.I) + " took over 60 s");
  }
  return o;
}

Outcome strict_case() {
  Outcome o;
  const LocalIdeal I = ideal({"x^2", "x*y", "y^3"}, 2);
  const InequalityReport r = verify_inequality(I);
  const Integer polyhedral = NewtonPolyhedron::of_ideal(I).multiplicity();  // 2! * area, area 5/2
  o.detail = "e=" + std::to_string(r.e) + " nu=" + show(r.nu) + " product=" + to_string(r.product) +
             " polyhedral e=" + polyhedral.get_str();
  if (r.e != 5 || r.nu != std::vector<Rational>{R(2), R(3)} || r.product != 6 || r.tight || !r.holds)
    o.fail("report differs: " + o.detail);
  if (polyhedral != 5) o.fail("polyhedral multiplicity " + polyhedral.get_str() + " != 5");
  return o;
}

Outcome desk_check() {
  Outcome o;
  const LocalIdeal I = ideal({"x^2", "y^3"}, 2);
  // (lambda^2 - U1)^3 = lambda^6 - 3 U1 lambda^4 + 3 U1^2 lambda^2 - U1^3
  const VariableNames U{"U1", "U2"};
  const std::vector<Polynomial> expected = {parse("0", U),        parse("0 - 3*U1", U), parse("0", U),
                                            parse("3*U1^2", U),   parse("0", U),        parse("0 - U1^3", U)};
  const CharPolyData cp = char_poly(P("x", 2), ModuleStructure(I, 6));
  if (cp.coeffs != expected) {
    std::string got;
    for (const auto& a : cp.coeffs) got += format(a, U) + " | ";
    o.fail("char_poly(x) coefficients: " + got);
  }
  const Rational vx = samuel_value(P("x", 2), I).value;
  const Rational vxy = samuel_value(P("x*y", 2), I).value;
  const Rational nxy = newton_value(I, P("x*y", 2));
  o.detail = "v(x)=" + to_string(vx) + " v(xy)=" + to_string(vxy) + " newton(xy)=" + to_string(nxy) + " " + o.detail;
  if (vx != R(1, 2)) o.fail("v(x) = " + to_string(vx));
  if (vxy != R(5, 6) || nxy != R(5, 6)) o.fail("v(xy) = " + to_string(vxy) + ", newton " + to_string(nxy));
  return o;
}

Outcome cayley_hamilton() {
  Outcome o;
  std::mt19937_64 rng(31);
  const TruncationLevel level(30);
  unsigned tried = 0, zero = 0;
  std::vector<std::pair<std::vector<unsigned>, std::size_t>> shapes = {
      {{2, 2}, 2}, {{2, 3}, 2}, {{3, 3}, 2}, {{3, 4}, 2}, {{2, 2, 2}, 3}, {{2, 2, 3}, 3}};
  for (unsigned t = 0; tried < 20 && t < 200; ++t) {
    const auto& [orders, n] = shapes[t % shapes.size()];
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
      Exponent e(n);
      e.set(i, orders[i]);
      gens.push_back(Polynomial::monomial(e) + random_polynomial(rng, n, orders[i] + 2, 2, orders[i], 2));
    }
    LocalIdeal I(std::move(gens));
    std::size_t e = 0;
    try {
      e = I.certificate().colength;
    } catch (const NotPrimary&) {
      continue;
    }
    if (e > 12) continue;
    const Polynomial g = random_polynomial(rng, n, 3, 3, 1, 2);
    if (g.is_zero()) continue;
    ++tried;
    const Polynomial res = cayley_hamilton_residual(g, I, level);
    if (res.is_zero()) ++zero;
    else o.fail("nonzero residual for g = " + format(g) + " on " + show(I));
  }
  o.detail = std::to_string(zero) + "/" + std::to_string(tried) + " residuals vanish mod m^30 " + o.detail;
  if (tried < 20) o.fail("only " + std::to_string(tried) + " pairs");
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  struct Pair {
    std::vector<std::string> I;
    std::size_t n;
    std::vector<std::string> g;
  };
  const std::vector<Pair> pairs = {
      {{"x^2", "y^3"}, 2, {"x", "y", "x*y", "x^2*y", "y^2"}},
      {{"x^2", "x*y", "y^3"}, 2, {"x", "y", "x*y", "y^2"}},
      {{"x^4", "x^2*y", "y^3"}, 2, {"x", "y", "x*y"}},
      {{"x^3", "x*y", "y^4"}, 2, {"x", "y", "x*y^2"}},
      {{"x^6", "x^2*y^2", "y^4"}, 2, {"x", "y", "x*y"}},
      {{"x^2", "y^3", "z^4"}, 3, {"x", "y", "z", "x*y*z"}},
      {{"x^2", "y^2", "z^2", "x*y*z"}, 3, {"x", "x*y", "x*y*z"}},
      {{"x^3", "y^3", "z^3", "x*y"}, 3, {"x", "z", "x*z"}},
      {{"x^2", "y^4", "z^6", "y*z"}, 3, {"y", "z", "x*y"}},
  };
  unsigned count = 0, eq_checked = 0;
  for (const auto& p : pairs) {
    const LocalIdeal I = ideal(p.I, p.n);
    for (const auto& gt : p.g) {
      ++count;
      const Polynomial g = P(gt, p.n);
      const Rational v = samuel_value(g, I).value;
      const Rational nv = newton_value(I, g);
      const FeketeEstimate fe = fekete_lower(g, I, 24);
      const std::string where = gt + " on " + show(I);
      if (v != nv) o.fail("samuel " + to_string(v) + " != newton " + to_string(nv) + " for " + where);
      if (fe.best > v) o.fail("fekete " + to_string(fe.best) + " above " + to_string(v) + " for " + where);
      if (24 % v.get_den() == 0) {
        ++eq_checked;
        if (fe.best != v) o.fail("fekete " + to_string(fe.best) + " misses " + to_string(v) + " for " + where);
      }
    }
  }
  o.detail = std::to_string(count) + " pairs, " + std::to_string(eq_checked) + " with Fekete equality required " +
             o.detail;
  if (count < 30) o.fail("fewer than 30 pairs");
  return o;
}

Outcome inequality_suite(const std::vector<CorpusIdeal>& ideals) {
  Outcome o;
  unsigned held = 0, tight = 0;
  for (const auto& c : ideals) {
    const InequalityReport r = verify_inequality(c.I);
    if (r.holds) ++held;
    else o.fail(c.name + ": e=" + std::to_string(r.e) + " > " + to_string(r.product));
    if (r.tight) ++tight;
  }
  o.detail = std::to_string(held) + "/" + std::to_string(ideals.size()) + " hold (" + std::to_string(tight) +
             " tight) " + o.detail;
  if (ideals.size() < 25) o.fail("corpus smaller than 25");
  return o;
}

Outcome division_contract() {
  Outcome o;
  std::mt19937_64 rng(77);
  unsigned ok = 0, total = 0;
  for (unsigned t = 0; total < 120; ++t) {
    const std::size_t n = 2 + t % 2;
    const std::size_t k = 1 + t % 4;
    std::vector<Polynomial> divs;
    for (std::size_t i = 0; i < k; ++i) {
      const Polynomial d = random_polynomial(rng, n, 4, 3, 1);
      if (d.is_zero()) break;
      divs.push_back(d);
    }
    if (divs.size() != k) continue;
    const Polynomial F = random_polynomial(rng, n, 8, 8);
    const unsigned L = 4 + t % 7;
    ++total;
    const TruncationLevel level(L);
    const DivisionResult r = divide(F, divs, level);
    PolynomialBuilder sum(n);
    for (std::size_t i = 0; i < k; ++i) sum.add(multiply(r.quotients[i], divs[i], L));
    sum.add(r.remainder);
    std::string bad;
    if (std::move(sum).build() != truncate(F, level)) bad = "identity";
    else if (const auto s = check_support_contracts(r, divs); !s.empty()) bad = "support: " + s;
    else {
      const DivisionResult again = divide(r.remainder, divs, level);
      bool zero = again.remainder == r.remainder;
      for (const auto& q : again.quotients) zero = zero && q.is_zero();
      if (!zero) bad = "uniqueness";
      const DivisionResult longer = divide(F, divs, TruncationLevel(L + 3));
      bool prefix = truncate(longer.remainder, level) == r.remainder;
      for (std::size_t i = 0; i < k; ++i) prefix = prefix && truncate(longer.quotients[i], level) == r.quotients[i];
      if (!prefix) bad = "prefix stability";
    }
    if (bad.empty()) ++ok;
    else o.fail(bad + " fails for F = " + format(F));
  }
  o.detail = std::to_string(ok) + "/" + std::to_string(total) + " instances " + o.detail;
  return o;
}

Outcome genericity(const std::vector<CorpusIdeal>& ideals) {
  Outcome o;
  std::mt19937_64 rng(8);
  SamuelOptions s1;
  s1.seed = SampleSeed(1, 997);
  unsigned seeds_ok = 0, subs = 0;
  for (const auto& c : ideals) {
    const SectionProfile p0 = profile(c.I);
    const SectionProfile p1 = profile(c.I, s1);
    if (p0.exponents == p1.exponents) ++seeds_ok;
    else o.fail(c.name + ": seeds 0 and 1 give " + show(p0.exponents) + " vs " + show(p1.exponents));
  }
  // five substitutions, each applied to a rotating slice of the corpus
  for (unsigned s = 0; s < 5; ++s) {
    for (std::size_t j = s; j < ideals.size(); j += 5) {
      const auto& c = ideals[j];
      const std::size_t n = c.I.nvars();
      const LinearSubstitution L(n, n, random_invertible(rng, n));
      const LocalIdeal J = substitute_linear(c.I, L);
      const Polynomial g = Polynomial::variable(n, 0);
      const unsigned e0 = multiplicity(c.I, {}), e1 = multiplicity(J, {});
      const Rational v0 = samuel_value(g, c.I).value, v1 = samuel_value(substitute_linear(g, L), J).value;
      const auto p0 = profile(c.I).exponents, p1 = profile(J).exponents;
      ++subs;
      if (e0 != e1) o.fail(c.name + ": e changes " + std::to_string(e0) + " -> " + std::to_string(e1));
      if (v0 != v1) o.fail(c.name + ": v(x) changes " + to_string(v0) + " -> " + to_string(v1));
      if (p0 != p1) o.fail(c.name + ": profile changes " + show(p0) + " -> " + show(p1));
    }
  }
  o.detail = std::to_string(seeds_ok) + "/" + std::to_string(ideals.size()) + " seed pairs agree, " +
             std::to_string(subs) + " substituted ideals checked " + o.detail;
  return o;
}

Outcome mixed_chain(const std::vector<CorpusIdeal>& ideals) {
  Outcome o;
  unsigned held = 0;
  for (const auto& c : ideals) {
    const MixedChainReport r = mixed_chain_check(c.I);
    if (r.holds) ++held;
    else {
      std::string m;
      for (auto x : r.mixed) m += std::to_string(x) + " ";
      o.fail(c.name + ": mixed " + m + "nu " + show(r.nu));
    }
  }
  o.detail = std::to_string(held) + "/" + std::to_string(ideals.size()) + " chains hold " + o.detail;
  return o;
}

Outcome prop51() {
  Outcome o;
  struct Inst {
    std::vector<std::string> I;
    std::string g1, g2;
    unsigned b;
  };
  // 2a and 2b hold by construction
  const std::vector<Inst> good = {
      {{"x^2", "y^3"}, "x^2", "y^3", 1},
      {{"x^2", "y^2"}, "x^2", "y^2", 1},
      {{"x^2", "x*y", "y^2"}, "x^2 + x*y", "y^2", 1},
      {{"x^3", "y^2"}, "x^3 + y^3", "y^2 + x^4", 1},
      {{"x^2", "y^3"}, "x^4", "y^6", 2},
      {{"x^2", "y^2"}, "x^4 + y^5", "y^4", 2},
      {{"x^2 + y^3", "y^2"}, "x^2 + y^3", "y^2", 1},
      {{"x^2 - y^2", "x*y"}, "x^2 - y^2", "x*y", 1},
      {{"x^3", "x*y^2", "y^3"}, "x^3 + y^3", "x*y^2", 1},
      {{"x + y^2", "y^3"}, "x + y^2", "y^3", 1},
      {{"x^2", "y^5"}, "x^2 + x*y^3", "y^5", 1},
      {{"x^4", "y^3"}, "x^4 - y^5", "y^3 + x^2*y^2", 1},
  };
  // In(g1) and In(g2) share a factor
  const std::vector<Inst> bad = {
      {{"x^2", "x*y", "y^3"}, "x^2", "x*y + y^3", 1},
      {{"x^2", "y^2"}, "x^2 + x*y", "x*y + y^2", 1},
      {{"x^2", "y^3"}, "x^2", "x^2 + y^3", 1},
  };
  unsigned confirmed = 0, flagged = 0;
  for (const auto& c : good) {
    const Prop51Report r = prop51_check(ideal(c.I, 2), P(c.g1, 2), P(c.g2, 2), c.b);
    if (r.status == "confirmed" && r.conclusion && *r.conclusion) ++confirmed;
    else o.fail("(" + c.g1 + ", " + c.g2 + ") gives " + r.status);
  }
  for (const auto& c : bad) {
    const Prop51Report r = prop51_check(ideal(c.I, 2), P(c.g1, 2), P(c.g2, 2), c.b);
    if (r.status == "2a-fails" && !r.initial_forms_coprime) ++flagged;
    else o.fail("(" + c.g1 + ", " + c.g2 + ") not flagged: " + r.status);
  }
  o.detail = std::to_string(confirmed) + "/" + std::to_string(good.size()) + " confirmed, " + std::to_string(flagged) +
             "/" + std::to_string(bad.size()) + " 2a violations reported " + o.detail;
  return o;
}

}  // namespace

int main() {
  const auto ideals = corpus();
  bool all = true;
  all &= run(1, "equality family", 120, equality_family);
  all &= run(2, "strict inequality", 60, strict_case);
  all &= run(3, "characteristic polynomial desk check", 10, desk_check);
  all &= run(4, "Cayley-Hamilton residual", 300, cayley_hamilton);
  all &= run(5, "oracle consistency", 300, oracle_consistency);
  all &= run(6, "inequality suite", 900, [&] { return inequality_suite(ideals); });
  all &= run(7, "division contract", 120, division_contract);
  all &= run(8, "genericity stability", 600, [&] { return genericity(ideals); });
  all &= run(9, "mixed multiplicity chain", 600, [&] { return mixed_chain(ideals); });
  all &= run(10, "two-variable equality criterion", 300, prop51);
  std::cout << (all ? "all criteria PASS" : "some criteria FAIL") << std::endl;
  return all ? 0 : 1;
}
