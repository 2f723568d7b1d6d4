#include "doctest.h"
#include "lokal/errors.hpp"
#include "lokal/sections.hpp"
#include "test_support.hpp"

using namespace lokal;
using lokal::testing::P;

namespace {

LocalIdeal ideal(std::initializer_list<const char*> gens, std::size_t n = 2) {
  std::vector<Polynomial> g;
  for (const char* t : gens) g.push_back(P(t, n));
  return LocalIdeal(std::move(g));
}

std::vector<Rational> rats(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("restriction to planes") {
  auto I = ideal({"x^2", "y^3"});
  auto full = sample_plane(2, 2, SampleSeed{}, 5);
  auto J = restrict_ideal(I, full);
  CHECK(J.generators() == I.generators());
  auto line = sample_plane(2, 1, SampleSeed{}, 5);
  auto K = restrict_ideal(I, line);
  CHECK(K.nvars() == 1);
  CHECK(K.order() == 2);
  const Rational c = line.map.matrix()[1][0];
  CHECK(K.generators()[1] == Polynomial::monomial(Exponent{3}, c * c * c));
  CHECK_THROWS_AS(sample_plane(2, 3, SampleSeed{}, 0), InputError);
}

TEST_CASE("section exponents") {
  SamuelOptions opts;
  CHECK(section_exponent(ideal({"x^2", "y^3"}), 1, opts).nu == 2);
  CHECK(section_exponent(ideal({"x^2", "y^3"}), 2, opts).nu == 3);
  auto I3 = ideal({"x^2", "y^3", "z^5"}, 3);
  CHECK(section_exponent(I3, 2, opts).nu == 3);
  CHECK(section_exponent(I3, 3, opts).nu == 5);
}

TEST_CASE("profiles") {
  auto p = profile(ideal({"x^2", "y^3"}));
  CHECK(p.exponents == rats({2, 3}));
  CHECK(p.multiplicity == 6);
  auto m = profile(LocalIdeal::maximal(3));
  CHECK(m.exponents == rats({1, 1, 1}));
  CHECK(m.multiplicity == 1);
  auto q = profile(ideal({"x^2", "x*y", "y^3"}));
  CHECK(q.exponents == rats({2, 3}));
  CHECK(q.multiplicity == 5);
}

TEST_CASE("seeds agree") {
  SamuelOptions a, b;
  b.seed = SampleSeed(1, 997);
  for (auto I : {ideal({"x^2 + y^3", "x*y"}), ideal({"x^3", "x*y^2", "y^4"})})
    CHECK(profile(I, a).exponents == profile(I, b).exponents);
}

TEST_CASE("multiplicity inequality") {
  auto r = verify_inequality(ideal({"x^2", "y^3"}));
  CHECK(r.e == 6);
  CHECK(r.product == 6);
  CHECK(r.holds);
  CHECK(r.tight);
  auto s = verify_inequality(ideal({"x^2", "x*y", "y^3"}));
  CHECK(s.e == 5);
  CHECK(s.product == 6);
  CHECK(s.holds);
  CHECK_FALSE(s.tight);
  auto t = verify_inequality(ideal({"x^2", "y^3", "z^5"}, 3));
  CHECK(t.e == 30);
  CHECK(t.tight);
}

TEST_CASE("mixed multiplicity chain") {
  auto r = mixed_chain_check(ideal({"x^2", "y^3"}));
  CHECK(r.mixed == std::vector<unsigned>{1, 2, 6});
  CHECK(r.holds);
  auto m = mixed_chain_check(LocalIdeal::maximal(2));
  CHECK(m.mixed == std::vector<unsigned>{1, 1, 1});
  CHECK(m.holds);
  auto q = mixed_chain_check(ideal({"x^2", "x*y", "y^3"}));
  CHECK(q.mixed == std::vector<unsigned>{1, 2, 5});
  CHECK(q.holds);
}

TEST_CASE("equality family") {
  auto r = equality_family_check({P("x"), P("y")}, {2, 3}, 1);
  CHECK(r.nu == rats({2, 3}));
  CHECK(r.e == 6);
  CHECK(r.holds);
  auto s = equality_family_check({P("x + y"), P("x - y")}, {2, 2}, 1);
  CHECK(s.nu == rats({2, 2}));
  CHECK(s.e == 4);
  CHECK(s.holds);
  auto t = equality_family_check({P("x", 3), P("y", 3), P("z", 3)}, {1, 1, 1}, 1);
  CHECK(t.nu == rats({1, 1, 1}));
  CHECK(t.e == 1);
  auto u = equality_family_check({P("x"), P("x + y")}, {4, 6}, 2);
  CHECK(u.nu == rats({2, 3}));
  CHECK(u.e == 6);
  CHECK(u.e_reference == 24);
  CHECK(u.holds);
  CHECK_THROWS_AS(equality_family_check({P("x"), P("2*x")}, {2, 3}, 1), InputError);
  CHECK_THROWS_AS(equality_family_check({P("x"), P("y")}, {3, 2}, 1), InputError);
  CHECK_THROWS_AS(equality_family_check({P("x"), P("y")}, {2, 3}, 2), InputError);
}

TEST_CASE("binary resultant") {
  CHECK(binary_resultant(P("x^2"), P("y^3")) != 0);
  CHECK(binary_resultant(P("x^2"), P("x*y")) == 0);
  CHECK(binary_resultant(P("x - y"), P("x + y")) == 2);
  CHECK(binary_resultant(P("x^2 - y^2"), P("x - y")) == 0);
}

TEST_CASE("two-dimensional equality criterion") {
  auto I = ideal({"x^2", "y^3"});
  auto r = prop51_check(I, P("x^2"), P("y^3"), 1);
  CHECK(r.initial_forms_coprime);
  CHECK(r.hypotheses_hold);
  CHECK(r.conclusion == true);
  CHECK(r.status == "confirmed");
  auto s = prop51_check(I, P("x^2"), P("x*y"), 1);
  CHECK_FALSE(s.initial_forms_coprime);
  CHECK(s.status == "2a-fails");
  auto t = prop51_check(I, P("x^2 + y^3"), P("y^3"), 1);
  CHECK(t.e_g == 6);
  CHECK(t.conclusion == true);
  auto u = prop51_check(I, P("x^4"), P("y^6"), 2);
  CHECK(u.e_g == 24);
  CHECK(u.conclusion == true);
  // containment fails: x is not integral over I
  auto v = prop51_check(I, P("x"), P("y^6"), 1);
  CHECK(v.status == "2b-fails");
}
