#include <doctest.h>

#include "defo/form.hpp"
#include "defo/random.hpp"

using namespace defo;

namespace {
VarEnv::Ptr env2() { return VarEnv::make(2); }
}

TEST_CASE("xi monomial sorting signs") {
  auto s = xi_from_indices({2, 1});
  REQUIRE(s.has_value());
  CHECK(s->first == 0b11);
  CHECK(s->second == -1);
  CHECK(!xi_from_indices({1, 1}).has_value());
  CHECK(xi_from_indices({1, 3, 2})->second == -1);
  CHECK(xi_merge_sign(0b001, 0b010).value() == 1);   // xi1 * xi2
  CHECK(xi_merge_sign(0b010, 0b001).value() == -1);  // xi2 * xi1
  CHECK(!xi_merge_sign(0b001, 0b001).has_value());
}

TEST_CASE("wedge examples") {
  auto e = env2();
  Form xi1 = Form::xi(e, 1);
  Form xi2 = Form::xi(e, 2);
  Form xi12 = Form::monomial(0b11, Poly::constant(e, Scalar(1)));
  CHECK(xi1.wedge(xi2) == xi12);
  CHECK(xi2.wedge(xi1) == -xi12);
  CHECK(xi1.wedge(xi1).is_zero());
  Form a = xi1.scaled(Poly::variable(e, 0));
  Form b = xi2.scaled(Poly::variable(e, 1));
  CHECK(a.wedge(b) == xi12.scaled(Poly::variable(e, 0) * Poly::variable(e, 1)));
}

TEST_CASE("wedge supercommutativity on homogeneous forms") {
  auto e = VarEnv::make(3);
  RandomSource rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int da = rng.int_in(0, 3);
    const int db = rng.int_in(0, 3);
    Form a(e), b(e);
    for (const auto& [mask, poly] : random_form(rng, e, 3).terms())
      if (xi_degree(mask) == da) a.add_term(mask, poly);
    for (const auto& [mask, poly] : random_form(rng, e, 3).terms())
      if (xi_degree(mask) == db) b.add_term(mask, poly);
    Form lhs = a.wedge(b);
    Form rhs = b.wedge(a);
    if ((da * db) % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("de Rham examples") {
  auto e = env2();
  Poly p1 = Poly::variable(e, 0);
  Poly p2 = Poly::variable(e, 1);
  CHECK(Form::from_poly(p1).de_rham() == Form::xi(e, 1));
  // d(x2 xi1) = xi2 ^ xi1 = -xi1xi2
  Form f = Form::xi(e, 1).scaled(p2);
  CHECK(f.de_rham() == Form::monomial(0b11, Poly::constant(e, Scalar(-1))));
  // d(d(x1 x2)) = 0
  CHECK(Form::from_poly(p1 * p2).de_rham().de_rham().is_zero());
}

TEST_CASE("d squared vanishes on random forms") {
  auto e = VarEnv::make(3);
  RandomSource rng(17);
  for (int i = 0; i < 30; ++i) CHECK(random_form(rng, e, 4).de_rham().de_rham().is_zero());
}
