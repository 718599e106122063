#include <doctest.h>

#include "defo/poly.hpp"
#include "defo/random.hpp"

using namespace defo;

namespace {

VarEnv::Ptr env2() { return VarEnv::make(2); }

Poly x1(const VarEnv::Ptr& e) { return Poly::variable(e, 0); }
Poly x2(const VarEnv::Ptr& e) { return Poly::variable(e, 1); }

}  // namespace

TEST_CASE("scalar arithmetic stays reduced") {
  Scalar a(2, 4);
  CHECK(a.numerator() == 1);
  CHECK(a.denominator() == 2);
  Scalar b(-3, 6);
  CHECK(b.str() == "-1/2");
  CHECK((a + b).is_zero());
  CHECK((Scalar(2, 3) * Scalar(3, 2)).is_one());
  CHECK_THROWS_AS(Scalar(1, 0), DomainError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), DomainError);
}

TEST_CASE("ring op examples") {
  auto e = env2();
  // (x1+x2)(x1-x2) = x1^2 - x2^2
  Poly lhs = (x1(e) + x2(e)) * (x1(e) - x2(e));
  Poly rhs = x1(e) * x1(e) - x2(e) * x2(e);
  CHECK(lhs == rhs);
  // p + 0 = p
  Poly p = x1(e) * x2(e) + x2(e);
  CHECK(p + Poly::zero(e) == p);
  // (2/3)*(3/2*x1) = x1
  CHECK(x1(e).scaled(Scalar(3, 2)).scaled(Scalar(2, 3)) == x1(e));
}

TEST_CASE("partial derivative examples") {
  auto e = env2();
  // d/dx1 (x1^2 x2) = 2 x1 x2
  Poly p = x1(e) * x1(e) * x2(e);
  CHECK(p.partial(0) == (x1(e) * x2(e)).scaled(Scalar(2)));
  // d/dx2 (x1^3) = 0
  CHECK((x1(e) * x1(e) * x1(e)).partial(1).is_zero());
  // parameters are constants under spatial derivatives
  auto ep = VarEnv::make(2, {"t"});
  Poly t = Poly::variable(ep, ep->index_of("t"));
  Poly q = t * Poly::variable(ep, 0);
  CHECK(q.partial(0) == t);
  // differentiating by the parameter itself is rejected
  CHECK_THROWS_AS(q.partial(ep->index_of("t")), DomainError);
}

TEST_CASE("substitute examples") {
  auto e = VarEnv::make(2, {"t1", "t2", "t3"});
  Poly t1 = Poly::variable(e, e->index_of("t1"));
  Poly t2 = Poly::variable(e, e->index_of("t2"));
  Poly t3 = Poly::variable(e, e->index_of("t3"));
  Poly expr = t1 * t2 + t3;
  std::map<int, Poly> b = {{e->index_of("t1"), Poly::constant(e, Scalar(1))},
                           {e->index_of("t2"), Poly::constant(e, Scalar(1))},
                           {e->index_of("t3"), Poly::zero(e)}};
  CHECK(expr.substitute(b) == Poly::constant(e, Scalar(1)));
  CHECK(expr.substitute({}) == expr);
  // recursive binding rejected
  CHECK_THROWS_AS(expr.substitute({{e->index_of("t1"), t1 + t2}}), DomainError);
}

TEST_CASE("example 6.4 bindings kill the relation polynomial") {
  // R = t0*t1t + t0p*t1 vanishes under t0 -> s, t1t -> v, t0p -> s*v-ish
  // bindings of the displayed 3-parameter family; concretely the family has
  // t0^2 = s, t1t^0 = -s, t2^0 = t1t^1 = v, t1^0 = u and the mixed products
  // cancel pairwise.
  auto e = VarEnv::make(2, {"s", "u", "v"});
  Poly s = Poly::variable(e, e->index_of("s"));
  Poly u = Poly::variable(e, e->index_of("u"));
  Poly v = Poly::variable(e, e->index_of("v"));
  // R~_2^0 = t0^2 t2^0 + t1t^1 t1t^0 with the 6.4 values (s)(v) + (v)(-s).
  Poly r = s * v + v * (-s);
  CHECK(r.is_zero());
  // and with symbolic placeholders first, specialized by substitution:
  auto ef = VarEnv::make(2, {"a", "b", "c", "d"});
  Poly a = Poly::variable(ef, ef->index_of("a"));
  Poly b2 = Poly::variable(ef, ef->index_of("b"));
  Poly c = Poly::variable(ef, ef->index_of("c"));
  Poly d = Poly::variable(ef, ef->index_of("d"));
  Poly generic = a * b2 + c * d;  // t0*t1t + t0'*t1 shape
  std::map<int, Poly> bind = {{ef->index_of("a"), c},
                              {ef->index_of("b"), -d}};
  CHECK(generic.substitute(bind).is_zero());
  (void)u;
}

TEST_CASE("ring axioms on random triples") {
  auto e = VarEnv::make(3, {"t"});
  RandomSource rng(7);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(rng, e, 3, 3, false);
    Poly b = random_poly(rng, e, 3, 3, false);
    Poly c = random_poly(rng, e, 3, 3, false);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("partials commute and respect parameter-only substitution") {
  auto e = VarEnv::make(2, {"t"});
  RandomSource rng(11);
  for (int i = 0; i < 40; ++i) {
    Poly p = random_poly(rng, e, 4, 4, false);
    CHECK(p.partial(0).partial(1) == p.partial(1).partial(0));
    std::map<int, Poly> b = {{e->index_of("t"), Poly::constant(e, rng.rational())}};
    CHECK(p.partial(0).substitute(b) == p.substitute(b).partial(0));
  }
}

TEST_CASE("environment mixing is rejected") {
  auto a = VarEnv::make(2);
  auto b = VarEnv::make(3);
  CHECK_THROWS_AS(Poly::variable(a, 0) + Poly::variable(b, 0), EnvMismatch);
  // same content is compatible even across distinct instances
  auto a2 = VarEnv::make(2);
  CHECK(Poly::variable(a, 0) + Poly::variable(a2, 0) == Poly::variable(a, 0).scaled(Scalar(2)));
}

TEST_CASE("varenv validation") {
  CHECK_THROWS_AS(VarEnv::make(1), DomainError);
  CHECK_THROWS_AS(VarEnv::make(2, {"x1"}), DomainError);
  CHECK_THROWS_AS(VarEnv::make(2, {"t", "t"}), DomainError);
  CHECK_THROWS_AS(VarEnv::make(2, {"xi12"}), DomainError);
}
