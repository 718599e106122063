#include <doctest.h>

#include "defo/diffop.hpp"
#include "defo/random.hpp"

using namespace defo;

namespace {

VarEnv::Ptr env2() { return VarEnv::make(2); }

DiffOp random_op(RandomSource& rng, const VarEnv::Ptr& env, int terms) {
  DiffOp op(env);
  const XiMask top = (XiMask{1} << env->n()) - 1;
  for (int t = 0; t < terms; ++t) {
    OpKey key;
    key.xi = static_cast<XiMask>(rng.below(top + 1));
    key.dxi = static_cast<XiMask>(rng.below(top + 1));
    key.dx.assign(static_cast<std::size_t>(env->n()), 0);
    for (int d = rng.int_in(0, 2); d > 0; --d)
      key.dx[static_cast<std::size_t>(rng.int_in(0, env->n() - 1))] += 1;
    op.add_term(key, random_poly(rng, env, 2, 2, true));
  }
  return op;
}

}  // namespace

TEST_CASE("even Leibniz: dx1 . x1 = x1 dx1 + 1") {
  auto e = env2();
  DiffOp lhs = DiffOp::compose(DiffOp::dx_op(e, 1), DiffOp::mult_poly(Poly::variable(e, 0)));
  DiffOp rhs = DiffOp::compose(DiffOp::mult_poly(Poly::variable(e, 0)), DiffOp::dx_op(e, 1)) +
               DiffOp::identity(e);
  CHECK(lhs == rhs);
}

TEST_CASE("odd Leibniz: dxi1 . xi1 = 1 - xi1 dxi1") {
  auto e = env2();
  DiffOp lhs = DiffOp::compose(DiffOp::dxi_op(e, 1), DiffOp::xi_op(e, 1));
  DiffOp rhs = DiffOp::identity(e) -
               DiffOp::compose(DiffOp::xi_op(e, 1), DiffOp::dxi_op(e, 1));
  CHECK(lhs == rhs);
}

TEST_CASE("apply-then-apply agrees with composed operator") {
  auto e = env2();
  // (xi1 dxi2)(xi2 dxi1) applied to xi1 returns xi1
  DiffOp a = DiffOp::compose(DiffOp::xi_op(e, 1), DiffOp::dxi_op(e, 2));
  DiffOp b = DiffOp::compose(DiffOp::xi_op(e, 2), DiffOp::dxi_op(e, 1));
  Form xi1 = Form::xi(e, 1);
  CHECK(DiffOp::compose(a, b).apply(xi1) == a.apply(b.apply(xi1)));
  CHECK(DiffOp::compose(a, b).apply(xi1) == xi1);
}

TEST_CASE("apply examples with contraction signs") {
  auto e = env2();
  // xi2 dxi1 applied to xi1 -> xi2
  DiffOp op = DiffOp::compose(DiffOp::xi_op(e, 2), DiffOp::dxi_op(e, 1));
  CHECK(op.apply(Form::xi(e, 1)) == Form::xi(e, 2));
  // dxi1 applied to xi1xi2 -> xi2 (position 1, sign +)
  Form xi12 = Form::monomial(0b11, Poly::constant(e, Scalar(1)));
  CHECK(DiffOp::dxi_op(e, 1).apply(xi12) == Form::xi(e, 2));
  // dxi2 applied to xi1xi2 -> -xi1 (position 2, sign -)
  CHECK(DiffOp::dxi_op(e, 2).apply(xi12) == -Form::xi(e, 1));
  // x1 dx1 applied to x1^2 xi1 -> 2 x1^2 xi1
  Poly sq = Poly::variable(e, 0) * Poly::variable(e, 0);
  DiffOp xdx = DiffOp::compose(DiffOp::mult_poly(Poly::variable(e, 0)), DiffOp::dx_op(e, 1));
  CHECK(xdx.apply(Form::xi(e, 1).scaled(sq)) == Form::xi(e, 1).scaled(sq.scaled(Scalar(2))));
}

TEST_CASE("d as operator matches the form-level differential") {
  auto e = VarEnv::make(3);
  DiffOp d = DiffOp::d_operator(e);
  CHECK(d.apply(Form::from_poly(Poly::variable(e, 0))) == Form::xi(e, 1));
  CHECK(DiffOp::compose(d, d).is_zero());
  CHECK(d.apply(Form::xi(e, 1)).is_zero());
  RandomSource rng(5);
  for (int i = 0; i < 25; ++i) {
    Form w = random_form(rng, e, 3);
    CHECK(d.apply(w) == w.de_rham());
  }
}

TEST_CASE("fast composition matches the word-rewriting reference") {
  auto e = env2();
  RandomSource rng(23);
  for (int i = 0; i < 25; ++i) {
    DiffOp a = random_op(rng, e, 2);
    DiffOp b = random_op(rng, e, 2);
    CHECK(DiffOp::compose(a, b) == detail::compose_reference(a, b));
  }
}

TEST_CASE("compose is associative and the action is a homomorphism") {
  auto e = env2();
  RandomSource rng(29);
  for (int i = 0; i < 15; ++i) {
    DiffOp a = random_op(rng, e, 2);
    DiffOp b = random_op(rng, e, 2);
    DiffOp c = random_op(rng, e, 2);
    CHECK(DiffOp::compose(DiffOp::compose(a, b), c) == DiffOp::compose(a, DiffOp::compose(b, c)));
    Form w = random_form(rng, e, 2);
    CHECK(DiffOp::compose(a, b).apply(w) == a.apply(b.apply(w)));
  }
}

TEST_CASE("commutator basics and Jacobi") {
  auto e = env2();
  DiffOp x1m = DiffOp::mult_poly(Poly::variable(e, 0));
  CHECK(DiffOp::commutator(DiffOp::dx_op(e, 1), x1m) == DiffOp::identity(e));
  RandomSource rng(31);
  for (int i = 0; i < 10; ++i) {
    DiffOp a = random_op(rng, e, 2);
    DiffOp b = random_op(rng, e, 2);
    DiffOp c = random_op(rng, e, 2);
    CHECK(DiffOp::commutator(a, a).is_zero());
    DiffOp jac = DiffOp::commutator(a, DiffOp::commutator(b, c)) +
                 DiffOp::commutator(b, DiffOp::commutator(c, a)) +
                 DiffOp::commutator(c, DiffOp::commutator(a, b));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("degree projectors resolve the identity and select degrees") {
  auto e = env2();
  DiffOp sum = DiffOp::zero(e);
  for (int k = 0; k <= 2; ++k) sum += DiffOp::degree_projector(e, k);
  CHECK(sum == DiffOp::identity(e));
  Form xi1 = Form::xi(e, 1);
  CHECK(DiffOp::degree_projector(e, 1).apply(xi1) == xi1);
  CHECK(DiffOp::degree_projector(e, 0).apply(xi1).is_zero());
  // projectors are idempotent and orthogonal
  DiffOp p1 = DiffOp::degree_projector(e, 1);
  CHECK(DiffOp::compose(p1, p1) == p1);
  CHECK(DiffOp::compose(p1, DiffOp::degree_projector(e, 2)).is_zero());
}

TEST_CASE("graded blocks of d") {
  auto e = env2();
  DiffOp d = DiffOp::d_operator(e);
  RandomSource rng(37);
  for (int k = 0; k < 2; ++k) {
    Form w(e);
    for (const auto& [mask, poly] : random_form(rng, e, 3).terms())
      if (xi_degree(mask) == k) w.add_term(mask, poly);
    CHECK(d.graded_block(k, k + 1).apply(w) == w.de_rham());
    CHECK(d.graded_block(k, k).is_zero());
  }
}

TEST_CASE("graded block keeps only matching shifts and kills other degrees") {
  auto e = env2();
  // mixed op: xi1 dxi2 (shift 0) + xi1xi2 dxi1 dxi2 (shift 0) + xi1 (shift 1)
  DiffOp mixed = DiffOp::compose(DiffOp::xi_op(e, 1), DiffOp::dxi_op(e, 2));
  OpKey k2;
  k2.xi = 0b11;
  k2.dx.assign(2, 0);
  k2.dxi = 0b11;
  mixed += DiffOp::from_term(e, k2, Poly::constant(e, Scalar(1)));
  mixed += DiffOp::xi_op(e, 1);

  DiffOp block = mixed.graded_block(1, 1);
  RandomSource rng(41);
  for (int i = 0; i < 10; ++i) {
    Form w = random_form(rng, e, 2);
    Form w1 = w.degree_part(1);
    // agrees with the shift-0 action on degree 1, vanishes elsewhere
    CHECK(block.apply(w1) == mixed.apply(w1).degree_part(1));
    CHECK(block.apply(w.degree_part(0)).is_zero());
    CHECK(block.apply(w.degree_part(2)).is_zero());
  }
}

TEST_CASE("graded blocks resolve a homogeneous action") {
  auto e = env2();
  RandomSource rng(43);
  for (int i = 0; i < 10; ++i) {
    DiffOp op = random_op(rng, e, 3);
    const int k = rng.int_in(0, 2);
    Form w(e);
    for (const auto& [mask, poly] : random_form(rng, e, 3).terms())
      if (xi_degree(mask) == k) w.add_term(mask, poly);
    Form total(e);
    for (int l = 0; l <= 2; ++l) total += op.graded_block(k, l).apply(w);
    CHECK(total == op.apply(w));
  }
}

TEST_CASE("graded block rejects out-of-range degrees") {
  auto e = env2();
  CHECK_THROWS_AS(DiffOp::identity(e).graded_block(0, 3), DomainError);
  CHECK_THROWS_AS(DiffOp::identity(e).graded_block(-1, 0), DomainError);
}
