#include "defo/cochain.hpp"

#include <string>

namespace defo {

namespace {

void check_restrict_range(const VarEnv::Ptr& env, std::optional<int> shift, int k,
                          const char* what) {
  const int n = env->n();
  if (!shift) {
    if (k < 0 || k > n)
      throw DomainError(std::string(what) + ": restriction degree " + std::to_string(k) +
                        " outside 0.." + std::to_string(n));
    return;
  }
  const int hi = n - *shift;
  if (k < 0 || k > hi)
    throw DomainError(std::string(what) + ": restriction degree " + std::to_string(k) +
                      " outside valid range 0.." + std::to_string(hi) + " for shift " +
                      std::to_string(*shift));
}

}  // namespace

OneCochain OneCochain::c0(VarEnv::Ptr env) {
  return OneCochain(env, 0, [](const VectorField& x) {
    return DiffOp::mult_poly(divergence(x));
  });
}

OneCochain OneCochain::c1(VarEnv::Ptr env) {
  return OneCochain(env, 1, [](const VectorField& x) {
    return DiffOp::compose(DiffOp::d_operator(x.env()), DiffOp::mult_poly(divergence(x)));
  });
}

OneCochain OneCochain::c1_tilde(VarEnv::Ptr env) {
  return OneCochain(env, 1, [](const VectorField& x) {
    return DiffOp::compose(DiffOp::mult_poly(divergence(x)), DiffOp::d_operator(x.env()));
  });
}

OneCochain OneCochain::c2(VarEnv::Ptr env) {
  return OneCochain(env, 2, [](const VectorField& x) {
    const DiffOp d = DiffOp::d_operator(x.env());
    return DiffOp::compose(d, DiffOp::mult_poly(divergence(x)), d);
  });
}

OneCochain OneCochain::zero(VarEnv::Ptr env) {
  VarEnv::Ptr e = env;
  return OneCochain(env, std::nullopt, [e](const VectorField&) { return DiffOp::zero(e); });
}

OneCochain OneCochain::restrict_to(int k) const {
  check_restrict_range(env_, shift_, k, "OneCochain::restrict_to");
  Eval base = eval_;
  VarEnv::Ptr env = env_;
  return OneCochain(env_, shift_, [base, env, k](const VectorField& x) {
    return DiffOp::compose(base(x), DiffOp::degree_projector(env, k));
  });
}

OneCochain OneCochain::scaled(const Poly& coeff) const {
  Eval base = eval_;
  Poly c = coeff;
  return OneCochain(env_, shift_, [base, c](const VectorField& x) { return base(x).scaled(c); });
}

OneCochain OneCochain::operator+(const OneCochain& o) const {
  VarEnv::require_compatible(env_, o.env_, "OneCochain::operator+");
  std::optional<int> shift = (shift_ == o.shift_) ? shift_ : std::nullopt;
  Eval lhs = eval_, rhs = o.eval_;
  return OneCochain(env_, shift,
                    [lhs, rhs](const VectorField& x) { return lhs(x) + rhs(x); });
}

Form gamma1_form(const VectorField& x, const VectorField& y) {
  const Poly dx = divergence(x);
  const Poly dy = divergence(y);
  const Form ddx = Form::from_poly(dx).de_rham();
  const Form ddy = Form::from_poly(dy).de_rham();
  return ddy.scaled(dx) - ddx.scaled(dy);
}

Form gamma2_tilde_form(const VectorField& x, const VectorField& y) {
  const Form ddx = Form::from_poly(divergence(x)).de_rham();
  const Form ddy = Form::from_poly(divergence(y)).de_rham();
  return ddx.wedge(ddy) - ddy.wedge(ddx);
}

TwoCochain TwoCochain::gamma1(VarEnv::Ptr env) {
  return TwoCochain(env, 1, [](const VectorField& x, const VectorField& y) {
    return DiffOp::mult_form(gamma1_form(x, y));
  });
}

TwoCochain TwoCochain::gamma2(VarEnv::Ptr env) {
  return TwoCochain(env, 2, [](const VectorField& x, const VectorField& y) {
    return DiffOp::compose(DiffOp::mult_form(gamma1_form(x, y)),
                           DiffOp::d_operator(x.env()));
  });
}

TwoCochain TwoCochain::gamma2_tilde(VarEnv::Ptr env) {
  return TwoCochain(env, 2, [](const VectorField& x, const VectorField& y) {
    return DiffOp::mult_form(gamma2_tilde_form(x, y));
  });
}

TwoCochain TwoCochain::gamma3(VarEnv::Ptr env) {
  return TwoCochain(env, 3, [](const VectorField& x, const VectorField& y) {
    return DiffOp::compose(DiffOp::mult_form(gamma2_tilde_form(x, y)),
                           DiffOp::d_operator(x.env()));
  });
}

TwoCochain TwoCochain::restrict_to(int k) const {
  check_restrict_range(env_, shift_, k, "TwoCochain::restrict_to");
  Eval base = eval_;
  VarEnv::Ptr env = env_;
  return TwoCochain(env_, shift_, [base, env, k](const VectorField& x, const VectorField& y) {
    return DiffOp::compose(base(x, y), DiffOp::degree_projector(env, k));
  });
}

DiffOp ce_delta1(const OneCochain& c, const VectorField& x, const VectorField& y) {
  const DiffOp lx = lie_derivative(x);
  const DiffOp ly = lie_derivative(y);
  return DiffOp::commutator(lx, c(y)) - DiffOp::commutator(ly, c(x)) - c(bracket(x, y));
}

DiffOp ce_delta2(const TwoCochain& g, const VectorField& x, const VectorField& y,
                 const VectorField& z) {
  const DiffOp lx = lie_derivative(x);
  const DiffOp ly = lie_derivative(y);
  const DiffOp lz = lie_derivative(z);
  DiffOp out = DiffOp::commutator(lx, g(y, z));
  out -= DiffOp::commutator(ly, g(x, z));
  out += DiffOp::commutator(lz, g(x, y));
  out -= g(bracket(x, y), z);
  out += g(bracket(x, z), y);
  out -= g(bracket(y, z), x);
  return out;
}

DiffOp cup(const OneCochain& a, const OneCochain& b, const VectorField& x,
           const VectorField& y) {
  return DiffOp::commutator(a(x), b(y)) + DiffOp::commutator(b(x), a(y));
}

TwoCochain cup(const OneCochain& a, const OneCochain& b) {
  VarEnv::require_compatible(a.env(), b.env(), "cup");
  std::optional<int> shift;
  if (a.shift() && b.shift()) shift = *a.shift() + *b.shift();
  OneCochain ca = a, cb = b;
  return TwoCochain(a.env(), shift, [ca, cb](const VectorField& x, const VectorField& y) {
    return cup(ca, cb, x, y);
  });
}

TwoCochain coboundary(const OneCochain& b) {
  OneCochain c = b;
  return TwoCochain(b.env(), b.shift(), [c](const VectorField& x, const VectorField& y) {
    return ce_delta1(c, x, y);
  });
}

}  // namespace defo
