#include "defo/vectorfield.hpp"

namespace defo {

VectorField::VectorField(VarEnv::Ptr env, std::vector<Poly> components)
    : env_(std::move(env)), comps_(std::move(components)) {
  if (comps_.size() != static_cast<std::size_t>(env_->n()))
    throw DomainError("VectorField: expected exactly n components");
  for (const auto& c : comps_) {
    VarEnv::require_compatible(env_, c.env(), "VectorField");
    if (c.uses_param_vars())
      throw DomainError("VectorField: components must not contain parameter variables");
  }
}

VectorField VectorField::monomial(VarEnv::Ptr env, const ExpVec& alpha, int axis) {
  const int n = env->n();
  if (axis < 0 || axis >= n) throw DomainError("VectorField::monomial: axis out of range");
  ExpVec full(static_cast<std::size_t>(env->var_count()), 0);
  for (int i = 0; i < n && i < static_cast<int>(alpha.size()); ++i)
    full[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)];
  std::vector<Poly> comps(static_cast<std::size_t>(n), Poly::zero(env));
  comps[static_cast<std::size_t>(axis)] = Poly::monomial(env, full, Scalar(1));
  return VectorField(env, std::move(comps));
}

VectorField VectorField::zero(VarEnv::Ptr env) {
  std::vector<Poly> comps(static_cast<std::size_t>(env->n()), Poly::zero(env));
  return VectorField(std::move(env), std::move(comps));
}

VectorField VectorField::operator+(const VectorField& o) const {
  VarEnv::require_compatible(env_, o.env_, "VectorField::operator+");
  std::vector<Poly> comps;
  comps.reserve(comps_.size());
  for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i] + o.comps_[i]);
  return VectorField(env_, std::move(comps));
}

VectorField VectorField::scaled(const Scalar& c) const {
  std::vector<Poly> comps;
  comps.reserve(comps_.size());
  for (const auto& p : comps_) comps.push_back(p.scaled(c));
  return VectorField(env_, std::move(comps));
}

bool VectorField::operator==(const VectorField& o) const {
  VarEnv::require_compatible(env_, o.env_, "VectorField::operator==");
  return comps_ == o.comps_;
}

Poly VectorField::derive(const Poly& f) const {
  Poly out = Poly::zero(env_);
  for (int i = 0; i < env_->n(); ++i) out += comps_[static_cast<std::size_t>(i)] * f.partial(i);
  return out;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  VarEnv::require_compatible(x.env(), y.env(), "bracket");
  const int n = x.env()->n();
  std::vector<Poly> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    comps.push_back(x.derive(y.component(i)) - y.derive(x.component(i)));
  return VectorField(x.env(), std::move(comps));
}

Poly divergence(const VectorField& x) {
  Poly out = Poly::zero(x.env());
  for (int i = 0; i < x.env()->n(); ++i) out += x.component(i).partial(i);
  return out;
}

DiffOp lie_derivative(const VectorField& x) {
  const VarEnv::Ptr& env = x.env();
  const int n = env->n();
  DiffOp op(env);
  for (int i = 0; i < n; ++i) {
    OpKey key;
    key.dx.assign(static_cast<std::size_t>(n), 0);
    key.dx[static_cast<std::size_t>(i)] = 1;
    op.add_term(key, x.component(i));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Poly jac = x.component(i).partial(j);
      if (jac.is_zero()) continue;
      OpKey key;
      key.xi = xi_single(j + 1);
      key.dx.assign(static_cast<std::size_t>(n), 0);
      key.dxi = xi_single(i + 1);
      op.add_term(key, jac);
    }
  }
  return op;
}

}  // namespace defo
