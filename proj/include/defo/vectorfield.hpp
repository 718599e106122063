#pragma once

#include <vector>

#include "defo/diffop.hpp"
#include "defo/poly.hpp"

namespace defo {

// Polynomial vector field X = X^1 d_1 + .. + X^n d_n. Components live in the
// spatial variables only; deformation parameters never enter a field.
class VectorField {
 public:
  VectorField(VarEnv::Ptr env, std::vector<Poly> components);

  // The monomial field x^alpha d_(axis+1).
  static VectorField monomial(VarEnv::Ptr env, const ExpVec& alpha, int axis);
  static VectorField zero(VarEnv::Ptr env);

  const VarEnv::Ptr& env() const { return env_; }
  const std::vector<Poly>& components() const { return comps_; }
  const Poly& component(int i) const { return comps_[static_cast<std::size_t>(i)]; }

  VectorField operator+(const VectorField& o) const;
  VectorField scaled(const Scalar& c) const;
  bool operator==(const VectorField& o) const;

  // Applies the field as a derivation to a scalar: sum_i X^i d_i f.
  Poly derive(const Poly& f) const;

 private:
  VarEnv::Ptr env_;
  std::vector<Poly> comps_;
};

// [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i.
VectorField bracket(const VectorField& x, const VectorField& y);

// Div(X) = sum_i d_i X^i.
Poly divergence(const VectorField& x);

// L_X = X^i dx_i + (d_j X^i) xi^j dxi_i as a normal-ordered operator;
// preserves every form degree.
DiffOp lie_derivative(const VectorField& x);

}  // namespace defo
