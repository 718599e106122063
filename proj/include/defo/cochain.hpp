#pragma once

#include <functional>
#include <optional>

#include "defo/diffop.hpp"
#include "defo/vectorfield.hpp"

namespace defo {

// 1-cochain on vector fields with operator values, represented as a closed
// combinator expression. Named constructors build the divergence cocycles;
// linear combinations may carry parameter-polynomial coefficients.
class OneCochain {
 public:
  using Eval = std::function<DiffOp(const VectorField&)>;

  OneCochain(VarEnv::Ptr env, std::optional<int> shift, Eval eval)
      : env_(std::move(env)), shift_(shift), eval_(std::move(eval)) {}

  // C_0(X) = multiplication by Div X (degree shift 0).
  static OneCochain c0(VarEnv::Ptr env);
  // C_1(X) = d . Div X (shift +1).
  static OneCochain c1(VarEnv::Ptr env);
  // C~_1(X) = Div X . d (shift +1).
  static OneCochain c1_tilde(VarEnv::Ptr env);
  // C_2(X) = d . Div X . d (shift +2).
  static OneCochain c2(VarEnv::Ptr env);
  static OneCochain zero(VarEnv::Ptr env);

  DiffOp operator()(const VectorField& x) const { return eval_(x); }

  const VarEnv::Ptr& env() const { return env_; }
  std::optional<int> shift() const { return shift_; }

  // Restriction to source degree k (the paper-style graded cochain): composes
  // the value with the degree-k projection. k must lie in 0..n-shift.
  OneCochain restrict_to(int k) const;

  OneCochain scaled(const Poly& coeff) const;
  OneCochain operator+(const OneCochain& o) const;

 private:
  VarEnv::Ptr env_;
  std::optional<int> shift_;
  Eval eval_;
};

// Antisymmetric 2-cochain with operator values.
class TwoCochain {
 public:
  using Eval = std::function<DiffOp(const VectorField&, const VectorField&)>;

  TwoCochain(VarEnv::Ptr env, std::optional<int> shift, Eval eval)
      : env_(std::move(env)), shift_(shift), eval_(std::move(eval)) {}

  // gamma_1(X,Y) = (Div X d(Div Y) - Div Y d(Div X)) ^  (shift +1).
  static TwoCochain gamma1(VarEnv::Ptr env);
  // gamma_2(X,Y) = same 1-form wedged, then composed after d (shift +2).
  static TwoCochain gamma2(VarEnv::Ptr env);
  // gamma~_2(X,Y) = (d Div X ^ d Div Y - d Div Y ^ d Div X) ^  (shift +2).
  static TwoCochain gamma2_tilde(VarEnv::Ptr env);
  // gamma_3(X,Y) = that 2-form wedged after d (shift +3).
  static TwoCochain gamma3(VarEnv::Ptr env);

  DiffOp operator()(const VectorField& x, const VectorField& y) const { return eval_(x, y); }

  const VarEnv::Ptr& env() const { return env_; }
  std::optional<int> shift() const { return shift_; }

  TwoCochain restrict_to(int k) const;

 private:
  VarEnv::Ptr env_;
  std::optional<int> shift_;
  Eval eval_;
};

// The wedge factors of the obstruction cocycles.
Form gamma1_form(const VectorField& x, const VectorField& y);
Form gamma2_tilde_form(const VectorField& x, const VectorField& y);

// Chevalley-Eilenberg differential on 1-cochains:
// (delta c)(X,Y) = [L_X, c(Y)] - [L_Y, c(X)] - c([X,Y]).
DiffOp ce_delta1(const OneCochain& c, const VectorField& x, const VectorField& y);

// Chevalley-Eilenberg differential on 2-cochains (standard convention,
// chosen so that delta . delta = 0 against ce_delta1):
// (delta g)(X,Y,Z) = [L_X, g(Y,Z)] - [L_Y, g(X,Z)] + [L_Z, g(X,Y)]
//                    - g([X,Y],Z) + g([X,Z],Y) - g([Y,Z],X).
DiffOp ce_delta2(const TwoCochain& g, const VectorField& x, const VectorField& y,
                 const VectorField& z);

// Cup product of 1-cochains: [a(X), b(Y)] + [b(X), a(Y)].
DiffOp cup(const OneCochain& a, const OneCochain& b, const VectorField& x,
           const VectorField& y);
TwoCochain cup(const OneCochain& a, const OneCochain& b);

// Wraps a 1-cochain as the 2-cochain delta(b); used by the obstruction
// round-trip checks.
TwoCochain coboundary(const OneCochain& b);

}  // namespace defo
