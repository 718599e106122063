#pragma once

#include <map>

#include "defo/poly.hpp"
#include "defo/xi.hpp"

namespace defo {

// Differential form: finite sum of Poly coefficients times xi-monomials,
// graded by xi-degree. Zero coefficients are never stored.
class Form {
 public:
  using TermMap = std::map<XiMask, Poly>;

  Form() = default;
  explicit Form(VarEnv::Ptr env) : env_(std::move(env)) {}

  static Form zero(VarEnv::Ptr env) { return Form(std::move(env)); }
  static Form from_poly(const Poly& p);
  static Form xi(VarEnv::Ptr env, int index1);
  static Form monomial(XiMask mask, const Poly& coeff);

  const VarEnv::Ptr& env() const { return env_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Form operator+(const Form& o) const;
  Form operator-(const Form& o) const;
  Form operator-() const;
  Form& operator+=(const Form& o);
  Form scaled(const Scalar& c) const;
  Form scaled(const Poly& p) const;
  bool operator==(const Form& o) const;
  bool operator!=(const Form& o) const { return !(*this == o); }

  Form wedge(const Form& o) const;
  // De Rham differential, d(f xi^A) = sum_i (d_i f) xi^i ^ xi^A.
  Form de_rham() const;

  // Restriction to xi-degree k.
  Form degree_part(int k) const;
  // True when every monomial has xi-degree k (the zero form is homogeneous
  // of every degree).
  bool homogeneous_of_degree(int k) const;
  int max_degree() const;

  void add_term(XiMask mask, const Poly& coeff);

 private:
  VarEnv::Ptr env_;
  TermMap terms_;
};

}  // namespace defo
