#pragma once

#include <map>
#include <memory>
#include <vector>

#include "defo/scalar.hpp"
#include "defo/varenv.hpp"

namespace defo {

// Exponent vector over the full variable environment (spatial then parameter
// slots). std::vector's lexicographic ordering doubles as the canonical term
// order.
using ExpVec = std::vector<int>;

// Sparse exact multivariate polynomial. No zero coefficient is ever stored;
// two equal polynomials have identical term maps.
class Poly {
 public:
  using TermMap = std::map<ExpVec, Scalar>;

  Poly() = default;
  explicit Poly(VarEnv::Ptr env) : env_(std::move(env)) {}

  static Poly zero(VarEnv::Ptr env) { return Poly(std::move(env)); }
  static Poly constant(VarEnv::Ptr env, const Scalar& c);
  static Poly variable(VarEnv::Ptr env, int var_index);
  static Poly monomial(VarEnv::Ptr env, const ExpVec& exps, const Scalar& c);

  const VarEnv::Ptr& env() const { return env_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term (zero if absent).
  Scalar constant_term() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly scaled(const Scalar& c) const;
  Poly pow(int e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Formal partial derivative with respect to spatial variable i (0-based).
  // Differentiating by a parameter variable is rejected.
  Poly partial(int spatial_index) const;

  // Simultaneous substitution. Keys are variable indices; a binding whose
  // replacement mentions the bound variable itself is rejected.
  Poly substitute(const std::map<int, Poly>& bindings) const;

  int total_degree() const;
  // Total degree counting only parameter-variable exponents.
  int param_degree() const;
  // The part whose parameter-degree equals d.
  Poly param_degree_part(int d) const;
  bool uses_param_vars() const;
  bool uses_spatial_vars() const;

  // Adds c * x^exps to this polynomial, erasing the term if it cancels.
  void add_term(const ExpVec& exps, const Scalar& c);

 private:
  void require_env() const {
    if (!env_) throw DomainError("Poly: missing variable environment");
  }

  VarEnv::Ptr env_;
  TermMap terms_;
};

}  // namespace defo
