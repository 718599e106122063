#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "defo/form.hpp"
#include "defo/poly.hpp"
#include "defo/xi.hpp"

namespace defo {

// Key of a normal-ordered operator term: left xi-factor, commuting derivative
// exponents over the spatial variables, odd derivative factor. The normal
// order is fixed as coeff * xi^A * dx^beta * dxi^B.
struct OpKey {
  XiMask xi = 0;
  ExpVec dx;  // length n, spatial slots only
  XiMask dxi = 0;

  // xi-degree shift of the term.
  int shift() const { return xi_degree(xi) - xi_degree(dxi); }
  int dx_order() const {
    int s = 0;
    for (int e : dx) s += e;
    return s;
  }

  bool operator<(const OpKey& o) const {
    return std::tie(xi, dx, dxi) < std::tie(o.xi, o.dx, o.dxi);
  }
  bool operator==(const OpKey& o) const {
    return xi == o.xi && dx == o.dx && dxi == o.dxi;
  }
};

// Normal-ordered differential operator on forms. The normal form over the
// monomial basis xi^A dx^beta dxi^B is unique, so equality of term maps is
// equality of operators.
class DiffOp {
 public:
  using TermMap = std::map<OpKey, Poly>;

  DiffOp() = default;
  explicit DiffOp(VarEnv::Ptr env) : env_(std::move(env)) {}

  static DiffOp zero(VarEnv::Ptr env) { return DiffOp(std::move(env)); }
  static DiffOp identity(VarEnv::Ptr env);
  // Multiplication by a polynomial (a 0-form).
  static DiffOp mult_poly(const Poly& p);
  // Left wedge multiplication by a form.
  static DiffOp mult_form(const Form& w);
  static DiffOp xi_op(VarEnv::Ptr env, int index1);
  static DiffOp dx_op(VarEnv::Ptr env, int index1);
  static DiffOp dxi_op(VarEnv::Ptr env, int index1);
  static DiffOp from_term(VarEnv::Ptr env, const OpKey& key, const Poly& coeff);
  // The de Rham differential sum_i xi^i dx_i as an operator.
  static DiffOp d_operator(VarEnv::Ptr env);
  // Degree-counting operator N = sum_i xi^i dxi_i.
  static DiffOp degree_number(VarEnv::Ptr env);
  // Projection onto xi-degree k, the Lagrange polynomial in N through the
  // degrees 0..n.
  static DiffOp degree_projector(VarEnv::Ptr env, int k);

  const VarEnv::Ptr& env() const { return env_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  DiffOp operator+(const DiffOp& o) const;
  DiffOp operator-(const DiffOp& o) const;
  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp scaled(const Scalar& c) const;
  // Multiplies every coefficient by p. Equals compose(mult_poly(p), *this)
  // because coefficients sit leftmost in the normal order.
  DiffOp scaled(const Poly& p) const;
  bool operator==(const DiffOp& o) const;
  bool operator!=(const DiffOp& o) const { return !(*this == o); }

  // Normal-ordered product: apply(compose(a,b), w) = apply(a, apply(b, w)).
  static DiffOp compose(const DiffOp& a, const DiffOp& b);
  static DiffOp compose(const DiffOp& a, const DiffOp& b, const DiffOp& c);
  static DiffOp commutator(const DiffOp& a, const DiffOp& b);

  Form apply(const Form& w) const;

  // Block D^{k,l}: agrees with this operator followed by projection to
  // degree l on degree-k input, vanishes on other homogeneous degrees.
  DiffOp graded_block(int k, int l) const;

  // Term filter keeping xi-degree shift s only.
  DiffOp shift_part(int s) const;
  int min_shift() const;
  int max_shift() const;
  // Largest parameter degree over all coefficients.
  int param_degree() const;
  DiffOp param_degree_part(int d) const;
  DiffOp substitute(const std::map<int, Poly>& bindings) const;

  void add_term(const OpKey& key, const Poly& coeff);

 private:
  VarEnv::Ptr env_;
  TermMap terms_;
};

namespace detail {

// One factor of an operator word. Composition is implemented by rewriting
// words of these atoms into normal order; the only sign-bearing rules are
// the even Leibniz rule dx_i . f = f . dx_i + (d_i f), the odd Leibniz rule
// dxi_i . xi^j = delta_ij - xi^j . dxi_i, and the anticommutation of equal-
// kind odd atoms. Every other sign in the library derives from these.
struct Atom {
  enum class Kind { Coef, Xi, Dx, Dxi };
  Kind kind;
  int index = 0;  // 1-based for Xi/Dxi, 0-based spatial for Dx
  Poly coef;      // Kind::Coef only
};

// Reference normal ordering of an arbitrary atom word. Exponential in word
// length; used as the composition oracle and to build the Grassmann
// contraction table.
DiffOp normal_order_word(const VarEnv::Ptr& env, std::vector<Atom> word);

// Fully general reference composition via word rewriting (slow path).
DiffOp compose_reference(const DiffOp& a, const DiffOp& b);

}  // namespace detail

}  // namespace defo
