#pragma once

#include <string>
#include <vector>

#include "defo/cochain.hpp"

namespace defo {

// The 4n deformation parameters: t0 has n+1 entries (k = 0..n), t1 and
// t1_tilde have n entries (k = 0..n-1), t2 has n-1 entries (k = 0..n-2).
// Entries are polynomials in the parameter variables only.
struct ParamAssignment {
  ParamAssignment(VarEnv::Ptr env, std::vector<Poly> t0, std::vector<Poly> t1,
                  std::vector<Poly> t1_tilde, std::vector<Poly> t2);

  static ParamAssignment zero(VarEnv::Ptr env);
  // Every parameter a distinct fresh symbol; returns the assignment together
  // with the extended environment it lives in. Names: t0_k, t1_k, t1t_k,
  // t2_k.
  static ParamAssignment symbolic(int n);

  int n() const { return env->n(); }
  int total_arity() const { return static_cast<int>(t0.size() + t1.size() + t1_tilde.size() + t2.size()); }

  VarEnv::Ptr env;
  std::vector<Poly> t0;
  std::vector<Poly> t1;
  std::vector<Poly> t1_tilde;
  std::vector<Poly> t2;
};

// The 4n-4 quadratic integrability relations.
struct RelationSet {
  std::vector<Poly> r1;        // n entries, k = 0..n-1
  std::vector<Poly> r2;        // n-1 entries
  std::vector<Poly> r2_tilde;  // n-1 entries
  std::vector<Poly> r3;        // n-2 entries

  int total_arity() const {
    return static_cast<int>(r1.size() + r2.size() + r2_tilde.size() + r3.size());
  }
  bool all_zero() const;
};

// First-order deformation term: sum over k of t0^k C_0^k + t1^k C_1^k +
// t1~^k C~_1^k + t2^k C_2^k.
OneCochain build_l1(const ParamAssignment& t);

// L_X plus the first-order term.
DiffOp deformed_action(const VectorField& x, const ParamAssignment& t);

// Homomorphism defect [L'_X, L'_Y] - L'_[X,Y]; exactly quadratic in the
// parameters.
DiffOp defect(const VectorField& x, const VectorField& y, const ParamAssignment& t);

// R_1^k = t0^k t1~^k + t0^{k+1} t1^k            (k = 0..n-1)
// R_2^k = t0^k t2^k + t1^{k+1} t1^k             (k = 0..n-2)
// R~_2^k = t0^{k+2} t2^k + t1~^{k+1} t1~^k      (k = 0..n-2)
// R_3^k = t1^{k+2} t2^k + t1~^k t2^{k+1}        (k = 0..n-3)
RelationSet relations(const ParamAssignment& t);

// One graded cell of the defect decomposition. For shift 1 and 3 there is a
// single gamma coefficient; shift 2 carries the (gamma_2, gamma~_2) pair.
struct Mc2Cell {
  int k = 0;
  int shift = 0;
  std::vector<Poly> coeffs;
  bool degenerate = false;  // gamma span collapsed for this pair
};

struct Mc2Result {
  std::vector<Mc2Cell> cells;
  DiffOp residual;
  bool any_degenerate = false;
};

// Expresses the defect blockwise in the span of the gamma cocycles for the
// given pair, by exact linear solves per block. The residual must vanish for
// non-degenerate pairs.
Mc2Result mc2_decompose(const VectorField& x, const VectorField& y, const ParamAssignment& t);

// Sign table entry comparing a measured mc2 coefficient against the matching
// relation polynomial: +1, -1, or 0 when the comparison is unavailable.
struct Mc2SignCell {
  int k = 0;
  int family = 0;  // 0: R1, 1: R2, 2: R2~, 3: R3
  int epsilon = 0;
};

// Measures the sign table for one pair; throws DomainError if a coefficient
// is not plus/minus the relation polynomial.
std::vector<Mc2SignCell> mc2_sign_table(const Mc2Result& r, const RelationSet& rel,
                                        const ParamAssignment& t);

// One component of the uniform 1-parameter system's solution variety.
struct UniformComponent {
  std::string name;         // parametrization label
  std::string description;  // human-readable parametrization
  bool matches_example61 = false;
  bool matches_example62 = false;
  bool discrepancy = false;  // not among the paper's two components
};

struct UniformSolution {
  int n = 0;
  bool r3_family_present = false;
  // The reduced generators of the uniform system, in a 4-parameter
  // environment (a0, a1, a1t, a2).
  std::vector<Poly> reduced_system;
  std::vector<UniformComponent> components;
};

// Substitutes the uniform ansatz t0^k = a0, t1^k = a1, t1~^k = a1t,
// t2^k = a2 into the relations and solves the resulting system by explicit
// case analysis.
UniformSolution solve_uniform(int n);

// Named example deformations with verification verdicts.
struct GalleryEntry {
  std::string name;
  bool applicable = true;  // example 6.4 exists only for n = 2
  bool relations_zero = false;
  bool defect_zero = false;
  int pairs_checked = 0;
  bool pass() const { return !applicable || (relations_zero && defect_zero); }
};

struct GalleryConfig {
  int monomial_degree = 3;
  int random_pairs = 10;
  int random_degree = 4;
  std::uint64_t seed = 1;
};

// Builds the example assignments for dimension n. Example 6.1: t0^k = t for
// all k; Example 6.2: t2^k = t; Example 6.4 (n = 2): the 3-parameter family;
// uniform-a0 / uniform-a2: the two uniform components.
ParamAssignment example_61(int n);
ParamAssignment example_62(int n);
ParamAssignment example_64();  // n = 2
std::vector<GalleryEntry> example_gallery(int n, const GalleryConfig& cfg);

}  // namespace defo
