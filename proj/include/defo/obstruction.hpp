#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "defo/cochain.hpp"
#include "defo/linsolve.hpp"

namespace defo {

// One elementary constant-coefficient 1-cochain:
//   b(X) = (d^s X^comp / dx^jet) xi^A dx^tau dxi^B,
// acting on forms of degree k (the degree projection is composed in when the
// entry is evaluated).
struct AnsatzEntry {
  ExpVec jet;  // spatial multi-index, |jet| = s
  int comp = 0;
  XiMask xi = 0;
  ExpVec dx;  // spatial multi-index, |dx| = u
  XiMask dxi = 0;

  std::string label(const VarEnv& env) const;
};

struct AnsatzBasis {
  int n = 0;
  int k = 0;
  int shift = 0;
  int s_max = 0;
  int u_max = 0;
  std::vector<AnsatzEntry> entries;
};

// All index combinations with jet order <= s_max, derivative order <= u_max
// and |A| - |B| = shift, in a fixed deterministic order. Jet orders 0 and 1
// are included.
AnsatzBasis enumerate_ansatz(const VarEnv::Ptr& env, int k, int shift, int s_max, int u_max);

// The entry's operator factor xi^A dx^tau dxi^B composed with the degree-k
// projection.
DiffOp entry_operator(const VarEnv::Ptr& env, const AnsatzBasis& basis, const AnsatzEntry& e);
// The entry evaluated on a field: mult(jet of X) . entry_operator.
DiffOp entry_value(const VarEnv::Ptr& env, const AnsatzBasis& basis, const AnsatzEntry& e,
                   const VectorField& x);

using FieldPair = std::pair<VectorField, VectorField>;

// Expands delta(b)(X,Y) = target(X,Y) into scalar equations, one per
// (operator key, spatial monomial) coordinate per pair. Unknowns are the
// ansatz coefficients.
LinearSystem assemble(const TwoCochain& target, const AnsatzBasis& basis,
                      const std::vector<FieldPair>& pairs);

SolveOutcome solve_system(const LinearSystem& sys);

// The default pair family: ordered monomial pairs (x^a d_i, x^b d_j) with
// |a|,|b| <= deg. Pairs with X = Y contribute only zero rows and the (Y,X)
// half only sign-flipped duplicates, so the returned list keeps one
// representative per unordered pair; verdicts over it coincide with
// verdicts over the full ordered family.
std::vector<FieldPair> default_pair_family(const VarEnv::Ptr& env, int deg);

struct CellVerdict {
  std::string gamma;  // "gamma1", "gamma2", "gamma2t", "gamma3"
  int k = 0;
  int shift = 0;
  int s_max = 0;
  int u_max = 0;
  int basis_size = 0;
  int pairs_processed = 0;
  int pairs_total = 0;
  int rows_used = 0;
  bool not_a_coboundary = false;  // inconsistent system
  bool coboundary_found = false;  // consistent over the whole family
  int kernel_dim = 0;
  Certificate certificate;
  std::vector<SparseRow> certificate_rows;
};

// Streams the pair family into the solver, stopping at the first
// inconsistency (more rows can only preserve it).
CellVerdict probe_cell(const VarEnv::Ptr& env, const std::string& gamma_name, int k, int shift,
                       int s_max, int u_max);

struct IndependenceVerdict {
  int k = 0;
  int s_max = 0;
  int u_max = 0;
  int basis_size = 0;
  int pairs_processed = 0;
  int pairs_total = 0;
  bool independent = false;  // only (0,0) makes c2*g2 + c2t*g2t a coboundary
};

// Probes whether c2*gamma2^k + c2t*gamma2t^k = delta(b) forces
// (c2, c2t) = (0, 0) within the bounded ansatz.
IndependenceVerdict probe_independence(const VarEnv::Ptr& env, int k, int s_max, int u_max);

struct NontrivialityReport {
  int n = 0;
  int s_max = 0;
  int u_max = 0;
  std::vector<CellVerdict> cells;
  std::vector<IndependenceVerdict> independence;
  bool all_nontrivial() const;
};

// Verdicts for every gamma cell in the valid ranges: gamma1 for k <= n-1,
// gamma2/gamma2t for k <= n-2, gamma3 for k <= n-3 (n >= 3 only), plus the
// shift-2 independence probes.
NontrivialityReport nontriviality_report(int n, int s_max, int u_max);

// Builds the named gamma cochain restricted to degree k.
TwoCochain gamma_by_name(const VarEnv::Ptr& env, const std::string& name, int k);

}  // namespace defo
