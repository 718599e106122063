#pragma once

#include <map>
#include <string>
#include <vector>

#include "defo/scalar.hpp"

namespace defo {

// One sparse equation: sum_j entries[j] * x_col = rhs.
struct SparseRow {
  std::vector<std::pair<int, Scalar>> entries;  // sorted by column, nonzero
  Scalar rhs;
  std::string label;
};

struct LinearSystem {
  int num_cols = 0;
  std::vector<std::string> col_labels;
  std::vector<SparseRow> rows;
};

// Row combination witnessing 0 = nonzero; coefficients refer to original
// rows by label.
struct Certificate {
  std::vector<std::pair<std::string, Scalar>> combination;
};

// Online exact Gauss-Jordan elimination over the rationals. Pivot rows are
// kept fully reduced and normalized to primitive integer vectors, and every
// pivot remembers the combination of original rows it came from, so an
// inconsistency yields a replayable certificate.
class EliminationSolver {
 public:
  explicit EliminationSolver(int num_cols) : num_cols_(num_cols) {}

  enum class RowStatus { Redundant, NewPivot, Contradiction };

  RowStatus add_row(const SparseRow& row);

  bool contradiction_found() const { return contradiction_; }
  const Certificate& certificate() const { return certificate_; }

  int rank() const { return static_cast<int>(pivots_.size()); }
  int kernel_dim() const { return num_cols_ - rank(); }

  // Particular solution with free variables set to zero. Requires no
  // contradiction.
  std::vector<Scalar> particular_solution() const;
  // Basis of the homogeneous kernel, one vector per free column.
  std::vector<std::vector<Scalar>> kernel_basis() const;
  // True when every kernel vector vanishes at this column.
  bool column_forced_zero(int col) const;

  // Originals of rows referenced by pivot combinations (and the
  // contradiction row), for certificate replay.
  const std::vector<SparseRow>& stored_originals() const { return originals_; }

 private:
  struct PivotRow {
    std::map<int, Scalar> entries;  // includes rhs at virtual column num_cols_
    std::map<int, Scalar> combo;    // original-row index -> coefficient
  };

  void normalize(PivotRow& row) const;

  int num_cols_;
  std::map<int, PivotRow> pivots_;  // keyed by pivot column
  std::vector<SparseRow> originals_;
  bool contradiction_ = false;
  Certificate certificate_;
};

struct SolveOutcome {
  bool consistent = false;
  std::vector<Scalar> solution;  // when consistent
  int kernel_dim = 0;
  Certificate certificate;            // when inconsistent
  std::vector<SparseRow> cert_rows;   // originals for replay
};

SolveOutcome solve(const LinearSystem& sys);

// Recomputes the certificate combination against original rows: all columns
// must cancel and the rhs must not.
bool verify_certificate(const Certificate& cert, const std::vector<SparseRow>& rows);

}  // namespace defo
