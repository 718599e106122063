#include "defo/linsolve.hpp"

#include <algorithm>

namespace defo {

void EliminationSolver::normalize(PivotRow& row) const {
  // Scale to a primitive integer vector with positive leading entry.
  mpz_class den(1);
  for (const auto& [c, v] : row.entries) den = lcm(den, v.denominator());
  mpz_class num(0);
  for (const auto& [c, v] : row.entries) num = gcd(num, mpz_class(v.numerator() * (den / v.denominator())));
  if (num == 0) return;
  Scalar factor((mpq_class(den) / mpq_class(num)));
  auto lead = row.entries.begin();
  if (lead != row.entries.end() && (lead->second * factor).sign() < 0) factor = -factor;
  for (auto& [c, v] : row.entries) v *= factor;
  for (auto& [c, v] : row.combo) v *= factor;
}

EliminationSolver::RowStatus EliminationSolver::add_row(const SparseRow& row) {
  if (contradiction_) return RowStatus::Redundant;

  PivotRow work;
  for (const auto& [c, v] : row.entries)
    if (!v.is_zero()) work.entries[c] = v;
  if (!row.rhs.is_zero()) work.entries[num_cols_] = row.rhs;
  const int own_id = static_cast<int>(originals_.size());
  work.combo[own_id] = Scalar(1);

  // Reduce against existing pivots.
  for (auto& [col, pivot] : pivots_) {
    auto it = work.entries.find(col);
    if (it == work.entries.end()) continue;
    const Scalar factor = it->second / pivot.entries.at(col);
    for (const auto& [c, v] : pivot.entries) {
      auto wit = work.entries.find(c);
      if (wit == work.entries.end()) {
        work.entries.emplace(c, -(factor * v));
      } else {
        wit->second -= factor * v;
        if (wit->second.is_zero()) work.entries.erase(wit);
      }
    }
    for (const auto& [rid, v] : pivot.combo) {
      auto cit = work.combo.find(rid);
      if (cit == work.combo.end()) {
        work.combo.emplace(rid, -(factor * v));
      } else {
        cit->second -= factor * v;
        if (cit->second.is_zero()) work.combo.erase(cit);
      }
    }
  }

  const bool only_rhs =
      work.entries.size() == 1 && work.entries.begin()->first == num_cols_;
  if (work.entries.empty()) return RowStatus::Redundant;

  if (only_rhs) {
    originals_.push_back(row);
    contradiction_ = true;
    certificate_.combination.clear();
    for (const auto& [rid, v] : work.combo)
      certificate_.combination.emplace_back(originals_[static_cast<std::size_t>(rid)].label, v);
    return RowStatus::Contradiction;
  }

  // New pivot at the lowest remaining column; keep earlier pivots fully
  // reduced against it.
  const int pcol = work.entries.begin()->first;
  normalize(work);
  originals_.push_back(row);
  for (auto& [col, pivot] : pivots_) {
    auto it = pivot.entries.find(pcol);
    if (it == pivot.entries.end()) continue;
    const Scalar factor = it->second / work.entries.at(pcol);
    for (const auto& [c, v] : work.entries) {
      auto pit = pivot.entries.find(c);
      if (pit == pivot.entries.end()) {
        pivot.entries.emplace(c, -(factor * v));
      } else {
        pit->second -= factor * v;
        if (pit->second.is_zero()) pivot.entries.erase(pit);
      }
    }
    for (const auto& [rid, v] : work.combo) {
      auto cit = pivot.combo.find(rid);
      if (cit == pivot.combo.end()) {
        pivot.combo.emplace(rid, -(factor * v));
      } else {
        cit->second -= factor * v;
        if (cit->second.is_zero()) pivot.combo.erase(cit);
      }
    }
    normalize(pivot);
  }
  pivots_.emplace(pcol, std::move(work));
  return RowStatus::NewPivot;
}

std::vector<Scalar> EliminationSolver::particular_solution() const {
  std::vector<Scalar> x(static_cast<std::size_t>(num_cols_), Scalar(0));
  for (const auto& [col, pivot] : pivots_) {
    auto rit = pivot.entries.find(num_cols_);
    if (rit == pivot.entries.end()) continue;
    x[static_cast<std::size_t>(col)] = rit->second / pivot.entries.at(col);
  }
  return x;
}

std::vector<std::vector<Scalar>> EliminationSolver::kernel_basis() const {
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < num_cols_; ++f) {
    if (pivots_.count(f)) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(num_cols_), Scalar(0));
    v[static_cast<std::size_t>(f)] = Scalar(1);
    for (const auto& [col, pivot] : pivots_) {
      auto it = pivot.entries.find(f);
      if (it != pivot.entries.end())
        v[static_cast<std::size_t>(col)] = -(it->second / pivot.entries.at(col));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool EliminationSolver::column_forced_zero(int col) const {
  auto it = pivots_.find(col);
  if (it == pivots_.end()) return false;  // free column: kernel moves it
  // Fully reduced pivot row: nonzero only at its pivot column and free
  // columns; forced zero iff no free column appears.
  for (const auto& [c, v] : it->second.entries) {
    (void)v;
    if (c != col && c != num_cols_) return false;
  }
  return true;
}

SolveOutcome solve(const LinearSystem& sys) {
  EliminationSolver solver(sys.num_cols);
  for (const auto& row : sys.rows) {
    if (solver.add_row(row) == EliminationSolver::RowStatus::Contradiction) break;
  }
  SolveOutcome out;
  if (solver.contradiction_found()) {
    out.consistent = false;
    out.certificate = solver.certificate();
    out.cert_rows = solver.stored_originals();
  } else {
    out.consistent = true;
    out.solution = solver.particular_solution();
    out.kernel_dim = solver.kernel_dim();
  }
  return out;
}

bool verify_certificate(const Certificate& cert, const std::vector<SparseRow>& rows) {
  std::map<int, Scalar> acc;
  Scalar rhs(0);
  for (const auto& [label, coeff] : cert.combination) {
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const SparseRow& r) { return r.label == label; });
    if (it == rows.end()) return false;
    for (const auto& [c, v] : it->entries) {
      auto ait = acc.find(c);
      if (ait == acc.end()) {
        acc.emplace(c, coeff * v);
      } else {
        ait->second += coeff * v;
        if (ait->second.is_zero()) acc.erase(ait);
      }
    }
    rhs += coeff * it->rhs;
  }
  return acc.empty() && !rhs.is_zero();
}

}  // namespace defo
