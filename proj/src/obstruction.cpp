#include "defo/obstruction.hpp"

#include <algorithm>
#include <map>

#include "defo/coords.hpp"
#include "defo/expr_io.hpp"
#include "defo/random.hpp"

namespace defo {

std::string AnsatzEntry::label(const VarEnv& env) const {
  std::string s = "b[jet=" + print_spatial_monomial(jet, env);
  s += ";comp=" + std::to_string(comp + 1);
  OpKey key{xi, dx, dxi};
  s += ";op=" + print_opkey(key, env) + "]";
  return s;
}

AnsatzBasis enumerate_ansatz(const VarEnv::Ptr& env, int k, int shift, int s_max, int u_max) {
  const int n = env->n();
  if (k < 0 || k > n) throw DomainError("enumerate_ansatz: k outside 0..n");
  if (shift < 1 || shift > 3) throw DomainError("enumerate_ansatz: shift must be 1, 2 or 3");
  if (s_max < 0 || u_max < 0) throw DomainError("enumerate_ansatz: bounds must be >= 0");

  AnsatzBasis basis;
  basis.n = n;
  basis.k = k;
  basis.shift = shift;
  basis.s_max = s_max;
  basis.u_max = u_max;

  const auto jets = spatial_exponents_up_to(n, s_max);
  const auto dxs = spatial_exponents_up_to(n, u_max);
  const XiMask top = (XiMask{1} << n) - 1;
  for (const auto& jet : jets)
    for (int comp = 0; comp < n; ++comp)
      for (const auto& dx : dxs)
        for (XiMask a = 0; a <= top; ++a) {
          if (xi_degree(a) - shift < 0) continue;
          for (XiMask b = 0; b <= top; ++b) {
            if (xi_degree(a) - xi_degree(b) != shift) continue;
            AnsatzEntry e;
            e.jet = jet;
            e.comp = comp;
            e.xi = a;
            e.dx = dx;
            e.dxi = b;
            basis.entries.push_back(std::move(e));
          }
        }
  return basis;
}

DiffOp entry_operator(const VarEnv::Ptr& env, const AnsatzBasis& basis, const AnsatzEntry& e) {
  ExpVec dx(static_cast<std::size_t>(env->n()), 0);
  for (int i = 0; i < env->n() && i < static_cast<int>(e.dx.size()); ++i)
    dx[static_cast<std::size_t>(i)] = e.dx[static_cast<std::size_t>(i)];
  OpKey key{e.xi, dx, e.dxi};
  const DiffOp bare = DiffOp::from_term(env, key, Poly::constant(env, Scalar(1)));
  return DiffOp::compose(bare, DiffOp::degree_projector(env, basis.k));
}

namespace {

Poly jet_of(const VectorField& x, const AnsatzEntry& e) {
  Poly p = x.component(e.comp);
  for (std::size_t i = 0; i < e.jet.size() && !p.is_zero(); ++i)
    for (int r = 0; r < e.jet[i]; ++r) p = p.partial(static_cast<int>(i));
  return p;
}

std::string pair_label(const VectorField& x, const VectorField& y) {
  return "X=" + print_field(x) + ";Y=" + print_field(y);
}

// delta(b_e)(X,Y) for the elementary cochain b_e(Z) = jet_e(Z) * E_e, using
// [L_X, g E] = g [L_X, E] + (Xg) E.
DiffOp entry_delta(const DiffOp& E, const DiffOp& comm_x, const DiffOp& comm_y,
                   const VectorField& x, const VectorField& y, const VectorField& br,
                   const AnsatzEntry& e) {
  const Poly jx = jet_of(x, e);
  const Poly jy = jet_of(y, e);
  const Poly jbr = jet_of(br, e);
  DiffOp out = comm_x.scaled(jy) - comm_y.scaled(jx);
  out += E.scaled(x.derive(jy) - y.derive(jx) - jbr);
  return out;
}

std::vector<SparseRow> rows_for_pair(const VarEnv::Ptr& env, const AnsatzBasis& basis,
                                     const std::vector<DiffOp>& entry_ops,
                                     const std::vector<DiffOp>& comm_x,
                                     const std::vector<DiffOp>& comm_y, const VectorField& x,
                                     const VectorField& y, const DiffOp& target_value) {
  const VectorField br = bracket(x, y);
  std::map<OpCoord, SparseRow> rows;
  for (std::size_t e = 0; e < basis.entries.size(); ++e) {
    const DiffOp de =
        entry_delta(entry_ops[e], comm_x[e], comm_y[e], x, y, br, basis.entries[e]);
    for (const auto& [coord, value] : op_rational_coords(de))
      rows[coord].entries.emplace_back(static_cast<int>(e), value);
  }
  for (const auto& [coord, value] : op_rational_coords(target_value)) rows[coord].rhs = value;

  std::vector<SparseRow> out;
  const std::string pl = pair_label(x, y);
  for (auto& [coord, row] : rows) {
    row.label = pl + ";key=" + print_opkey(coord.first, *env) +
                ";mono=" + print_spatial_monomial(coord.second, *env);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

DiffOp entry_value(const VarEnv::Ptr& env, const AnsatzBasis& basis, const AnsatzEntry& e,
                   const VectorField& x) {
  return entry_operator(env, basis, e).scaled(jet_of(x, e));
}

LinearSystem assemble(const TwoCochain& target, const AnsatzBasis& basis,
                      const std::vector<FieldPair>& pairs) {
  const VarEnv::Ptr env = target.env();
  LinearSystem sys;
  sys.num_cols = static_cast<int>(basis.entries.size());
  for (const auto& e : basis.entries) sys.col_labels.push_back(e.label(*env));

  std::vector<DiffOp> entry_ops;
  entry_ops.reserve(basis.entries.size());
  for (const auto& e : basis.entries) entry_ops.push_back(entry_operator(env, basis, e));

  for (const auto& [x, y] : pairs) {
    const DiffOp lx = lie_derivative(x);
    const DiffOp ly = lie_derivative(y);
    std::vector<DiffOp> comm_x, comm_y;
    comm_x.reserve(entry_ops.size());
    comm_y.reserve(entry_ops.size());
    for (const auto& E : entry_ops) {
      comm_x.push_back(DiffOp::commutator(lx, E));
      comm_y.push_back(DiffOp::commutator(ly, E));
    }
    auto rows = rows_for_pair(env, basis, entry_ops, comm_x, comm_y, x, y, target(x, y));
    for (auto& r : rows) sys.rows.push_back(std::move(r));
  }
  return sys;
}

SolveOutcome solve_system(const LinearSystem& sys) { return solve(sys); }

std::vector<FieldPair> default_pair_family(const VarEnv::Ptr& env, int deg) {
  const auto fields = monomial_fields(env, deg);
  std::vector<FieldPair> pairs;
  for (std::size_t i = 0; i < fields.size(); ++i)
    for (std::size_t j = i + 1; j < fields.size(); ++j) pairs.emplace_back(fields[i], fields[j]);
  return pairs;
}

TwoCochain gamma_by_name(const VarEnv::Ptr& env, const std::string& name, int k) {
  if (name == "gamma1") return TwoCochain::gamma1(env).restrict_to(k);
  if (name == "gamma2") return TwoCochain::gamma2(env).restrict_to(k);
  if (name == "gamma2t") return TwoCochain::gamma2_tilde(env).restrict_to(k);
  if (name == "gamma3") return TwoCochain::gamma3(env).restrict_to(k);
  throw DomainError("unknown gamma cochain: " + name);
}

namespace {

// Shared streaming state over the monomial pair family with per-field
// commutator memoization.
struct PairStream {
  const VarEnv::Ptr& env;
  const AnsatzBasis& basis;
  std::vector<DiffOp> entry_ops;
  std::vector<VectorField> fields;
  std::vector<DiffOp> lie;
  std::vector<std::vector<DiffOp>> comms;  // per field, lazily filled
  std::vector<char> have_comms;

  PairStream(const VarEnv::Ptr& env_, const AnsatzBasis& basis_, int pair_degree)
      : env(env_), basis(basis_) {
    entry_ops.reserve(basis.entries.size());
    for (const auto& e : basis.entries) entry_ops.push_back(entry_operator(env, basis, e));
    fields = monomial_fields(env, pair_degree);
    lie.reserve(fields.size());
    for (const auto& f : fields) lie.push_back(lie_derivative(f));
    comms.resize(fields.size());
    have_comms.assign(fields.size(), 0);
  }

  const std::vector<DiffOp>& comms_for(std::size_t fi) {
    if (!have_comms[fi]) {
      auto& vec = comms[fi];
      vec.reserve(entry_ops.size());
      for (const auto& E : entry_ops) vec.push_back(DiffOp::commutator(lie[fi], E));
      have_comms[fi] = 1;
    }
    return comms[fi];
  }

  int total_pairs() const {
    const auto f = fields.size();
    return static_cast<int>(f * (f - 1) / 2);
  }
};

}  // namespace

CellVerdict probe_cell(const VarEnv::Ptr& env, const std::string& gamma_name, int k, int shift,
                       int s_max, int u_max) {
  CellVerdict v;
  v.gamma = gamma_name;
  v.k = k;
  v.shift = shift;
  v.s_max = s_max;
  v.u_max = u_max;

  const AnsatzBasis basis = enumerate_ansatz(env, k, shift, s_max, u_max);
  v.basis_size = static_cast<int>(basis.entries.size());
  const TwoCochain target = gamma_by_name(env, gamma_name, k);

  PairStream stream(env, basis, s_max + 2);
  v.pairs_total = stream.total_pairs();
  EliminationSolver solver(v.basis_size);

  // Once a subsystem is inconsistent the full family stays inconsistent, so
  // the scan stops at the first contradiction.
  for (std::size_t i = 0; i < stream.fields.size() && !solver.contradiction_found(); ++i) {
    for (std::size_t j = i + 1; j < stream.fields.size() && !solver.contradiction_found(); ++j) {
      const VectorField& x = stream.fields[i];
      const VectorField& y = stream.fields[j];
      auto rows = rows_for_pair(env, basis, stream.entry_ops, stream.comms_for(i),
                                stream.comms_for(j), x, y, target(x, y));
      ++v.pairs_processed;
      for (const auto& r : rows) {
        ++v.rows_used;
        if (solver.add_row(r) == EliminationSolver::RowStatus::Contradiction) break;
      }
    }
  }

  if (solver.contradiction_found()) {
    v.not_a_coboundary = true;
    v.certificate = solver.certificate();
    v.certificate_rows = solver.stored_originals();
  } else {
    v.coboundary_found = true;
    v.kernel_dim = solver.kernel_dim();
  }
  return v;
}

IndependenceVerdict probe_independence(const VarEnv::Ptr& env, int k, int s_max, int u_max) {
  IndependenceVerdict v;
  v.k = k;
  v.s_max = s_max;
  v.u_max = u_max;

  const AnsatzBasis basis = enumerate_ansatz(env, k, 2, s_max, u_max);
  v.basis_size = static_cast<int>(basis.entries.size());
  const TwoCochain g2 = gamma_by_name(env, "gamma2", k);
  const TwoCochain g2t = gamma_by_name(env, "gamma2t", k);

  PairStream stream(env, basis, s_max + 2);
  v.pairs_total = stream.total_pairs();
  const int col_c2 = v.basis_size;
  const int col_c2t = v.basis_size + 1;
  EliminationSolver solver(v.basis_size + 2);

  // Homogeneous system delta(b) - c2 gamma2 - c2t gamma2t = 0; stop once
  // the reduced system pins c2 = c2t = 0 (additional rows keep it pinned).
  auto forced = [&]() {
    return solver.column_forced_zero(col_c2) && solver.column_forced_zero(col_c2t);
  };
  for (std::size_t i = 0; i < stream.fields.size() && !forced(); ++i) {
    for (std::size_t j = i + 1; j < stream.fields.size() && !forced(); ++j) {
      const VectorField& x = stream.fields[i];
      const VectorField& y = stream.fields[j];
      auto rows = rows_for_pair(env, basis, stream.entry_ops, stream.comms_for(i),
                                stream.comms_for(j), x, y, DiffOp::zero(env));
      // rows currently carry rhs 0; subtract the gamma columns.
      std::map<OpCoord, std::pair<Scalar, Scalar>> gcols;
      for (const auto& [coord, val] : op_rational_coords(g2(x, y))) gcols[coord].first = val;
      for (const auto& [coord, val] : op_rational_coords(g2t(x, y))) gcols[coord].second = val;
      std::map<std::string, SparseRow> by_label;
      for (auto& r : rows) by_label.emplace(r.label, std::move(r));
      const std::string pl = pair_label(x, y);
      for (const auto& [coord, pairv] : gcols) {
        const std::string label = pl + ";key=" + print_opkey(coord.first, *env) +
                                  ";mono=" + print_spatial_monomial(coord.second, *env);
        auto it = by_label.find(label);
        if (it == by_label.end()) {
          SparseRow r;
          r.label = label;
          by_label.emplace(label, std::move(r));
          it = by_label.find(label);
        }
        if (!pairv.first.is_zero()) it->second.entries.emplace_back(col_c2, -pairv.first);
        if (!pairv.second.is_zero()) it->second.entries.emplace_back(col_c2t, -pairv.second);
      }
      ++v.pairs_processed;
      for (auto& [label, r] : by_label) solver.add_row(r);
    }
  }
  v.independent = forced();
  return v;
}

bool NontrivialityReport::all_nontrivial() const {
  for (const auto& c : cells)
    if (!c.not_a_coboundary) return false;
  for (const auto& ind : independence)
    if (!ind.independent) return false;
  return true;
}

NontrivialityReport nontriviality_report(int n, int s_max, int u_max) {
  if (n < 2) throw DomainError("nontriviality_report: n must be >= 2");
  NontrivialityReport rep;
  rep.n = n;
  rep.s_max = s_max;
  rep.u_max = u_max;
  VarEnv::Ptr env = VarEnv::make(n);
  for (int k = 0; k + 1 <= n; ++k)
    rep.cells.push_back(probe_cell(env, "gamma1", k, 1, s_max, u_max));
  for (int k = 0; k + 2 <= n; ++k) {
    rep.cells.push_back(probe_cell(env, "gamma2", k, 2, s_max, u_max));
    rep.cells.push_back(probe_cell(env, "gamma2t", k, 2, s_max, u_max));
    rep.independence.push_back(probe_independence(env, k, s_max, u_max));
  }
  for (int k = 0; k + 3 <= n; ++k)
    rep.cells.push_back(probe_cell(env, "gamma3", k, 3, s_max, u_max));
  return rep;
}

}  // namespace defo
