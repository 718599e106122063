#include "defo/coords.hpp"

namespace defo {

std::map<ExpVec, Poly> split_by_spatial(const Poly& p) {
  std::map<ExpVec, Poly> out;
  const VarEnv::Ptr& env = p.env();
  const auto n = static_cast<std::size_t>(env->n());
  for (const auto& [e, c] : p.terms()) {
    ExpVec spatial(e.size(), 0);
    ExpVec params(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) (i < n ? spatial : params)[i] = e[i];
    auto it = out.find(spatial);
    if (it == out.end()) it = out.emplace(spatial, Poly::zero(env)).first;
    it->second.add_term(params, c);
  }
  return out;
}

std::map<OpCoord, Poly> op_poly_coords(const DiffOp& op) {
  std::map<OpCoord, Poly> out;
  for (const auto& [key, p] : op.terms())
    for (const auto& [spatial, q] : split_by_spatial(p)) out.emplace(OpCoord{key, spatial}, q);
  return out;
}

std::map<OpCoord, Scalar> op_rational_coords(const DiffOp& op) {
  std::map<OpCoord, Scalar> out;
  for (const auto& [key, p] : op.terms())
    for (const auto& [spatial, q] : split_by_spatial(p)) {
      if (q.uses_param_vars())
        throw DomainError("op_rational_coords: coefficient carries parameter variables");
      out.emplace(OpCoord{key, spatial}, q.constant_term());
    }
  return out;
}

}  // namespace defo
