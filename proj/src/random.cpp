#include "defo/random.hpp"

namespace defo {

Scalar RandomSource::rational(int max_num, int max_den) {
  int num = int_in(-max_num, max_num);
  if (num == 0) num = 1;
  int den = int_in(1, max_den);
  return Scalar(num, den);
}

Poly random_poly(RandomSource& rng, const VarEnv::Ptr& env, int max_degree, int max_terms,
                 bool spatial_only) {
  Poly p = Poly::zero(env);
  const int vars = spatial_only ? env->n() : env->var_count();
  const int terms = rng.int_in(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(static_cast<std::size_t>(env->var_count()), 0);
    int budget = rng.int_in(0, max_degree);
    for (int d = 0; d < budget; ++d) {
      int v = rng.int_in(0, vars - 1);
      e[static_cast<std::size_t>(v)] += 1;
    }
    p += Poly::monomial(env, e, rng.rational());
  }
  return p;
}

VectorField random_field(RandomSource& rng, const VarEnv::Ptr& env, int max_degree,
                         int max_terms) {
  std::vector<Poly> comps;
  comps.reserve(static_cast<std::size_t>(env->n()));
  for (int i = 0; i < env->n(); ++i)
    comps.push_back(random_poly(rng, env, max_degree, max_terms, /*spatial_only=*/true));
  return VectorField(env, std::move(comps));
}

Form random_form(RandomSource& rng, const VarEnv::Ptr& env, int max_degree, int max_terms) {
  Form f(env);
  const int terms = rng.int_in(1, max_terms);
  const XiMask top = (XiMask{1} << env->n()) - 1;
  for (int t = 0; t < terms; ++t) {
    XiMask mask = static_cast<XiMask>(rng.below(top + 1));
    f.add_term(mask, random_poly(rng, env, max_degree, 2, /*spatial_only=*/true));
  }
  return f;
}

std::vector<ExpVec> spatial_exponents_of_degree(int n, int d) {
  std::vector<ExpVec> out;
  ExpVec cur(static_cast<std::size_t>(n), 0);
  // Lex enumeration of weak compositions of d into n parts.
  struct Rec {
    int n;
    std::vector<ExpVec>& out;
    ExpVec& cur;
    void go(int pos, int rest) {
      if (pos == n - 1) {
        cur[static_cast<std::size_t>(pos)] = rest;
        out.push_back(cur);
        return;
      }
      for (int take = rest; take >= 0; --take) {
        cur[static_cast<std::size_t>(pos)] = take;
        go(pos + 1, rest - take);
      }
    }
  } rec{n, out, cur};
  rec.go(0, d);
  return out;
}

std::vector<ExpVec> spatial_exponents_up_to(int n, int d) {
  std::vector<ExpVec> out;
  for (int k = 0; k <= d; ++k) {
    auto batch = spatial_exponents_of_degree(n, k);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<VectorField> monomial_fields(const VarEnv::Ptr& env, int max_degree) {
  std::vector<VectorField> out;
  for (const auto& alpha : spatial_exponents_up_to(env->n(), max_degree))
    for (int axis = 0; axis < env->n(); ++axis)
      out.push_back(VectorField::monomial(env, alpha, axis));
  return out;
}

}  // namespace defo
