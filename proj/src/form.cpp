#include "defo/form.hpp"

#include <algorithm>

namespace defo {

std::vector<int> xi_indices(XiMask m) {
  std::vector<int> out;
  for (int i = 1; m != 0; ++i, m >>= 1)
    if (m & 1u) out.push_back(i);
  return out;
}

std::optional<std::pair<XiMask, int>> xi_from_indices(const std::vector<int>& indices) {
  XiMask mask = 0;
  int sign = 1;
  for (int idx : indices) {
    XiMask bit = xi_single(idx);
    if (mask & bit) return std::nullopt;
    // Moving xi^idx past every already-placed factor with a larger index
    // flips the sign once per transposition.
    int larger = std::popcount(mask >> idx);
    if (larger & 1) sign = -sign;
    mask |= bit;
  }
  return std::make_pair(mask, sign);
}

std::optional<int> xi_merge_sign(XiMask a, XiMask b) {
  if (a & b) return std::nullopt;
  int sign = 1;
  XiMask rest = b;
  while (rest != 0) {
    int idx = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    int larger = std::popcount(a >> idx);
    if (larger & 1) sign = -sign;
  }
  return sign;
}

Form Form::from_poly(const Poly& p) {
  Form f(p.env());
  f.add_term(0, p);
  return f;
}

Form Form::xi(VarEnv::Ptr env, int index1) {
  if (index1 < 1 || index1 > env->n()) throw DomainError("Form::xi: index out of range");
  Form f(env);
  f.add_term(xi_single(index1), Poly::constant(env, Scalar(1)));
  return f;
}

Form Form::monomial(XiMask mask, const Poly& coeff) {
  Form f(coeff.env());
  f.add_term(mask, coeff);
  return f;
}

void Form::add_term(XiMask mask, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator+(const Form& o) const {
  VarEnv::require_compatible(env_, o.env_, "Form::operator+");
  Form r = *this;
  for (const auto& [m, p] : o.terms_) r.add_term(m, p);
  return r;
}

Form Form::operator-(const Form& o) const {
  VarEnv::require_compatible(env_, o.env_, "Form::operator-");
  Form r = *this;
  for (const auto& [m, p] : o.terms_) r.add_term(m, -p);
  return r;
}

Form Form::operator-() const {
  Form r(env_);
  for (const auto& [m, p] : terms_) r.terms_.emplace(m, -p);
  return r;
}

Form& Form::operator+=(const Form& o) {
  VarEnv::require_compatible(env_, o.env_, "Form::operator+=");
  for (const auto& [m, p] : o.terms_) add_term(m, p);
  return *this;
}

Form Form::scaled(const Scalar& c) const {
  Form r(env_);
  if (c.is_zero()) return r;
  for (const auto& [m, p] : terms_) r.terms_.emplace(m, p.scaled(c));
  return r;
}

Form Form::scaled(const Poly& p) const {
  Form r(env_);
  for (const auto& [m, q] : terms_) r.add_term(m, q * p);
  return r;
}

bool Form::operator==(const Form& o) const {
  VarEnv::require_compatible(env_, o.env_, "Form::operator==");
  return terms_ == o.terms_;
}

Form Form::wedge(const Form& o) const {
  VarEnv::require_compatible(env_, o.env_, "Form::wedge");
  Form r(env_);
  for (const auto& [ma, pa] : terms_) {
    for (const auto& [mb, pb] : o.terms_) {
      auto sign = xi_merge_sign(ma, mb);
      if (!sign) continue;
      Poly prod = pa * pb;
      if (*sign < 0) prod = -prod;
      r.add_term(ma | mb, prod);
    }
  }
  return r;
}

Form Form::de_rham() const {
  Form r(env_);
  if (!env_) return r;
  for (const auto& [mask, p] : terms_) {
    for (int i = 1; i <= env_->n(); ++i) {
      Poly dp = p.partial(i - 1);
      if (dp.is_zero()) continue;
      auto sign = xi_merge_sign(xi_single(i), mask);
      if (!sign) continue;
      if (*sign < 0) dp = -dp;
      r.add_term(xi_single(i) | mask, dp);
    }
  }
  return r;
}

Form Form::degree_part(int k) const {
  Form r(env_);
  for (const auto& [m, p] : terms_)
    if (xi_degree(m) == k) r.terms_.emplace(m, p);
  return r;
}

bool Form::homogeneous_of_degree(int k) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [k](const auto& t) { return xi_degree(t.first) == k; });
}

int Form::max_degree() const {
  int best = 0;
  for (const auto& [m, p] : terms_) {
    (void)p;
    best = std::max(best, xi_degree(m));
  }
  return best;
}

}  // namespace defo
