#include "defo/poly.hpp"

#include <string>

namespace defo {

Poly Poly::constant(VarEnv::Ptr env, const Scalar& c) {
  Poly p(std::move(env));
  if (!c.is_zero()) p.terms_.emplace(ExpVec(static_cast<std::size_t>(p.env_->var_count()), 0), c);
  return p;
}

Poly Poly::variable(VarEnv::Ptr env, int var_index) {
  Poly p(std::move(env));
  if (var_index < 0 || var_index >= p.env_->var_count())
    throw DomainError("Poly::variable: index out of range");
  ExpVec e(static_cast<std::size_t>(p.env_->var_count()), 0);
  e[static_cast<std::size_t>(var_index)] = 1;
  p.terms_.emplace(std::move(e), Scalar(1));
  return p;
}

Poly Poly::monomial(VarEnv::Ptr env, const ExpVec& exps, const Scalar& c) {
  Poly p(std::move(env));
  if (exps.size() != static_cast<std::size_t>(p.env_->var_count()))
    throw DomainError("Poly::monomial: exponent vector has wrong length");
  for (int e : exps)
    if (e < 0) throw DomainError("Poly::monomial: negative exponent");
  if (!c.is_zero()) p.terms_.emplace(exps, c);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const ExpVec& e = terms_.begin()->first;
  for (int x : e)
    if (x != 0) return false;
  return true;
}

Scalar Poly::constant_term() const {
  require_env();
  ExpVec zero(static_cast<std::size_t>(env_->var_count()), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Poly::add_term(const ExpVec& exps, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  VarEnv::require_compatible(env_, o.env_, "Poly::operator+");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  VarEnv::require_compatible(env_, o.env_, "Poly::operator-");
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  VarEnv::require_compatible(env_, o.env_, "Poly::operator+=");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  VarEnv::require_compatible(env_, o.env_, "Poly::operator-=");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  VarEnv::require_compatible(env_, o.env_, "Poly::operator*");
  Poly r(env_);
  ExpVec sum;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      sum = ea;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += eb[i];
      r.add_term(sum, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r(env_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(env_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

Poly Poly::pow(int e) const {
  require_env();
  if (e < 0) throw DomainError("Poly::pow: negative exponent");
  Poly r = Poly::constant(env_, Scalar(1));
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool Poly::operator==(const Poly& o) const {
  VarEnv::require_compatible(env_, o.env_, "Poly::operator==");
  return terms_ == o.terms_;
}

Poly Poly::partial(int spatial_index) const {
  require_env();
  if (spatial_index < 0 || spatial_index >= env_->var_count())
    throw DomainError("Poly::partial: variable index out of range");
  if (!env_->is_spatial(spatial_index))
    throw DomainError("Poly::partial: parameters are never differentiated (" +
                      env_->name(spatial_index) + ")");
  Poly r(env_);
  const auto i = static_cast<std::size_t>(spatial_index);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    ExpVec d = e;
    d[i] -= 1;
    r.add_term(d, c * Scalar(e[i]));
  }
  return r;
}

Poly Poly::substitute(const std::map<int, Poly>& bindings) const {
  require_env();
  for (const auto& [v, repl] : bindings) {
    if (v < 0 || v >= env_->var_count())
      throw DomainError("Poly::substitute: variable index out of range");
    VarEnv::require_compatible(env_, repl.env(), "Poly::substitute");
    for (const auto& [e, c] : repl.terms()) {
      (void)c;
      if (e[static_cast<std::size_t>(v)] != 0)
        throw DomainError("Poly::substitute: replacement for " + env_->name(v) +
                          " mentions the variable itself");
    }
  }
  if (bindings.empty()) return *this;
  Poly result(env_);
  for (const auto& [e, c] : terms_) {
    ExpVec rem = e;
    Poly factor = Poly::constant(env_, c);
    for (const auto& [v, repl] : bindings) {
      int k = rem[static_cast<std::size_t>(v)];
      if (k == 0) continue;
      rem[static_cast<std::size_t>(v)] = 0;
      factor = factor * repl.pow(k);
    }
    result += factor * Poly::monomial(env_, rem, Scalar(1));
  }
  return result;
}

int Poly::total_degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    int d = 0;
    for (int x : e) d += x;
    if (d > best) best = d;
  }
  return best;
}

int Poly::param_degree() const {
  require_env();
  int best = 0;
  const auto n = static_cast<std::size_t>(env_->n());
  for (const auto& [e, c] : terms_) {
    (void)c;
    int d = 0;
    for (std::size_t i = n; i < e.size(); ++i) d += e[i];
    if (d > best) best = d;
  }
  return best;
}

Poly Poly::param_degree_part(int d) const {
  require_env();
  Poly r(env_);
  const auto n = static_cast<std::size_t>(env_->n());
  for (const auto& [e, c] : terms_) {
    int pd = 0;
    for (std::size_t i = n; i < e.size(); ++i) pd += e[i];
    if (pd == d) r.terms_.emplace(e, c);
  }
  return r;
}

bool Poly::uses_param_vars() const { return param_degree() > 0; }

bool Poly::uses_spatial_vars() const {
  require_env();
  const auto n = static_cast<std::size_t>(env_->n());
  for (const auto& [e, c] : terms_) {
    (void)c;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] != 0) return true;
  }
  return false;
}

}  // namespace defo
