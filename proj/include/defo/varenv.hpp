#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "defo/errors.hpp"

namespace defo {

// Two-sorted variable environment: n spatial variables named x1..xn plus an
// ordered list of formal deformation parameters. Spatial and parameter names
// are disjoint. Values built over one environment never mix with another
// unless the environments have identical content.
class VarEnv {
 public:
  using Ptr = std::shared_ptr<const VarEnv>;

  static Ptr make(int n, std::vector<std::string> params = {}) {
    return std::shared_ptr<const VarEnv>(new VarEnv(n, std::move(params)));
  }

  int n() const { return n_; }
  int param_count() const { return static_cast<int>(params_.size()); }
  int var_count() const { return n_ + param_count(); }

  bool is_spatial(int v) const { return v >= 0 && v < n_; }
  bool is_param(int v) const { return v >= n_ && v < var_count(); }

  const std::string& name(int v) const {
    if (v < 0 || v >= var_count()) throw DomainError("VarEnv: variable index out of range");
    return v < n_ ? spatial_[static_cast<std::size_t>(v)]
                  : params_[static_cast<std::size_t>(v - n_)];
  }

  // Index of a named variable, or -1 if unknown.
  int index_of(const std::string& name) const {
    for (int v = 0; v < var_count(); ++v)
      if (this->name(v) == name) return v;
    return -1;
  }

  const std::vector<std::string>& param_names() const { return params_; }

  bool same_content(const VarEnv& o) const {
    return n_ == o.n_ && params_ == o.params_;
  }

  static bool compatible(const Ptr& a, const Ptr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same_content(*b);
  }

  static void require_compatible(const Ptr& a, const Ptr& b, const char* where) {
    if (!compatible(a, b))
      throw EnvMismatch(std::string(where) + ": operands from different variable environments");
  }

 private:
  VarEnv(int n, std::vector<std::string> params) : n_(n), params_(std::move(params)) {
    if (n < 2) throw DomainError("VarEnv: spatial dimension must be >= 2");
    spatial_.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) spatial_.push_back("x" + std::to_string(i));
    for (const auto& p : params_) {
      if (std::find(spatial_.begin(), spatial_.end(), p) != spatial_.end())
        throw DomainError("VarEnv: parameter name collides with spatial variable: " + p);
      if (std::count(params_.begin(), params_.end(), p) != 1)
        throw DomainError("VarEnv: duplicate parameter name: " + p);
      if (p.empty() || !is_name_start(p[0]))
        throw DomainError("VarEnv: invalid variable name: " + p);
      if (is_xi_like(p))
        throw DomainError("VarEnv: parameter name '" + p + "' clashes with xi-monomial syntax");
    }
  }

  static bool is_name_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

  static bool is_xi_like(const std::string& s) {
    if (s.size() < 3 || s.compare(0, 2, "xi") != 0) return false;
    return std::all_of(s.begin() + 2, s.end(), [](char c) { return c >= '0' && c <= '9'; });
  }

  int n_;
  std::vector<std::string> spatial_;
  std::vector<std::string> params_;
};

}  // namespace defo
