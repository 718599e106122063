#include "defo/diffop.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <utility>

namespace defo {

DiffOp DiffOp::identity(VarEnv::Ptr env) {
  return mult_poly(Poly::constant(std::move(env), Scalar(1)));
}

DiffOp DiffOp::mult_poly(const Poly& p) {
  DiffOp op(p.env());
  OpKey key;
  key.dx.assign(static_cast<std::size_t>(op.env_->n()), 0);
  op.add_term(key, p);
  return op;
}

DiffOp DiffOp::mult_form(const Form& w) {
  DiffOp op(w.env());
  OpKey key;
  key.dx.assign(static_cast<std::size_t>(op.env_->n()), 0);
  for (const auto& [mask, p] : w.terms()) {
    key.xi = mask;
    op.add_term(key, p);
  }
  return op;
}

DiffOp DiffOp::xi_op(VarEnv::Ptr env, int index1) {
  return mult_form(Form::xi(std::move(env), index1));
}

DiffOp DiffOp::dx_op(VarEnv::Ptr env, int index1) {
  DiffOp op(std::move(env));
  if (index1 < 1 || index1 > op.env_->n()) throw DomainError("DiffOp::dx_op: index out of range");
  OpKey key;
  key.dx.assign(static_cast<std::size_t>(op.env_->n()), 0);
  key.dx[static_cast<std::size_t>(index1 - 1)] = 1;
  op.add_term(key, Poly::constant(op.env_, Scalar(1)));
  return op;
}

DiffOp DiffOp::dxi_op(VarEnv::Ptr env, int index1) {
  DiffOp op(std::move(env));
  if (index1 < 1 || index1 > op.env_->n()) throw DomainError("DiffOp::dxi_op: index out of range");
  OpKey key;
  key.dx.assign(static_cast<std::size_t>(op.env_->n()), 0);
  key.dxi = xi_single(index1);
  op.add_term(key, Poly::constant(op.env_, Scalar(1)));
  return op;
}

DiffOp DiffOp::from_term(VarEnv::Ptr env, const OpKey& key, const Poly& coeff) {
  DiffOp op(std::move(env));
  if (key.dx.size() != static_cast<std::size_t>(op.env_->n()))
    throw DomainError("DiffOp::from_term: dx exponent vector has wrong length");
  op.add_term(key, coeff);
  return op;
}

DiffOp DiffOp::d_operator(VarEnv::Ptr env) {
  DiffOp op(std::move(env));
  for (int i = 1; i <= op.env_->n(); ++i) {
    OpKey key;
    key.xi = xi_single(i);
    key.dx.assign(static_cast<std::size_t>(op.env_->n()), 0);
    key.dx[static_cast<std::size_t>(i - 1)] = 1;
    op.add_term(key, Poly::constant(op.env_, Scalar(1)));
  }
  return op;
}

DiffOp DiffOp::degree_number(VarEnv::Ptr env) {
  DiffOp op(std::move(env));
  for (int i = 1; i <= op.env_->n(); ++i) {
    OpKey key;
    key.xi = xi_single(i);
    key.dx.assign(static_cast<std::size_t>(op.env_->n()), 0);
    key.dxi = xi_single(i);
    op.add_term(key, Poly::constant(op.env_, Scalar(1)));
  }
  return op;
}

DiffOp DiffOp::degree_projector(VarEnv::Ptr env, int k) {
  const int n = env->n();
  if (k < 0 || k > n) throw DomainError("DiffOp::degree_projector: degree out of range");
  DiffOp num = degree_number(env);
  DiffOp proj = identity(env);
  Scalar denom(1);
  for (int j = 0; j <= n; ++j) {
    if (j == k) continue;
    proj = compose(proj, num - identity(env).scaled(Scalar(j)));
    denom *= Scalar(k - j);
  }
  return proj.scaled(Scalar(1) / denom);
}

void DiffOp::add_term(const OpKey& key, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
  VarEnv::require_compatible(env_, o.env_, "DiffOp::operator+");
  DiffOp r = *this;
  for (const auto& [k, p] : o.terms_) r.add_term(k, p);
  return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const {
  VarEnv::require_compatible(env_, o.env_, "DiffOp::operator-");
  DiffOp r = *this;
  for (const auto& [k, p] : o.terms_) r.add_term(k, -p);
  return r;
}

DiffOp DiffOp::operator-() const {
  DiffOp r(env_);
  for (const auto& [k, p] : terms_) r.terms_.emplace(k, -p);
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  VarEnv::require_compatible(env_, o.env_, "DiffOp::operator+=");
  for (const auto& [k, p] : o.terms_) add_term(k, p);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  VarEnv::require_compatible(env_, o.env_, "DiffOp::operator-=");
  for (const auto& [k, p] : o.terms_) add_term(k, -p);
  return *this;
}

DiffOp DiffOp::scaled(const Scalar& c) const {
  DiffOp r(env_);
  if (c.is_zero()) return r;
  for (const auto& [k, p] : terms_) r.terms_.emplace(k, p.scaled(c));
  return r;
}

DiffOp DiffOp::scaled(const Poly& p) const {
  DiffOp r(env_);
  for (const auto& [k, q] : terms_) r.add_term(k, q * p);
  return r;
}

bool DiffOp::operator==(const DiffOp& o) const {
  VarEnv::require_compatible(env_, o.env_, "DiffOp::operator==");
  return terms_ == o.terms_;
}

namespace {

// Expansion of dx^beta moved past a polynomial by the even Leibniz rule,
// one variable at a time: each output is (remaining derivative exponents,
// differentiated coefficient with its multiplicity).
void dx_past_poly(const VarEnv::Ptr& env, const ExpVec& beta, const Poly& q,
                  std::vector<std::pair<ExpVec, Poly>>& out) {
  out.clear();
  out.emplace_back(beta, q);
  const int n = env->n();
  for (int i = 0; i < n; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    if (b == 0) continue;
    std::vector<std::pair<ExpVec, Poly>> next;
    for (auto& [rem, poly] : out) {
      // Iterate dx_i . f = f . dx_i + (d_i f) exactly b times; the multi-
      // nomial weights build up as Pascal rows.
      std::vector<Poly> derivs;
      derivs.push_back(poly);
      for (int j = 1; j <= b; ++j) {
        if (derivs.back().is_zero()) break;
        derivs.push_back(derivs.back().partial(i));
      }
      Scalar binom(1);
      for (int j = 0; j < static_cast<int>(derivs.size()); ++j) {
        if (j > 0) binom = binom * Scalar(b - j + 1) / Scalar(j);
        if (derivs[static_cast<std::size_t>(j)].is_zero()) continue;
        ExpVec r = rem;
        r[static_cast<std::size_t>(i)] = b - j;
        next.emplace_back(std::move(r), derivs[static_cast<std::size_t>(j)].scaled(binom));
      }
    }
    out = std::move(next);
  }
}

struct GrassTerm {
  int sign;
  XiMask xi;
  XiMask dxi;
};

// Normal ordering of dxi^B . xi^C, memoized. Computed by the generic word
// rewriter so the signs come from the centralized rules.
const std::vector<GrassTerm>& grassmann_table(const VarEnv::Ptr& env, XiMask b, XiMask c) {
  static std::mutex mu;
  static std::unordered_map<std::uint64_t, std::vector<GrassTerm>> cache;
  const std::uint64_t key = (static_cast<std::uint64_t>(b) << 32) | c;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  std::vector<detail::Atom> word;
  for (int i : xi_indices(b)) word.push_back({detail::Atom::Kind::Dxi, i, Poly()});
  for (int i : xi_indices(c)) word.push_back({detail::Atom::Kind::Xi, i, Poly()});
  DiffOp ordered = detail::normal_order_word(env, std::move(word));
  std::vector<GrassTerm> result;
  for (const auto& [k, p] : ordered.terms()) {
    Scalar s = p.constant_term();
    result.push_back(GrassTerm{s.sign(), k.xi, k.dxi});
  }
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(result));
  (void)inserted;
  return it->second;
}

}  // namespace

DiffOp DiffOp::compose(const DiffOp& a, const DiffOp& b) {
  VarEnv::require_compatible(a.env_, b.env_, "DiffOp::compose");
  const VarEnv::Ptr& env = a.env_ ? a.env_ : b.env_;
  DiffOp result(env);
  std::vector<std::pair<ExpVec, Poly>> leib;
  for (const auto& [ka, pa] : a.terms_) {
    for (const auto& [kb, pb] : b.terms_) {
      // Word: pa xi^A dx^beta dxi^B . pb xi^C dx^gamma dxi^D. The odd
      // derivatives pass pb freely, dx^beta picks up Leibniz terms on pb,
      // then dxi^B contracts into xi^C via the Grassmann table.
      dx_past_poly(env, ka.dx, pb, leib);
      for (const auto& [beta_rem, qmu] : leib) {
        const Poly coeff_base = pa * qmu;
        if (coeff_base.is_zero()) continue;
        for (const GrassTerm& g : grassmann_table(env, ka.dxi, kb.xi)) {
          auto wsign = xi_merge_sign(ka.xi, g.xi);
          if (!wsign) continue;
          auto dsign = xi_merge_sign(g.dxi, kb.dxi);
          if (!dsign) continue;
          OpKey key;
          key.xi = ka.xi | g.xi;
          key.dxi = g.dxi | kb.dxi;
          key.dx = beta_rem;
          for (std::size_t i = 0; i < key.dx.size(); ++i) key.dx[i] += kb.dx[i];
          const int sign = g.sign * *wsign * *dsign;
          result.add_term(key, sign < 0 ? -coeff_base : coeff_base);
        }
      }
    }
  }
  return result;
}

DiffOp DiffOp::compose(const DiffOp& a, const DiffOp& b, const DiffOp& c) {
  return compose(compose(a, b), c);
}

DiffOp DiffOp::commutator(const DiffOp& a, const DiffOp& b) {
  return compose(a, b) - compose(b, a);
}

Form DiffOp::apply(const Form& w) const {
  VarEnv::require_compatible(env_, w.env(), "DiffOp::apply");
  // op(w) = (op . mult(w)) applied to the constant 0-form 1: only the
  // derivative-free terms of the composition survive.
  DiffOp composed = compose(*this, mult_form(w));
  Form out(env_);
  for (const auto& [k, p] : composed.terms_) {
    if (k.dxi != 0) continue;
    if (std::any_of(k.dx.begin(), k.dx.end(), [](int e) { return e != 0; })) continue;
    out.add_term(k.xi, p);
  }
  return out;
}

DiffOp DiffOp::graded_block(int k, int l) const {
  if (!env_) return *this;
  const int n = env_->n();
  if (k < 0 || k > n || l < 0 || l > n)
    throw DomainError("DiffOp::graded_block: degrees must lie in 0..n");
  DiffOp filtered(env_);
  for (const auto& [key, p] : terms_) {
    if (key.shift() != l - k) continue;
    if (xi_degree(key.dxi) > k) continue;  // annihilates degree k anyway
    filtered.terms_.emplace(key, p);
  }
  return compose(filtered, degree_projector(env_, k));
}

DiffOp DiffOp::shift_part(int s) const {
  DiffOp r(env_);
  for (const auto& [k, p] : terms_)
    if (k.shift() == s) r.terms_.emplace(k, p);
  return r;
}

int DiffOp::min_shift() const {
  int best = 0;
  bool first = true;
  for (const auto& [k, p] : terms_) {
    (void)p;
    if (first || k.shift() < best) best = k.shift();
    first = false;
  }
  return best;
}

int DiffOp::max_shift() const {
  int best = 0;
  bool first = true;
  for (const auto& [k, p] : terms_) {
    (void)p;
    if (first || k.shift() > best) best = k.shift();
    first = false;
  }
  return best;
}

int DiffOp::param_degree() const {
  int best = 0;
  for (const auto& [k, p] : terms_) {
    (void)k;
    best = std::max(best, p.param_degree());
  }
  return best;
}

DiffOp DiffOp::param_degree_part(int d) const {
  DiffOp r(env_);
  for (const auto& [k, p] : terms_) r.add_term(k, p.param_degree_part(d));
  return r;
}

DiffOp DiffOp::substitute(const std::map<int, Poly>& bindings) const {
  DiffOp r(env_);
  for (const auto& [k, p] : terms_) r.add_term(k, p.substitute(bindings));
  return r;
}

namespace detail {

namespace {

int rank(Atom::Kind k) {
  switch (k) {
    case Atom::Kind::Coef: return 0;
    case Atom::Kind::Xi: return 1;
    case Atom::Kind::Dx: return 2;
    case Atom::Kind::Dxi: return 3;
  }
  return 0;
}

struct PendingWord {
  int sign;
  std::vector<Atom> atoms;
};

}  // namespace

DiffOp normal_order_word(const VarEnv::Ptr& env, std::vector<Atom> word) {
  DiffOp result(env);
  std::vector<PendingWord> stack;
  stack.push_back(PendingWord{1, std::move(word)});

  while (!stack.empty()) {
    PendingWord cur = std::move(stack.back());
    stack.pop_back();
    auto& w = cur.atoms;

    bool rewritten = false;
    bool vanished = false;
    for (std::size_t i = 0; i + 1 < w.size() && !rewritten; ++i) {
      Atom& u = w[i];
      Atom& v = w[i + 1];
      const int ru = rank(u.kind);
      const int rv = rank(v.kind);

      if (ru == rv) {
        switch (u.kind) {
          case Atom::Kind::Coef: {
            // Merge adjacent coefficients.
            Atom merged{Atom::Kind::Coef, 0, u.coef * v.coef};
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i + 1));
            w[i] = std::move(merged);
            rewritten = true;
            break;
          }
          case Atom::Kind::Xi:
          case Atom::Kind::Dxi: {
            if (u.index == v.index) {
              vanished = true;  // odd square is zero
              rewritten = true;
            } else if (u.index > v.index) {
              std::swap(u, v);
              cur.sign = -cur.sign;
              rewritten = true;
            }
            break;
          }
          case Atom::Kind::Dx: {
            if (u.index > v.index) {
              std::swap(u, v);
              rewritten = true;
            }
            break;
          }
        }
        continue;
      }
      if (ru < rv) continue;

      // Out-of-order pair: apply the local rule.
      if (u.kind == Atom::Kind::Dx && v.kind == Atom::Kind::Coef) {
        // Even Leibniz: dx_i . f = f . dx_i + (d_i f).
        PendingWord branch = cur;
        branch.atoms.erase(branch.atoms.begin() + static_cast<std::ptrdiff_t>(i));
        branch.atoms[i].coef = v.coef.partial(u.index);
        if (!branch.atoms[i].coef.is_zero()) stack.push_back(std::move(branch));
        std::swap(u, v);
        rewritten = true;
      } else if (u.kind == Atom::Kind::Dxi && v.kind == Atom::Kind::Xi) {
        // Odd Leibniz: dxi_i . xi^j = delta_ij - xi^j . dxi_i.
        if (u.index == v.index) {
          PendingWord branch = cur;
          branch.atoms.erase(branch.atoms.begin() + static_cast<std::ptrdiff_t>(i),
                             branch.atoms.begin() + static_cast<std::ptrdiff_t>(i + 2));
          stack.push_back(std::move(branch));
        }
        std::swap(u, v);
        cur.sign = -cur.sign;
        rewritten = true;
      } else {
        // All remaining mixed pairs commute.
        std::swap(u, v);
        rewritten = true;
      }
    }

    if (vanished) continue;
    if (rewritten) {
      stack.push_back(std::move(cur));
      continue;
    }

    // Canonical word: emit.
    Poly coeff = Poly::constant(env, Scalar(cur.sign));
    OpKey key;
    key.dx.assign(static_cast<std::size_t>(env->n()), 0);
    for (const Atom& a : w) {
      switch (a.kind) {
        case Atom::Kind::Coef: coeff = coeff * a.coef; break;
        case Atom::Kind::Xi: key.xi |= xi_single(a.index); break;
        case Atom::Kind::Dx: key.dx[static_cast<std::size_t>(a.index)] += 1; break;
        case Atom::Kind::Dxi: key.dxi |= xi_single(a.index); break;
      }
    }
    result.add_term(key, coeff);
  }
  return result;
}

DiffOp compose_reference(const DiffOp& a, const DiffOp& b) {
  VarEnv::require_compatible(a.env(), b.env(), "compose_reference");
  const VarEnv::Ptr& env = a.env();
  DiffOp result(env);
  for (const auto& [ka, pa] : a.terms()) {
    for (const auto& [kb, pb] : b.terms()) {
      std::vector<Atom> word;
      word.push_back({Atom::Kind::Coef, 0, pa});
      for (int i : xi_indices(ka.xi)) word.push_back({Atom::Kind::Xi, i, Poly()});
      for (std::size_t i = 0; i < ka.dx.size(); ++i)
        for (int r = 0; r < ka.dx[i]; ++r)
          word.push_back({Atom::Kind::Dx, static_cast<int>(i), Poly()});
      for (int i : xi_indices(ka.dxi)) word.push_back({Atom::Kind::Dxi, i, Poly()});
      word.push_back({Atom::Kind::Coef, 0, pb});
      for (int i : xi_indices(kb.xi)) word.push_back({Atom::Kind::Xi, i, Poly()});
      for (std::size_t i = 0; i < kb.dx.size(); ++i)
        for (int r = 0; r < kb.dx[i]; ++r)
          word.push_back({Atom::Kind::Dx, static_cast<int>(i), Poly()});
      for (int i : xi_indices(kb.dxi)) word.push_back({Atom::Kind::Dxi, i, Poly()});
      result += normal_order_word(env, std::move(word));
    }
  }
  return result;
}

}  // namespace detail

}  // namespace defo
