#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "defo/form.hpp"
#include "defo/poly.hpp"
#include "defo/vectorfield.hpp"

namespace defo {

// Seeded deterministic randomness. mt19937_64 output is fully specified by
// the standard; we avoid std distributions because their mapping is not, so
// reports stay byte-identical across platforms.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform-ish value in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return eng_() % bound; }
  int int_in(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  // Small nonzero rational with |num| <= max_num, 1 <= den <= max_den.
  Scalar rational(int max_num = 5, int max_den = 3);

 private:
  std::mt19937_64 eng_;
};

// Random polynomial of total degree <= max_degree with at most max_terms
// monomials. spatial_only restricts to the spatial slots.
Poly random_poly(RandomSource& rng, const VarEnv::Ptr& env, int max_degree, int max_terms,
                 bool spatial_only);

// Random vector field with spatial polynomial components.
VectorField random_field(RandomSource& rng, const VarEnv::Ptr& env, int max_degree,
                         int max_terms = 3);

// Random form with coefficients of bounded degree.
Form random_form(RandomSource& rng, const VarEnv::Ptr& env, int max_degree,
                 int max_terms = 3);

// All monomial fields x^alpha d_i with |alpha| <= max_degree, in a fixed
// deterministic order (degree, then exponent lex, then axis).
std::vector<VectorField> monomial_fields(const VarEnv::Ptr& env, int max_degree);

// All spatial exponent vectors of total degree exactly d (lex order), resp.
// at most d.
std::vector<ExpVec> spatial_exponents_of_degree(int n, int d);
std::vector<ExpVec> spatial_exponents_up_to(int n, int d);

}  // namespace defo
