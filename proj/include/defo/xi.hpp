#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace defo {

// A xi-monomial xi^{i1}..xi^{ik} with strictly increasing 1-based indices,
// stored as a bitmask (bit i-1 set <=> xi^i present). The empty monomial is 0.
using XiMask = std::uint32_t;

inline int xi_degree(XiMask m) { return std::popcount(m); }

inline bool xi_contains(XiMask m, int index1) { return (m >> (index1 - 1)) & 1u; }

inline XiMask xi_single(int index1) { return XiMask{1} << (index1 - 1); }

// Indices of a mask in increasing order (1-based).
std::vector<int> xi_indices(XiMask m);

// Sorts an arbitrary index sequence into a mask, returning the sign of the
// sorting permutation, or nullopt when an index repeats (the monomial is 0).
std::optional<std::pair<XiMask, int>> xi_from_indices(const std::vector<int>& indices);

// Sign of xi^A * xi^B -> xi^(A|B) obtained by sorting the concatenation, or
// nullopt when A and B overlap (the product is 0). Both inputs are sorted, so
// the sign counts the transpositions moving each B index past the larger A
// indices.
std::optional<int> xi_merge_sign(XiMask a, XiMask b);

}  // namespace defo
