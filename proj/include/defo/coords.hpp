#pragma once

#include <map>
#include <utility>

#include "defo/diffop.hpp"

namespace defo {

// Coordinate of an operator over the (term key, spatial monomial) basis.
using OpCoord = std::pair<OpKey, ExpVec>;

// Splits a coefficient polynomial into spatial-monomial slots with
// parameter-polynomial values.
std::map<ExpVec, Poly> split_by_spatial(const Poly& p);

// Operator coordinates with parameter-polynomial values.
std::map<OpCoord, Poly> op_poly_coords(const DiffOp& op);

// Operator coordinates with rational values; throws when a coefficient
// carries parameter variables.
std::map<OpCoord, Scalar> op_rational_coords(const DiffOp& op);

}  // namespace defo
