#pragma once

#include <vector>

#include "walg/ratfun.hpp"

namespace walg {

using RatVec = std::vector<RatFun>;
using RatMat = std::vector<RatVec>; // row-major

/// Right nullspace of M (rows x cols): vectors v with M v = 0, reduced-echelon
/// normalized (each vector is 1 on its own free column, 0 on the others).
/// Elimination is fraction-free (Bareiss) on the denominator-cleared matrix.
std::vector<RatVec> nullspace(const RatMat& m);

int rank(const RatMat& m);

/// Solve A x = b for square nonsingular A; throws std::domain_error if singular.
RatVec solve_linear(const RatMat& a, const RatVec& b);

RatFun det(const RatMat& a);

} // namespace walg
