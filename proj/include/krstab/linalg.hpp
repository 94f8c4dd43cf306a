#pragma once

#include <vector>

#include "krstab/polyring.hpp"

namespace krstab {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

// In-place Gauss-Jordan reduction over exact rationals. Columns are processed
// left to right and the pivot is the first unused row with a nonzero entry,
// so the returned pivot-column list is deterministic and respects the
// caller's column order.
std::vector<int> rref(RatMatrix& a);

RatMatrix identity_matrix(int n);

// Inverse of a square matrix; throws inconsistent_basis_error when singular.
RatMatrix invert(const RatMatrix& a);

std::vector<Rational> mat_vec(const RatMatrix& a, const std::vector<Rational>& x);

} // namespace krstab
