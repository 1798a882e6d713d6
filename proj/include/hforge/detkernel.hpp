#pragma once

#include <complex>
#include <vector>

#include "hforge/scalar.hpp"

namespace hforge {

// Determinant kernels used by the minor engine. All take a row-major d*d
// scratch buffer and destroy it; callers keep one buffer per thread so the
// underlying GMP limbs get reused across millions of minors.

// Straight Gaussian elimination over Q(i*sqrt(D)) with first-nonzero
// pivoting; returns the signed determinant.
QuadExt det_gauss_qext(std::vector<QuadExt>& m, int d);

// Same elimination over Q; fast path for matrices with no imaginary part.
Rational det_gauss_rational(std::vector<Rational>& m, int d);

// |det| by LU with partial (magnitude) pivoting.
double abs_det_lu(std::vector<std::complex<double>>& m, int d);

} // namespace hforge
