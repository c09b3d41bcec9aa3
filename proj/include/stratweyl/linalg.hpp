#pragma once

#include "stratweyl/types.hpp"

namespace sw {

/// Unitary factor U of the polar decomposition M = P U (P Hermitian PSD), via SVD.
/// Throws NumericError when the smallest singular value falls below `rank_tol` times the
/// largest.
CMatrix polar_unitary(const CMatrix& m, double rank_tol = 1e-12);

/// Hermitian R with R M R = I for Hermitian positive definite M.
/// Throws NumericError when an eigenvalue is <= `tol` times the largest magnitude.
CMatrix psd_inv_sqrt(const CMatrix& m, double tol = 1e-12);

/// Hermitian PSD square root.
CMatrix psd_sqrt(const CMatrix& m, double tol = 1e-12);

/// Kronecker product; the second factor varies fastest.
CMatrix kron(const CMatrix& a, const CMatrix& b);

double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Leading `k x k` block.
CMatrix leading_block(const CMatrix& m, int k);

}  // namespace sw
