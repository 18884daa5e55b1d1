#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dires/matrix.hpp"

namespace dires {

/// Solves a x = b by LU with partial pivoting; b may have several columns.
/// Throws SingularMatrixError when a pivot falls below 1e-13 * inf_norm(a).
Matrix lu_solve(const Matrix& a, const Matrix& b);

enum class QVariant {
    Deterministic,
    SeededRandom,
};

/// (N-1) x N matrix whose rows are an orthonormal basis of the subspace
/// orthogonal to the all-ones vector: Q 1 = 0, Q Q^T = I, Q^T Q = Pi.
struct QBasis {
    Matrix q;
};

/// Deterministic variant: rows 2..n of the Householder reflector mapping
/// (1/sqrt n) 1 to e1. Seeded-random variant: modified Gram-Schmidt with
/// re-orthogonalization on seeded Gaussian vectors.
QBasis build_q(int n, QVariant variant = QVariant::Deterministic, std::uint64_t seed = 0);

struct HessenbergResult {
    Matrix h; ///< upper Hessenberg
    Matrix u; ///< orthogonal, a = u h u^T
};

HessenbergResult hessenberg(const Matrix& a);

struct SchurResult {
    Matrix t; ///< quasi-upper-triangular with 1x1 and 2x2 diagonal blocks
    Matrix z; ///< orthogonal, a = z t z^T
};

/// Real Schur form via Francis double-shift QR with exceptional shifts.
/// Throws ConvergenceError after 30*n iterations without deflation.
SchurResult real_schur(const Matrix& a);

/// Eigenvalues read off the diagonal blocks of a quasi-triangular matrix.
std::vector<std::complex<double>> schur_eigenvalues(const Matrix& t);

/// e^(a t) by scaling and squaring with a diagonal Pade core.
Matrix expm(const Matrix& a, double t);

/// X = Q^T (Q l Q^T)^-1 Q for a symmetric l with l 1 = 0 and rank n-1.
/// Satisfies X l = l X = Pi and X Pi = Pi X = X.
Matrix pseudo_inverse_sym(const Matrix& l);

} // namespace dires
