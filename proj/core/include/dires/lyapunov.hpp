#pragma once

#include "dires/matrix.hpp"

namespace dires {

enum class LyapunovMethod {
    BartelsStewart,
    Kronecker,
};

struct LyapunovSolution {
    /// Symmetric solution of lbar sigma + sigma lbar^T = I.
    Matrix sigma;
    /// Frobenius norm of lbar sigma + sigma lbar^T - I after symmetrization.
    double residual_norm = 0.0;
};

/// Solves lbar sigma + sigma lbar^T = I for the unique positive definite
/// sigma; requires every eigenvalue of lbar in the open right half-plane
/// (throws NotConnectedError otherwise, since lbar comes from a reduced
/// Laplacian). The Kronecker method forms the (n-1)^2 linear system and is
/// capped at n <= 30; Bartels-Stewart Schur-transforms and back-substitutes
/// block column by block column. The result is symmetrized and its residual
/// checked against tol * (1 + |lbar|_F |sigma|_F).
LyapunovSolution solve_lyapunov(const Matrix& lbar,
                                LyapunovMethod method = LyapunovMethod::BartelsStewart,
                                double tol = 1e-8);

} // namespace dires
