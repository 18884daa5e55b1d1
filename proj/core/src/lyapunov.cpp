#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dires/errors.hpp"
#include "dires/linalg.hpp"
#include "dires/lyapunov.hpp"

namespace dires {

namespace {

void require_right_half_plane(const Matrix& t) {
    const double floor = 1e-11 * std::max(1.0, inf_norm(t));
    for (const auto& lambda : schur_eigenvalues(t)) {
        if (lambda.real() <= floor) {
            throw NotConnectedError(
                "lyapunov: reduced Laplacian has an eigenvalue with real part " +
                std::to_string(lambda.real()) + "; graph not connected");
        }
    }
}

LyapunovSolution solve_kronecker(const Matrix& lbar) {
    const int m = lbar.rows();
    if (m + 1 > 30) {
        throw std::invalid_argument("lyapunov: kronecker method is limited to graphs with n <= 30");
    }
    const Matrix eye = Matrix::identity(m);
    const Matrix system = kron(eye, lbar) + kron(lbar, eye);

    // Column-stacked right-hand side vec(I).
    Matrix rhs(m * m, 1);
    for (int i = 0; i < m; ++i) {
        rhs(i * m + i, 0) = 1.0;
    }
    Matrix vec;
    try {
        vec = lu_solve(system, rhs);
    } catch (const SingularMatrixError&) {
        throw NotConnectedError("lyapunov: singular Kronecker system; graph not connected");
    }
    Matrix sigma(m, m);
    for (int col = 0; col < m; ++col) {
        for (int row = 0; row < m; ++row) {
            sigma(row, col) = vec(col * m + row, 0);
        }
    }
    return {std::move(sigma), 0.0};
}

/// Partition of a quasi-triangular matrix into 1x1 and 2x2 diagonal blocks.
std::vector<std::pair<int, int>> diagonal_blocks(const Matrix& t) {
    std::vector<std::pair<int, int>> blocks; // (start, size)
    int i = 0;
    while (i < t.rows()) {
        if (i + 1 < t.rows() && t(i + 1, i) != 0.0) {
            blocks.push_back({i, 2});
            i += 2;
        } else {
            blocks.push_back({i, 1});
            ++i;
        }
    }
    return blocks;
}

LyapunovSolution solve_bartels_stewart(const Matrix& lbar) {
    const int m = lbar.rows();
    const auto [t, z] = real_schur(lbar);
    require_right_half_plane(t);

    // With C = I the transformed right-hand side Z^T C Z is again the
    // identity, so solve T Y + Y T^T = I and map back.
    const auto blocks = diagonal_blocks(t);
    const int num_blocks = static_cast<int>(blocks.size());
    Matrix y(m, m);

    for (int bj = num_blocks - 1; bj >= 0; --bj) {
        const auto [rj, nj] = blocks[bj];
        for (int bi = num_blocks - 1; bi >= 0; --bi) {
            const auto [ri, ni] = blocks[bi];

            // rhs = C_ij - sum_{K>I} T_IK Y_KJ - sum_{K>J} Y_IK T_JK^T,
            // accumulated entrywise over the trailing index ranges.
            Matrix rhs(ni, nj);
            for (int r = 0; r < ni; ++r) {
                for (int c = 0; c < nj; ++c) {
                    double acc = (ri + r == rj + c) ? 1.0 : 0.0;
                    for (int k = ri + ni; k < m; ++k) {
                        acc -= t(ri + r, k) * y(k, rj + c);
                    }
                    for (int k = rj + nj; k < m; ++k) {
                        acc -= y(ri + r, k) * t(rj + c, k);
                    }
                    rhs(r, c) = acc;
                }
            }

            // Small Sylvester system, at most 4 unknowns:
            // (I (x) T_ii + T_jj (x) I) vec(W) = vec(rhs).
            Matrix tii(ni, ni);
            for (int r = 0; r < ni; ++r) {
                for (int c = 0; c < ni; ++c) {
                    tii(r, c) = t(ri + r, ri + c);
                }
            }
            Matrix tjj(nj, nj);
            for (int r = 0; r < nj; ++r) {
                for (int c = 0; c < nj; ++c) {
                    tjj(r, c) = t(rj + r, rj + c);
                }
            }
            const Matrix small = kron(Matrix::identity(nj), tii) + kron(tjj, Matrix::identity(ni));
            Matrix vec_rhs(ni * nj, 1);
            for (int c = 0; c < nj; ++c) {
                for (int r = 0; r < ni; ++r) {
                    vec_rhs(c * ni + r, 0) = rhs(r, c);
                }
            }
            Matrix vec_w;
            try {
                vec_w = lu_solve(small, vec_rhs);
            } catch (const SingularMatrixError&) {
                throw NotConnectedError(
                    "lyapunov: singular diagonal block system; graph not connected");
            }
            for (int c = 0; c < nj; ++c) {
                for (int r = 0; r < ni; ++r) {
                    y(ri + r, rj + c) = vec_w(c * ni + r, 0);
                }
            }
        }
    }

    Matrix sigma = z * y * transpose(z);
    return {std::move(sigma), 0.0};
}

} // namespace

LyapunovSolution solve_lyapunov(const Matrix& lbar, LyapunovMethod method, double tol) {
    if (!lbar.square()) {
        throw std::invalid_argument("lyapunov: matrix must be square");
    }
    if (lbar.rows() == 0) {
        throw std::invalid_argument("lyapunov: empty system");
    }

    LyapunovSolution solution = method == LyapunovMethod::Kronecker ? solve_kronecker(lbar)
                                                                    : solve_bartels_stewart(lbar);

    // The exact solution is symmetric; restore that after rounding.
    Matrix& sigma = solution.sigma;
    sigma = 0.5 * (sigma + transpose(sigma));

    const Matrix residual =
        lbar * sigma + sigma * transpose(lbar) - Matrix::identity(lbar.rows());
    solution.residual_norm = frobenius_norm(residual);
    const double bound = tol * (1.0 + frobenius_norm(lbar) * frobenius_norm(sigma));
    if (!(solution.residual_norm <= bound)) {
        throw ConvergenceError("lyapunov: residual " + std::to_string(solution.residual_norm) +
                               " exceeds tolerance " + std::to_string(bound));
    }
    return solution;
}

} // namespace dires
