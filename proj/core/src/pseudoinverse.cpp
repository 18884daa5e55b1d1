#include <cmath>
#include <stdexcept>

#include "dires/errors.hpp"
#include "dires/linalg.hpp"

namespace dires {

Matrix pseudo_inverse_sym(const Matrix& l) {
    if (!l.square()) {
        throw std::invalid_argument("pseudo_inverse_sym: matrix must be square");
    }
    const int n = l.rows();
    const double scale = std::max(inf_norm(l), 1.0);
    for (int i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            if (std::abs(l(i, j) - l(j, i)) > 1e-9 * scale) {
                throw std::invalid_argument("pseudo_inverse_sym: matrix is not symmetric");
            }
            row_sum += l(i, j);
        }
        if (std::abs(row_sum) > 1e-9 * scale) {
            throw std::invalid_argument("pseudo_inverse_sym: rows must sum to zero");
        }
    }
    if (n == 1) {
        return Matrix(1, 1);
    }

    const Matrix q = build_q(n).q;
    const Matrix lbar = q * l * transpose(q);
    Matrix inv;
    try {
        inv = lu_solve(lbar, Matrix::identity(n - 1));
    } catch (const SingularMatrixError&) {
        throw std::invalid_argument(
            "pseudo_inverse_sym: rank deficiency beyond the single zero eigenvalue");
    }
    return transpose(q) * inv * q;
}

} // namespace dires
