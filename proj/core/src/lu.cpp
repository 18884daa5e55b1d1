#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dires/errors.hpp"
#include "dires/linalg.hpp"

namespace dires {

Matrix lu_solve(const Matrix& a, const Matrix& b) {
    if (!a.square()) {
        throw std::invalid_argument("lu_solve: coefficient matrix must be square");
    }
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("lu_solve: right-hand side row count mismatch");
    }
    const int n = a.rows();
    Matrix lu = a;
    Matrix x = b;
    const double pivot_floor = 1e-13 * inf_norm(a);

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row) {
            if (std::abs(lu(row, col)) > std::abs(lu(pivot, col))) {
                pivot = row;
            }
        }
        if (std::abs(lu(pivot, col)) <= pivot_floor) {
            throw SingularMatrixError(col, "lu_solve: singular matrix, pivot " +
                                               std::to_string(col) + " is " +
                                               std::to_string(lu(pivot, col)));
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(lu(col, j), lu(pivot, j));
            }
            for (int j = 0; j < x.cols(); ++j) {
                std::swap(x(col, j), x(pivot, j));
            }
        }
        const double inv_pivot = 1.0 / lu(col, col);
        for (int row = col + 1; row < n; ++row) {
            const double factor = lu(row, col) * inv_pivot;
            if (factor == 0.0) {
                continue;
            }
            lu(row, col) = 0.0;
            for (int j = col + 1; j < n; ++j) {
                lu(row, j) -= factor * lu(col, j);
            }
            for (int j = 0; j < x.cols(); ++j) {
                x(row, j) -= factor * x(col, j);
            }
        }
    }

    for (int col = n - 1; col >= 0; --col) {
        const double inv_pivot = 1.0 / lu(col, col);
        for (int j = 0; j < x.cols(); ++j) {
            x(col, j) *= inv_pivot;
        }
        for (int row = 0; row < col; ++row) {
            const double factor = lu(row, col);
            if (factor == 0.0) {
                continue;
            }
            for (int j = 0; j < x.cols(); ++j) {
                x(row, j) -= factor * x(col, j);
            }
        }
    }
    return x;
}

} // namespace dires
