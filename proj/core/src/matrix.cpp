#include "dires/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace dires {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, 0.0) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("Matrix: negative dimension");
    }
}

Matrix::Matrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("Matrix: negative dimension");
    }
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw std::invalid_argument("Matrix: entry count does not match dimensions");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw std::invalid_argument("Matrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("Matrix: shape mismatch");
    }
}

} // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] += b.entries()[i];
    }
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out = a;
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] -= b.entries()[i];
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("Matrix: inner dimension mismatch");
    }
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) {
                continue;
            }
            for (int j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix out = a;
    for (double& e : out.entries()) {
        e *= s;
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

double trace(const Matrix& a) {
    double t = 0.0;
    const int n = a.rows() < a.cols() ? a.rows() : a.cols();
    for (int i = 0; i < n; ++i) {
        t += a(i, i);
    }
    return t;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double e : a.entries()) {
        s += e * e;
    }
    return std::sqrt(s);
}

double inf_norm(const Matrix& a) {
    double best = 0.0;
    for (int i = 0; i < a.rows(); ++i) {
        double row = 0.0;
        for (int j = 0; j < a.cols(); ++j) {
            row += std::abs(a(i, j));
        }
        best = row > best ? row : best;
    }
    return best;
}

double max_abs(const Matrix& a) {
    double best = 0.0;
    for (double e : a.entries()) {
        const double m = std::abs(e);
        best = m > best ? m : best;
    }
    return best;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    double best = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        const double m = std::abs(a.entries()[i] - b.entries()[i]);
        best = m > best ? m : best;
    }
    return best;
}

bool all_finite(const Matrix& a) {
    for (double e : a.entries()) {
        if (!std::isfinite(e)) {
            return false;
        }
    }
    return true;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            const double aij = a(i, j);
            if (aij == 0.0) {
                continue;
            }
            for (int p = 0; p < b.rows(); ++p) {
                for (int q = 0; q < b.cols(); ++q) {
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
                }
            }
        }
    }
    return out;
}

} // namespace dires
