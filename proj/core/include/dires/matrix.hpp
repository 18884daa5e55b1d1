#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dires {

/// Dense real matrix with value semantics, row-major storage.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);
    Matrix(int rows, int cols, std::vector<double> entries);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    double& operator()(int i, int j) noexcept { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const noexcept { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<double>& entries() const noexcept { return entries_; }
    std::vector<double>& entries() noexcept { return entries_; }

    bool square() const noexcept { return rows_ == cols_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

Matrix transpose(const Matrix& a);
double trace(const Matrix& a);

/// Frobenius norm.
double frobenius_norm(const Matrix& a);
/// Max row sum of absolute values (induced infinity norm).
double inf_norm(const Matrix& a);
/// Largest absolute entry.
double max_abs(const Matrix& a);
/// Largest absolute difference between corresponding entries.
double max_abs_diff(const Matrix& a, const Matrix& b);

bool all_finite(const Matrix& a);

/// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

} // namespace dires
