#include <cmath>
#include <stdexcept>

#include "dires/errors.hpp"
#include "dires/linalg.hpp"

namespace dires {

Matrix expm(const Matrix& a, double t) {
    if (!a.square()) {
        throw std::invalid_argument("expm: matrix must be square");
    }
    if (!(t >= 0.0)) {
        throw std::invalid_argument("expm: t must be non-negative");
    }
    const int n = a.rows();
    Matrix b = t * a;
    if (!all_finite(b)) {
        throw std::invalid_argument("expm: non-finite input");
    }

    // Scale so |b/2^s| <= 0.5, apply a diagonal [6/6] Pade approximant,
    // square s times.
    const double norm = inf_norm(b);
    int squarings = 0;
    if (norm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
        b = std::ldexp(1.0, -squarings) * b;
    }

    constexpr int degree = 6;
    double coeff = 1.0;
    Matrix numerator = Matrix::identity(n);
    Matrix denominator = Matrix::identity(n);
    Matrix power = Matrix::identity(n);
    for (int k = 1; k <= degree; ++k) {
        coeff *= static_cast<double>(degree - k + 1) / ((2.0 * degree - k + 1) * k);
        power = power * b;
        numerator = numerator + coeff * power;
        if (k % 2 == 0) {
            denominator = denominator + coeff * power;
        } else {
            denominator = denominator - coeff * power;
        }
    }

    Matrix result = lu_solve(denominator, numerator);
    for (int i = 0; i < squarings; ++i) {
        result = result * result;
    }
    return result;
}

} // namespace dires
