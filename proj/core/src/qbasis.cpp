#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "dires/errors.hpp"
#include "dires/linalg.hpp"

namespace dires {

namespace {

QBasis householder_q(int n) {
    // Reflector mapping (1/sqrt n) 1 onto e1; rows 2..n span the complement
    // of the all-ones direction.
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    v[0] -= 1.0;
    double vtv = 0.0;
    for (double e : v) {
        vtv += e * e;
    }
    const double scale = 2.0 / vtv;
    Matrix q(n - 1, n);
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            q(i - 1, j) = (i == j ? 1.0 : 0.0) - scale * v[i] * v[j];
        }
    }
    return QBasis{std::move(q)};
}

QBasis random_q(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Matrix q(n - 1, n);
    const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
    for (int row = 0; row < n - 1; ++row) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 64) {
                throw ConvergenceError("build_q: could not draw an independent random vector");
            }
            std::vector<double> v(n);
            for (double& e : v) {
                e = gauss(rng);
            }
            // Two rounds of modified Gram-Schmidt against 1/sqrt(n) and the
            // previous rows.
            for (int round = 0; round < 2; ++round) {
                double dot = 0.0;
                for (double e : v) {
                    dot += e * inv_sqrt_n;
                }
                for (double& e : v) {
                    e -= dot * inv_sqrt_n;
                }
                for (int prev = 0; prev < row; ++prev) {
                    double d = 0.0;
                    for (int j = 0; j < n; ++j) {
                        d += v[j] * q(prev, j);
                    }
                    for (int j = 0; j < n; ++j) {
                        v[j] -= d * q(prev, j);
                    }
                }
            }
            double norm = 0.0;
            for (double e : v) {
                norm += e * e;
            }
            norm = std::sqrt(norm);
            if (norm < 1e-8) {
                continue; // numerically dependent draw, retry
            }
            for (int j = 0; j < n; ++j) {
                q(row, j) = v[j] / norm;
            }
            break;
        }
    }
    return QBasis{std::move(q)};
}

} // namespace

QBasis build_q(int n, QVariant variant, std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("build_q: n must be at least 2");
    }
    return variant == QVariant::Deterministic ? householder_q(n) : random_q(n, seed);
}

} // namespace dires
