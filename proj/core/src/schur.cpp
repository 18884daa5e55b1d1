#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dires/errors.hpp"
#include "dires/linalg.hpp"

namespace dires {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Reflector3 {
    double v0 = 1.0, v1 = 0.0, v2 = 0.0;
    double beta = 0.0;
};

/// Householder reflector (I - beta v v^T) mapping (x, y, z) onto a multiple
/// of e1. beta = 0 when (y, z) is already zero.
Reflector3 make_reflector(double x, double y, double z) {
    Reflector3 r;
    const double scale = std::abs(x) + std::abs(y) + std::abs(z);
    if (scale == 0.0 || (y == 0.0 && z == 0.0)) {
        return r;
    }
    x /= scale;
    y /= scale;
    z /= scale;
    const double norm = std::sqrt(x * x + y * y + z * z);
    const double alpha = x >= 0.0 ? -norm : norm;
    r.v0 = x - alpha;
    r.v1 = y;
    r.v2 = z;
    const double vtv = r.v0 * r.v0 + r.v1 * r.v1 + r.v2 * r.v2;
    r.beta = 2.0 / vtv;
    return r;
}

/// Applies (I - beta v v^T) to rows (r0, r1, r2) of m over columns [c0, c1].
void reflect_rows(Matrix& m, const Reflector3& p, int r0, int r1, int r2, int c0, int c1) {
    if (p.beta == 0.0) {
        return;
    }
    for (int c = c0; c <= c1; ++c) {
        double dot = p.v0 * m(r0, c) + p.v1 * m(r1, c);
        if (r2 >= 0) {
            dot += p.v2 * m(r2, c);
        }
        dot *= p.beta;
        m(r0, c) -= dot * p.v0;
        m(r1, c) -= dot * p.v1;
        if (r2 >= 0) {
            m(r2, c) -= dot * p.v2;
        }
    }
}

/// Applies (I - beta v v^T) to columns (c0, c1, c2) of m over rows [r0, r1].
void reflect_cols(Matrix& m, const Reflector3& p, int c0, int c1, int c2, int r0, int r1) {
    if (p.beta == 0.0) {
        return;
    }
    for (int r = r0; r <= r1; ++r) {
        double dot = p.v0 * m(r, c0) + p.v1 * m(r, c1);
        if (c2 >= 0) {
            dot += p.v2 * m(r, c2);
        }
        dot *= p.beta;
        m(r, c0) -= dot * p.v0;
        m(r, c1) -= dot * p.v1;
        if (c2 >= 0) {
            m(r, c2) -= dot * p.v2;
        }
    }
}

/// Rotation rows/cols p, p+1: G = [[cs, sn], [-sn, cs]] applied as a
/// similarity, with G accumulated into z.
void rotate(Matrix& t, Matrix& z, int p, double cs, double sn) {
    const int n = t.rows();
    for (int c = std::max(0, p - 1); c < n; ++c) {
        const double a = t(p, c);
        const double b = t(p + 1, c);
        t(p, c) = cs * a + sn * b;
        t(p + 1, c) = -sn * a + cs * b;
    }
    for (int r = 0; r <= std::min(p + 2, n - 1); ++r) {
        const double a = t(r, p);
        const double b = t(r, p + 1);
        t(r, p) = cs * a + sn * b;
        t(r, p + 1) = -sn * a + cs * b;
    }
    for (int r = 0; r < z.rows(); ++r) {
        const double a = z(r, p);
        const double b = z(r, p + 1);
        z(r, p) = cs * a + sn * b;
        z(r, p + 1) = -sn * a + cs * b;
    }
}

/// Splits the 2x2 diagonal block at p into two 1x1 blocks when its
/// eigenvalues are real; leaves complex-pair blocks untouched.
void standardize_block(Matrix& t, Matrix& z, int p) {
    const double a = t(p, p);
    const double b = t(p, p + 1);
    const double c = t(p + 1, p);
    const double d = t(p + 1, p + 1);
    if (c == 0.0) {
        return;
    }
    const double mu = 0.5 * (a + d);
    const double disc = 0.25 * (a - d) * (a - d) + b * c;
    if (disc < 0.0) {
        return; // genuine complex pair
    }
    const double root = std::sqrt(disc);
    const double lambda = mu >= 0.0 ? mu + root : mu - root;
    // Eigenvector from the better-conditioned of the two defining rows.
    double vx = b;
    double vy = lambda - a;
    const double wx = lambda - d;
    const double wy = c;
    if (wx * wx + wy * wy > vx * vx + vy * vy) {
        vx = wx;
        vy = wy;
    }
    const double norm = std::hypot(vx, vy);
    if (norm == 0.0) {
        return;
    }
    rotate(t, z, p, vx / norm, vy / norm);
    t(p + 1, p) = 0.0;
}

} // namespace

HessenbergResult hessenberg(const Matrix& a) {
    if (!a.square()) {
        throw std::invalid_argument("hessenberg: matrix must be square");
    }
    const int n = a.rows();
    Matrix h = a;
    Matrix u = Matrix::identity(n);

    for (int k = 0; k + 2 < n; ++k) {
        // Zero column k below the subdiagonal with one reflector on rows
        // k+1..n-1 (built up from 3-element reflectors would lose too much
        // structure, so use a full-length vector here).
        double norm = 0.0;
        for (int i = k + 1; i < n; ++i) {
            norm += h(i, k) * h(i, k);
        }
        norm = std::sqrt(norm);
        if (norm == 0.0) {
            continue;
        }
        const double x0 = h(k + 1, k);
        const double alpha = x0 >= 0.0 ? -norm : norm;
        std::vector<double> v(n - k - 1);
        v[0] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) {
            v[i - k - 1] = h(i, k);
        }
        double vtv = 0.0;
        for (double e : v) {
            vtv += e * e;
        }
        if (vtv == 0.0) {
            continue;
        }
        const double beta = 2.0 / vtv;

        // Left: h(k+1:n, k:n) -= beta v (v^T h)
        for (int c = k; c < n; ++c) {
            double dot = 0.0;
            for (int i = k + 1; i < n; ++i) {
                dot += v[i - k - 1] * h(i, c);
            }
            dot *= beta;
            for (int i = k + 1; i < n; ++i) {
                h(i, c) -= dot * v[i - k - 1];
            }
        }
        // Right: h(0:n, k+1:n) -= beta (h v) v^T
        for (int r = 0; r < n; ++r) {
            double dot = 0.0;
            for (int i = k + 1; i < n; ++i) {
                dot += h(r, i) * v[i - k - 1];
            }
            dot *= beta;
            for (int i = k + 1; i < n; ++i) {
                h(r, i) -= dot * v[i - k - 1];
            }
        }
        // Accumulate u <- u P.
        for (int r = 0; r < n; ++r) {
            double dot = 0.0;
            for (int i = k + 1; i < n; ++i) {
                dot += u(r, i) * v[i - k - 1];
            }
            dot *= beta;
            for (int i = k + 1; i < n; ++i) {
                u(r, i) -= dot * v[i - k - 1];
            }
        }
        for (int i = k + 2; i < n; ++i) {
            h(i, k) = 0.0;
        }
        h(k + 1, k) = alpha;
    }
    return {std::move(h), std::move(u)};
}

SchurResult real_schur(const Matrix& a) {
    if (!a.square()) {
        throw std::invalid_argument("real_schur: matrix must be square");
    }
    const int n = a.rows();
    if (n <= 1) {
        return {a, Matrix::identity(n)};
    }

    auto [t, z] = hessenberg(a);
    const double anorm = std::max(inf_norm(t), std::numeric_limits<double>::min());
    const int max_iterations = 30 * n;

    int hi = n - 1;
    int iterations = 0;
    while (hi > 0) {
        // Deflation scan: find the top of the active block.
        int lo = hi;
        while (lo > 0) {
            const double off = std::abs(t(lo, lo - 1));
            double tst = std::abs(t(lo - 1, lo - 1)) + std::abs(t(lo, lo));
            if (tst == 0.0) {
                tst = anorm;
            }
            if (off <= kEps * tst) {
                t(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }

        if (lo == hi) {
            --hi;
            iterations = 0;
            continue;
        }
        if (lo == hi - 1) {
            standardize_block(t, z, lo);
            hi -= 2;
            iterations = 0;
            continue;
        }

        ++iterations;
        if (iterations > max_iterations) {
            throw ConvergenceError("real_schur: QR iteration failed to converge after " +
                                   std::to_string(max_iterations) + " steps");
        }

        // Implicit double shift from the trailing 2x2, with an ad hoc
        // exceptional shift every 10 stalled iterations.
        double s, p;
        if (iterations % 10 == 0) {
            const double exc = std::abs(t(hi, hi - 1)) + std::abs(t(hi - 1, hi - 2));
            const double h11 = 0.75 * exc + t(hi, hi);
            s = 2.0 * h11;
            p = h11 * h11 + 0.4375 * exc * exc;
        } else {
            s = t(hi - 1, hi - 1) + t(hi, hi);
            p = t(hi - 1, hi - 1) * t(hi, hi) - t(hi - 1, hi) * t(hi, hi - 1);
        }

        double x = t(lo, lo) * t(lo, lo) + t(lo, lo + 1) * t(lo + 1, lo) - s * t(lo, lo) + p;
        double y = t(lo + 1, lo) * (t(lo, lo) + t(lo + 1, lo + 1) - s);
        double w = t(lo + 1, lo) * t(lo + 2, lo + 1);

        for (int k = lo; k <= hi - 2; ++k) {
            const Reflector3 refl = make_reflector(x, y, w);
            reflect_rows(t, refl, k, k + 1, k + 2, std::max(lo, k - 1), n - 1);
            reflect_cols(t, refl, k, k + 1, k + 2, 0, std::min(k + 3, hi));
            reflect_cols(z, refl, k, k + 1, k + 2, 0, n - 1);
            if (k > lo) {
                t(k + 1, k - 1) = 0.0;
                t(k + 2, k - 1) = 0.0;
            }
            x = t(k + 1, k);
            y = t(k + 2, k);
            w = k <= hi - 3 ? t(k + 3, k) : 0.0;
        }
        // Last 2x2 step of the chase.
        const Reflector3 refl = make_reflector(x, y, 0.0);
        reflect_rows(t, refl, hi - 1, hi, -1, std::max(lo, hi - 2), n - 1);
        reflect_cols(t, refl, hi - 1, hi, -1, 0, hi);
        reflect_cols(z, refl, hi - 1, hi, -1, 0, n - 1);
        if (hi - 2 > lo) {
            t(hi, hi - 2) = 0.0;
        }
    }

    // Clean below the quasi-diagonal so downstream block walks see exact
    // zeros.
    for (int i = 0; i + 1 < n; ++i) {
        for (int r = i + 2; r < n; ++r) {
            t(r, i) = 0.0;
        }
    }
    return {std::move(t), std::move(z)};
}

std::vector<std::complex<double>> schur_eigenvalues(const Matrix& t) {
    const int n = t.rows();
    std::vector<std::complex<double>> eig;
    eig.reserve(n);
    int i = 0;
    while (i < n) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            const double a = t(i, i);
            const double b = t(i, i + 1);
            const double c = t(i + 1, i);
            const double d = t(i + 1, i + 1);
            const double mu = 0.5 * (a + d);
            const double disc = 0.25 * (a - d) * (a - d) + b * c;
            if (disc < 0.0) {
                const double im = std::sqrt(-disc);
                eig.emplace_back(mu, im);
                eig.emplace_back(mu, -im);
            } else {
                const double root = std::sqrt(disc);
                eig.emplace_back(mu + root, 0.0);
                eig.emplace_back(mu - root, 0.0);
            }
            i += 2;
        } else {
            eig.emplace_back(t(i, i), 0.0);
            ++i;
        }
    }
    return eig;
}

} // namespace dires
