#include "trpoly/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "trpoly/chebyshev.hpp"

namespace trpoly {

Matrix BandPencil::dense_a() const {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    return m;
}

Matrix BandPencil::dense_b() const {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = b(i, j);
    return m;
}

BandPencil build_pencil(int n) {
    if (n < 2) throw std::invalid_argument("build_pencil: n < 2");
    return BandPencil{n};
}

std::vector<double> b_leading_minors(int n) {
    if (n < 1) throw std::invalid_argument("b_leading_minors: n < 1");
    // Bareiss elimination of 2B in 64-bit integers.  All divisions are
    // exact; minor k of 2B equals 2^k * minor k of B, so dividing by 2^k
    // afterwards is exact in binary64 too.
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        m[i][i] = 2;
        if (i + 2 < n) m[i][i + 2] = m[i + 2][i] = -1;
    }
    std::vector<double> out(n);
    std::int64_t prev = 1;
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            const std::int64_t piv = m[k - 1][k - 1];
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    m[i][j] = (piv * m[i][j] - m[i][k - 1] * m[k - 1][j]) / prev;
            prev = piv;
        }
        // m[k][k] is now the (k+1)x(k+1) leading minor of 2B.
        out[k] = std::ldexp(static_cast<double>(m[k][k]), -(k + 1));
    }
    return out;
}

Matrix phi_matrix(int n, double x) {
    if (n < 1) throw std::invalid_argument("phi_matrix: n < 1");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = 2.0 * x;
        if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -0.5;
        if (i + 2 < n) m(i, i + 2) = m(i + 2, i) = -x;
        if (i + 3 < n) m(i, i + 3) = m(i + 3, i) = 0.5;
    }
    return m;
}

std::vector<double> phi_apply(int n, double x, const std::vector<double>& z) {
    if (static_cast<int>(z.size()) != n)
        throw std::invalid_argument("phi_apply: size mismatch");
    std::vector<double> out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 2.0 * x * z[i];
        if (i >= 1) s -= 0.5 * z[i - 1];
        if (i + 1 < n) s -= 0.5 * z[i + 1];
        if (i >= 2) s -= x * z[i - 2];
        if (i + 2 < n) s -= x * z[i + 2];
        if (i >= 3) s += 0.5 * z[i - 3];
        if (i + 3 < n) s += 0.5 * z[i + 3];
        out[i] = s;
    }
    return out;
}

namespace {

template <class T>
std::array<T, 10> b_values(T x) {
    const T x2 = x * x;
    const T x4 = x2 * x2;
    const T x6 = x4 * x2;
    const T x8 = x4 * x4;
    std::array<T, 10> b{};
    b[0] = 8.0 * x2 - 3.0;
    b[1] = -24.0 * x4 + 16.0 * x2 - 13.0 / 4.0;
    b[2] = 32.0 * x6 - 24.0 * x4 + 8.0 * x2 - 1.0;
    b[3] = -16.0 * x8 + 6.0 * x4 - 4.0 * x2 + 7.0 / 8.0;
    b[4] = 16.0 * x8 - 16.0 * x6 + 12.0 * x4 - 5.0 * x2 + 7.0 / 8.0;
    b[5] = b[3] / 4.0;
    b[6] = b[2] / 16.0;
    b[7] = b[1] / 64.0;
    b[8] = b[0] / 256.0;
    b[9] = -1.0 / 1024.0;
    return b;
}

// Pivoted elimination in extended precision.  The order-20 recurrence has
// clustered unit-modulus characteristic roots that amplify seed and step
// roundoff by ~1e5 near x = +-1 for n around 60, so the determinant path
// carries extra mantissa bits internally and rounds once at the end.
long double lu_det_ext(int n, double x) {
    std::vector<long double> m(static_cast<size_t>(n) * n, 0.0L);
    const auto at = [&](int i, int j) -> long double& { return m[static_cast<size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i) {
        at(i, i) = 2.0L * x;
        if (i + 1 < n) at(i, i + 1) = at(i + 1, i) = -0.5L;
        if (i + 2 < n) at(i, i + 2) = at(i + 2, i) = -static_cast<long double>(x);
        if (i + 3 < n) at(i, i + 3) = at(i + 3, i) = 0.5L;
    }
    long double det = 1.0L;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(at(i, k)) > std::abs(at(piv, k))) piv = i;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
            det = -det;
        }
        const long double p = at(k, k);
        if (p == 0.0L) return 0.0L;
        det *= p;
        for (int i = k + 1; i < n; ++i) {
            const long double f = at(i, k) / p;
            if (f == 0.0L) continue;
            for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return det;
}

}  // namespace

double det_direct(int k, double x) {
    if (k < 1 || k > 24)
        throw std::invalid_argument("det_direct: requires 1 <= k <= 24, got " + std::to_string(k));
    return static_cast<double>(lu_det_ext(k, x));
}

double det_direct_scaled(int k, double x) {
    return static_cast<double>(std::ldexp(lu_det_ext(k, x), k + 2));
}

double det_recurrence_scaled(int n, double x) {
    if (n < 1) throw std::invalid_argument("det_recurrence: n < 1");
    if (n <= 20) return det_direct_scaled(n, x);
    const auto b = b_values<long double>(x);
    std::vector<long double> s(n + 1, 0.0L);
    for (int k = 1; k <= 20; ++k) s[k] = std::ldexp(lu_det_ext(k, x), k + 2);
    for (int k = 21; k <= n; ++k) {
        long double acc = 0.0L;
        for (int j = 1; j <= 10; ++j) acc += std::ldexp(b[j - 1], j) * s[k - 2 * j];
        s[k] = acc;
    }
    return static_cast<double>(s[n]);
}

double det_recurrence(int n, double x) { return std::ldexp(det_recurrence_scaled(n, x), -(n + 2)); }

double det_closed_scaled(int n, double x) {
    if (n < 1) throw std::invalid_argument("det_closed: n < 1");
    if (std::abs(x) >= 1.0)
        throw std::invalid_argument("det_closed: requires |x| < 1");
    if (n % 2 == 1) {
        const int h = (n + 1) / 2;
        return (n + 3.0) * chebyshev_u(h, x) * chebyshev_u_prime(h, x);
    }
    const double dp = chebyshev_u_prime(n / 2 + 1, x);
    const double dm = chebyshev_u_prime(n / 2, x);
    return dp * dp - dm * dm;
}

double det_closed(int n, double x) { return std::ldexp(det_closed_scaled(n, x), -(n + 2)); }

DetCoefficients b_coefficients(double x) {
    DetCoefficients dc;
    dc.b = b_values(x);
    const double x2 = x * x;
    dc.c[0] = 4.0 * x2 - 1.5;
    dc.c[1] = -4.0 * x2 * x2 + 2.0 * x2 - 0.5;
    dc.c[2] = -dc.c[1] / 2.0;
    dc.c[3] = -dc.c[0] / 8.0;
    dc.c[4] = 1.0 / 32.0;
    return dc;
}

std::array<std::complex<double>, 10> b_coefficients_complex(std::complex<double> x) {
    return b_values(x);
}

double psi_residual(PsiKind kind, int n, std::complex<double> z, double c0, double c1) {
    if (n < 11) throw std::invalid_argument("psi_residual: n < 11");
    const double az = std::abs(z);
    if (az < 0.5 || az > 2.0)
        throw std::invalid_argument("psi_residual: requires 0.5 <= |z| <= 2");
    const auto psi = [&](int k) -> std::complex<double> {
        switch (kind) {
            case PsiKind::affine: return c0 + c1 * static_cast<double>(k);
            case PsiKind::zpow: return (c0 + static_cast<double>(k)) * std::pow(z, 2 * k);
            case PsiKind::zinvpow: return (c0 + static_cast<double>(k)) * std::pow(z, -2 * k);
        }
        return {};
    };
    const auto bh = b_coefficients_complex(0.5 * (z + 1.0 / z));
    std::complex<double> acc = 0.0;
    double scale = std::abs(psi(n));
    for (int j = 1; j <= 10; ++j) {
        const std::complex<double> term = std::ldexp(1.0, j) * bh[j - 1] * psi(n - j);
        acc += term;
        scale = std::max(scale, std::abs(term));
    }
    return std::abs(psi(n) - acc) / std::max(scale, 1e-300);
}

namespace {

// Cyclic Jacobi on a dense symmetric matrix; V accumulates rotations.
void jacobi_eigen(Matrix& c, Matrix& v, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) v(i, j) = (i == j) ? 1.0 : 0.0;
    double frob = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) frob += c(i, j) * c(i, j);
    frob = std::sqrt(frob);
    const double target = 1e-13 * std::max(frob, 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * c(i, j) * c(i, j);
        if (std::sqrt(off) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = c(p, q);
                if (apq == 0.0) continue;
                const double theta = (c(q, q) - c(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double cs = 1.0 / std::sqrt(t * t + 1.0);
                const double sn = t * cs;
                for (int k = 0; k < n; ++k) {
                    const double ckp = c(k, p), ckq = c(k, q);
                    c(k, p) = cs * ckp - sn * ckq;
                    c(k, q) = sn * ckp + cs * ckq;
                }
                for (int k = 0; k < n; ++k) {
                    const double cpk = c(p, k), cqk = c(q, k);
                    c(p, k) = cs * cpk - sn * cqk;
                    c(q, k) = sn * cpk + cs * cqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = cs * vkp - sn * vkq;
                    v(k, q) = sn * vkp + cs * vkq;
                }
            }
        }
    }
}

}  // namespace

std::vector<EigenPair> generalized_eigen(int n) {
    if (n < 2 || n > 500)
        throw std::invalid_argument("generalized_eigen: requires 2 <= n <= 500");
    const BandPencil pen = build_pencil(n);

    // Cholesky of B (lower triangular L).
    Matrix L(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = pen.b(i, j);
            for (int k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
            if (i == j) {
                if (s <= 0.0)
                    throw std::runtime_error(
                        "generalized_eigen: nonpositive pivot in the B factorization (build bug)");
                L(i, i) = std::sqrt(s);
            } else {
                L(i, j) = s / L(j, j);
            }
        }
    }

    // C = L^{-1} A L^{-T}: forward-substitute twice.
    Matrix y = pen.dense_a();
    for (int col = 0; col < n; ++col) {          // Y = L^{-1} A
        for (int i = 0; i < n; ++i) {
            double s = y(i, col);
            for (int k = 0; k < i; ++k) s -= L(i, k) * y(k, col);
            y(i, col) = s / L(i, i);
        }
    }
    Matrix c(n, n);
    for (int row = 0; row < n; ++row) {          // C^T = L^{-1} Y^T
        for (int i = 0; i < n; ++i) {
            double s = y(row, i);
            for (int k = 0; k < i; ++k) s -= L(i, k) * c(row, k);
            c(row, i) = s / L(i, i);
        }
    }

    Matrix v(n, n);
    jacobi_eigen(c, v, n);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return c(a, a) < c(b, b); });

    std::vector<EigenPair> out(n);
    for (int idx = 0; idx < n; ++idx) {
        const int col = order[idx];
        EigenPair& ep = out[idx];
        ep.lambda = c(col, col);
        // z = L^{-T} v_col  (back substitution)
        ep.vector.assign(n, 0.0);
        for (int i = n - 1; i >= 0; --i) {
            double s = v(i, col);
            for (int k = i + 1; k < n; ++k) s -= L(k, i) * ep.vector[k];
            ep.vector[i] = s / L(i, i);
        }
        double zmax = 0.0;
        for (double zi : ep.vector) zmax = std::max(zmax, std::abs(zi));
        for (double& zi : ep.vector) zi /= zmax;
        double rmax = 0.0;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            if (i >= 1) s += (0.5) * ep.vector[i - 1];
            if (i + 1 < n) s += (0.5) * ep.vector[i + 1];
            if (i >= 3) s += (-0.5) * ep.vector[i - 3];
            if (i + 3 < n) s += (-0.5) * ep.vector[i + 3];
            s -= ep.lambda * ep.vector[i];
            if (i >= 2) s -= ep.lambda * (-0.5) * ep.vector[i - 2];
            if (i + 2 < n) s -= ep.lambda * (-0.5) * ep.vector[i + 2];
            rmax = std::max(rmax, std::abs(s));
        }
        ep.residual = rmax;
    }
    return out;
}

double sharp_bound(int n) {
    if (n < 2) throw std::invalid_argument("sharp_bound: n < 2");
    return (n % 2 == 1) ? 2.0 * spectral_mu(n) : 2.0 * spectral_eta(n);
}

}  // namespace trpoly
