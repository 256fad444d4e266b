#include "trpoly/extremal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "trpoly/chebyshev.hpp"

namespace trpoly {

namespace {

constexpr double kFallbackRadius = 1e-4;

void require_odd(int n, const char* fn) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument(std::string(fn) + ": requires odd n >= 3");
}

void require_even(int n, const char* fn) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(std::string(fn) + ": requires even n >= 2");
}

}  // namespace

complexd horner(const std::vector<double>& coeffs, complexd z) {
    complexd acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc * z;
}

complexd TypicallyRealPolynomial::eval(complexd z) const { return horner(coeffs, z); }

std::vector<double> eigenvector_odd(int n, double x) {
    require_odd(n, "eigenvector_odd");
    std::vector<double> z(n);
    for (int k = 1; k <= (n - 1) / 2; ++k) {
        const double ukm1 = chebyshev_u(k - 1, x);
        z[2 * k - 2] = ukm1 * ukm1;
        z[2 * k - 1] = ukm1 * chebyshev_u(k, x);
    }
    z[n - 1] = 1.0;
    return z;
}

std::vector<double> eigenvector_even(int n, double x) {
    require_even(n, "eigenvector_even");
    const double u = chebyshev_u(n / 2, x);
    if (std::abs(u) < 1e-12)
        throw std::domain_error("eigenvector_even: U_{n/2}(x) vanishes");
    const double q = (n + 2.0) / (2.0 * u);
    const double den = q * q - 1.0;
    if (std::abs(den) < 1e-12)
        throw std::domain_error("eigenvector_even: q^2 - 1 vanishes");
    const double r = (n + 2.0) * (n + 4.0) / (4.0 * (n + 3.0)) / den;
    std::vector<double> z(n);
    for (int k = 1; k <= n / 2; ++k) {
        const double ukm1 = chebyshev_u(k - 1, x);
        z[2 * k - 2] = ukm1 * ukm1 - r * (chebyshev_u(2 * k - 1, x) + 2.0 * k);
        z[2 * k - 1] = ukm1 * chebyshev_u(k, x) - r * (chebyshev_u(2 * k, x) - 2.0 * k - 1.0);
    }
    return z;
}

std::vector<double> eigenvector_even_scaled(int n, double x) {
    require_even(n, "eigenvector_even_scaled");
    const double u = chebyshev_u(n / 2, x);
    const double v = chebyshev_u(n / 2 + 1, x);
    if (std::abs(v) < 1e-12)
        throw std::domain_error("eigenvector_even_scaled: U_{n/2+1}(x) vanishes");
    const double f = -0.5 * (chebyshev_u(n + 2, x) - n - 3.0);
    const double h = 0.5 * v * u;
    const double ratio = (n + 4.0) / (n + 2.0) * (u / v);
    std::vector<double> z(n);
    for (int k = 1; k <= n / 2; ++k) {
        const double ukm1 = chebyshev_u(k - 1, x);
        z[2 * k - 2] = f * ukm1 * ukm1 + h * (chebyshev_u(2 * k - 1, x) - ratio * 2.0 * k);
        z[2 * k - 1] = f * ukm1 * chebyshev_u(k, x) + h * (chebyshev_u(2 * k, x) - (2.0 * k + 1.0));
    }
    return z;
}

std::vector<double> gammas_from_factor(const std::vector<double>& delta) {
    const int n = static_cast<int>(delta.size());
    if (n < 1) throw std::invalid_argument("gammas_from_factor: empty factor");
    std::vector<double> g(n, 0.0);
    for (int s = 1; s <= n; ++s) {
        double acc = 0.0;
        for (int j = 1; j <= n - s + 1; ++j) acc += delta[j - 1] * delta[j + s - 2];
        g[s - 1] = acc;
    }
    return g;
}

std::vector<double> coefficients_from_gammas(const std::vector<double>& gamma) {
    const int n = static_cast<int>(gamma.size());
    if (n < 1) throw std::invalid_argument("coefficients_from_gammas: empty input");
    double gmax = 0.0;
    for (double g : gamma) gmax = std::max(gmax, std::abs(g));
    const auto at = [&](int s) { return s <= n ? gamma[s - 1] : 0.0; };
    const double norm = at(1) - at(3);
    if (std::abs(norm) < 1e-12 * gmax)
        throw std::domain_error("coefficients_from_gammas: degenerate normalization gamma_1 = gamma_3");
    std::vector<double> a(n);
    for (int l = 1; l <= n; ++l) a[l - 1] = (at(l) - at(l + 2)) / norm;
    return a;
}

std::vector<double> coefficients_odd_closed(int n) {
    require_odd(n, "coefficients_odd_closed");
    const double mu = spectral_mu(n);
    std::vector<double> a(n, 0.0);
    a[0] = 1.0;
    for (int j = 1; j <= (n - 1) / 2; ++j) {
        const double uj = chebyshev_u(j, mu);
        const double ujm1 = chebyshev_u(j - 1, mu);
        a[2 * j - 1] = 4.0 / (n + 3.0) * ujm1 *
                       (((n + 3.0) / 2.0 - j) * uj - mu * ((n + 1.0) / 2.0 - j) * ujm1);
        a[2 * j] = 2.0 / (n + 3.0) *
                   (mu * ujm1 * uj + ((n + 3.0) / 2.0 - j) * uj * uj -
                    ((n + 1.0) / 2.0 - j) * ujm1 * ujm1);
    }
    const double s = std::sin(2.0 * M_PI / (n + 3));
    a[n - 1] = 4.0 / (n + 3.0) * s * s;
    return a;
}

TypicallyRealPolynomial extremizer(int n, Which which) {
    if (n < 2) throw std::invalid_argument("extremizer: n < 2");
    TypicallyRealPolynomial p;
    p.degree = n;
    p.which = which;
    if (n % 2 == 1) {
        p.coeffs = coefficients_odd_closed(n);
    } else {
        p.coeffs = coefficients_from_gammas(gammas_from_factor(eigenvector_even(n, spectral_eta(n))));
    }
    if (which == Which::min)
        for (int j = 2; j <= n; j += 2) p.coeffs[j - 1] = -p.coeffs[j - 1];
    return p;
}

namespace {

complexd compact_odd_rational(int n, complexd z) {
    const double alpha = 2.0 * M_PI / (n + 3);
    const double mu = std::cos(alpha);
    const double s = std::sin(alpha);
    const complexd den = 1.0 - 2.0 * mu * z + z * z;
    const complexd p1 = z / den;
    const complexd p2 = 4.0 / (n + 3.0) * s * s * z * z * z / (1.0 - z * z) *
                        (1.0 - std::pow(z, n + 3)) / (den * den);
    return p1 + p2;
}

complexd compact_even_rational(int n, complexd z, double eta) {
    const double g1 = 2.0 * (1.0 - eta);
    const double g2 = 2.0 / (n + 3.0) * (-2.0 * eta * eta - 2.0 * (n + 3.0) * eta + n + 5.0);
    const double qn = 2.0 * (1.0 - eta * eta) / ((n + 2.0) * (n + 3.0) * (n + 4.0));
    const complexd z2 = z * z;
    const complexd den = z2 + 1.0 - 2.0 * eta * z;
    const complexd onez = 1.0 + z;
    const complexd p1 =
        (z + z2 * z2 * z + g1 * (z2 + z2 * z2) + g2 * z2 * z) / (onez * onez * den * den);
    const double bp = (n + 4.0) / 2.0;
    const double bm = (n + 2.0) / 2.0;
    const complexd bracket = bp * bp * (1.0 - std::pow(z, n + 2)) +
                             bm * bm * (1.0 - std::pow(z, n + 4)) +
                             (n + 2.0) * (n + 4.0) / 2.0 * (z - std::pow(z, n + 3));
    const complexd p2 =
        qn * 8.0 * z2 * z2 / ((1.0 - z) * onez * onez * onez * den * den) * bracket;
    return p1 + p2;
}

bool near(complexd z, complexd w) { return std::abs(z - w) < kFallbackRadius; }

}  // namespace

complexd compact_eval_odd(int n, complexd z) {
    require_odd(n, "compact_eval_odd");
    const double alpha = 2.0 * M_PI / (n + 3);
    const complexd ea{std::cos(alpha), std::sin(alpha)};
    if (near(z, 1.0) || near(z, -1.0) || near(z, ea) || near(z, std::conj(ea)))
        return horner(coefficients_odd_closed(n), z);
    return compact_odd_rational(n, z);
}

complexd compact_eval_even(int n, complexd z) {
    require_even(n, "compact_eval_even");
    const double eta = spectral_eta(n);
    const double theta = std::acos(eta);
    const complexd et{std::cos(theta), std::sin(theta)};
    if (near(z, 1.0) || near(z, -1.0) || near(z, et) || near(z, std::conj(et)))
        return horner(extremizer(n, Which::max).coeffs, z);
    return compact_even_rational(n, z, eta);
}

double kernel_on_circle(int n, double t) {
    if (n < 2) throw std::invalid_argument("kernel_on_circle: n < 2");
    if (!(t > 0.0 && t < M_PI))
        throw std::invalid_argument("kernel_on_circle: requires 0 < t < pi");
    const double c = std::cos(t);
    const bool odd = (n % 2 == 1);
    const double spectral = odd ? spectral_mu(n) : spectral_eta(n);
    if (std::abs(c - spectral) < kFallbackRadius || std::abs(t - M_PI) < kFallbackRadius) {
        const complexd z{c, std::sin(t)};
        return horner(extremizer(n, Which::max).coeffs, z).imag();
    }
    if (odd) {
        const double alpha = 2.0 * M_PI / (n + 3);
        const double s = std::sin(alpha);
        const double num = std::sin((n + 3) * t / 2.0);
        const double d = c - spectral;
        return s * s / (n + 3.0) * num * num / (std::sin(t) * d * d);
    }
    const double eta = spectral;
    const double qn = 2.0 * (1.0 - eta * eta) / ((n + 2.0) * (n + 3.0) * (n + 4.0));
    const double br =
        (n + 4.0) / 2.0 * std::sin((n + 2.0) / 2.0 * t) + (n + 2.0) / 2.0 * std::sin((n + 4.0) / 2.0 * t);
    const double d = c - eta;
    return qn / ((1.0 + c) * std::sin(t)) * br * br / (d * d);
}

std::array<double, 2> pair_sum_residuals(int n, int j) {
    require_odd(n, "pair_sum_residuals");
    if (j < 1 || j > (n - 1) / 2)
        throw std::invalid_argument("pair_sum_residuals: requires 1 <= j <= (n-1)/2");
    const double mu = spectral_mu(n);
    const double onem = 1.0 - mu * mu;
    double sum_a = 0.0, sum_b = 0.0;
    for (int k = 1; k <= (n - 1) / 2 - j; ++k) {
        sum_a += chebyshev_u(k, mu) * chebyshev_u(k + j, mu);
        sum_b += chebyshev_u(k - 1, mu) * chebyshev_u(k + j, mu);
    }
    const double rhs_a = (((n - 3.0) / 2.0 - j) * mu * chebyshev_u(j - 1, mu) -
                          ((n - 1.0) / 2.0 - j) * chebyshev_u(j - 2, mu) +
                          2.0 * mu * mu * chebyshev_u(j, mu)) /
                         onem;
    const double rhs_b = (((n + 3.0) / 2.0 - j) * mu * chebyshev_u(j, mu) -
                          ((n + 1.0) / 2.0 - j) * chebyshev_u(j - 1, mu)) /
                         onem;
    const auto rel = [](double lhs, double rhs) {
        return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    };
    return {rel(2.0 * sum_a, rhs_a), rel(2.0 * sum_b, rhs_b)};
}

double squared_sum_residual(int m) {
    if (m < 0) throw std::invalid_argument("squared_sum_residual: m < 0");
    const double x = std::cos(M_PI / (m + 2));
    double acc = 0.0;
    for (int j = 0; j <= m; ++j) {
        const double u = chebyshev_u(j, x);
        acc += u * u;
    }
    const double s = std::sin(M_PI / (m + 2));
    const double rhs = (m + 2.0) / (2.0 * s * s);
    return std::abs(acc - rhs) / rhs;
}

namespace {

// Laurent polynomial with a fixed lowest power; exact differentiation.
struct Laurent {
    int low = 0;                     // power of the first coefficient
    std::vector<double> c;           // c[i] multiplies z^{low+i}

    complexd eval(complexd z) const {
        complexd acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
        return acc * std::pow(z, low);
    }
    Laurent diff() const {
        Laurent d;
        d.low = low - 1;
        d.c.resize(c.size());
        for (size_t i = 0; i < c.size(); ++i) d.c[i] = (low + static_cast<int>(i)) * c[i];
        return d;
    }
};

}  // namespace

std::array<double, 6> compact_odd_singularity_residuals(int n) {
    require_odd(n, "compact_odd_singularity_residuals");
    const double alpha = 2.0 * M_PI / (n + 3);
    const double y = std::cos(alpha);
    // R(z) = z (1-z^2)(1 + z^2 - 2 y z) + 4 (1-y^2)/(n+3) z^3 (1 - z^{n+3})
    Laurent r;
    r.low = 1;
    r.c.assign(n + 6, 0.0);
    // z (1 - z^2)(1 + z^2 - 2yz) = z - 2y z^2 + 2y z^4 - z^5
    r.c[0] += 1.0;
    r.c[1] += -2.0 * y;
    r.c[3] += 2.0 * y;
    r.c[4] += -1.0;
    const double k = 4.0 * (1.0 - y * y) / (n + 3.0);
    r.c[2] += k;           // z^3
    r.c[n + 5] += -k;      // z^{n+6}
    const Laurent rp = r.diff();
    const complexd ea{std::cos(alpha), std::sin(alpha)};
    return {std::abs(r.eval(1.0)),  std::abs(r.eval(-1.0)), std::abs(r.eval(ea)),
            std::abs(r.eval(std::conj(ea))), std::abs(rp.eval(ea)), std::abs(rp.eval(std::conj(ea)))};
}

std::array<double, 8> compact_even_singularity_residuals(int n) {
    require_even(n, "compact_even_singularity_residuals");
    const double eta = spectral_eta(n);
    const double alpha = std::acos(eta);
    const double g1 = 2.0 * (1.0 - eta);
    const double g2 = 2.0 / (n + 3.0) * (-2.0 * eta * eta - 2.0 * (n + 3.0) * eta + n + 5.0);
    // R(z) = z^{-4} p(z)(1-z^2) + 16(1-eta^2)/((n+2)(n+3)(n+4)) phat(z)
    // p(z) = z + z^5 + g1 (z^2 + z^4) + g2 z^3
    Laurent r;
    r.low = -3;
    r.c.assign(n + 8, 0.0);
    const auto add = [&](int power, double v) { r.c[power - r.low] += v; };
    // z^{-4} p(z): powers -3..1; times (1 - z^2) adds powers -1..3 negated
    add(-3, 1.0); add(-2, g1); add(-1, g2); add(0, g1); add(1, 1.0);
    add(-1, -1.0); add(0, -g1); add(1, -g2); add(2, -g1); add(3, -1.0);
    const double k = 16.0 * (1.0 - eta * eta) / ((n + 2.0) * (n + 3.0) * (n + 4.0));
    const double bp = (n + 4.0) / 2.0, bm = (n + 2.0) / 2.0;
    add(0, k * (bp * bp + bm * bm));
    add(1, k * (n + 2.0) * (n + 4.0) / 2.0);
    add(n + 2, -k * bp * bp);
    add(n + 3, -k * (n + 2.0) * (n + 4.0) / 2.0);
    add(n + 4, -k * bm * bm);
    const Laurent rp = r.diff();
    const Laurent rpp = rp.diff();
    const complexd ea{std::cos(alpha), std::sin(alpha)};
    return {std::abs(r.eval(1.0)),
            std::abs(r.eval(-1.0)),
            std::abs(rp.eval(-1.0)),
            std::abs(rpp.eval(-1.0)),
            std::abs(r.eval(ea)),
            std::abs(r.eval(std::conj(ea))),
            std::abs(rp.eval(ea)),
            std::abs(rp.eval(std::conj(ea)))};
}

std::vector<double> extract_coefficients(const std::function<complexd(complexd)>& f, int n,
                                         double r) {
    if (n < 1) throw std::invalid_argument("extract_coefficients: n < 1");
    if (!(r > 0.0)) throw std::invalid_argument("extract_coefficients: r <= 0");
    const int m = n + 1;
    std::vector<complexd> vals(m);
    for (int k = 0; k < m; ++k) {
        const double th = 2.0 * M_PI * k / m;
        vals[k] = f(r * complexd{std::cos(th), std::sin(th)});
    }
    std::vector<double> a(n);
    for (int j = 1; j <= n; ++j) {
        complexd acc = 0.0;
        for (int k = 0; k < m; ++k) {
            const double th = -2.0 * M_PI * j * k / m;
            acc += vals[k] * complexd{std::cos(th), std::sin(th)};
        }
        a[j - 1] = (acc / static_cast<double>(m)).real() / std::pow(r, j);
    }
    return a;
}

}  // namespace trpoly
