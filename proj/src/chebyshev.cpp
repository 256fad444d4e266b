#include "trpoly/chebyshev.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace trpoly {

namespace {

constexpr double kEndpointBand = 1e-8;

// U_n by forward recurrence; valid for any x, used outside [-1,1].
double u_recurrence(int n, double x) {
    double prev = 1.0, cur = 2.0 * x;
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// U'_n by the coupled recurrence; independent of the closed form.
double u_prime_recurrence(int n, double x) {
    if (n == 0) return 0.0;
    double u_prev = 1.0, u_cur = 2.0 * x;
    double d_prev = 0.0, d_cur = 2.0;
    for (int k = 1; k < n; ++k) {
        double u_next = 2.0 * x * u_cur - u_prev;
        double d_next = 2.0 * u_cur + 2.0 * x * d_cur - d_prev;
        u_prev = u_cur; u_cur = u_next;
        d_prev = d_cur; d_cur = d_next;
    }
    return d_cur;
}

}  // namespace

double chebyshev_u(int n, double x) {
    if (n < 0) {
        if (n == -1) return 0.0;          // U_{-1} == 0, needed by identity code
        throw std::invalid_argument("chebyshev_u: n < -1");
    }
    if (n == 0) return 1.0;
    if (n == 1) return 2.0 * x;
    if (std::abs(x - 1.0) <= kEndpointBand) return n + 1.0;
    if (std::abs(x + 1.0) <= kEndpointBand) return (n % 2 == 0) ? n + 1.0 : -(n + 1.0);
    if (std::abs(x) <= 1.0 - kEndpointBand) {
        const double t = std::acos(x);
        return std::sin((n + 1) * t) / std::sin(t);
    }
    return u_recurrence(n, x);
}

double chebyshev_u_prime(int n, double x) {
    if (n < 0) throw std::invalid_argument("chebyshev_u_prime: n < 0");
    if (n == 0) return 0.0;
    const double limit = static_cast<double>(n) * (n + 1.0) * (n + 2.0) / 3.0;
    if (std::abs(x - 1.0) <= kEndpointBand) return limit;
    if (std::abs(x + 1.0) <= kEndpointBand) return (n % 2 == 0) ? -limit : limit;
    if (std::abs(x) <= 1.0 - kEndpointBand) {
        return ((n + 2) * chebyshev_u(n - 1, x) - n * chebyshev_u(n + 1, x)) /
               (2.0 * (1.0 - x * x));
    }
    return u_prime_recurrence(n, x);
}

double chebyshev_t(int n, double x) {
    if (n < 0) throw std::invalid_argument("chebyshev_t: n < 0");
    if (n == 0) return 1.0;
    if (n == 1) return x;
    if (std::abs(x) <= 1.0) return std::cos(n * std::acos(x));
    double prev = 1.0, cur = x;
    if (n == 0) return prev;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double spectral_mu(int n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("spectral_mu: requires odd n >= 3, got " + std::to_string(n));
    // extended precision keeps the argument reduction error below one ulp
    // of the result (mu_3 = 1/2 exactly, etc.)
    return static_cast<double>(std::cos(2.0L * 3.141592653589793238462643383279503L / (n + 3)));
}

double spectral_nu(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("spectral_nu: requires even n >= 2, got " + std::to_string(n));
    static std::mutex cache_mutex;
    static std::map<int, double> cache;
    {
        std::lock_guard lock(cache_mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    const int m = n + 2;
    const auto g = [&](double x) {
        return (m + 2) * chebyshev_u(m - 1, x) - m * chebyshev_u(m + 1, x);
    };
    // The smallest positive root of U'_m lies below sin(pi/m) and above
    // sin(pi/(2(m+1))), so a tiny positive left endpoint is safe.
    double lo = 1e-3 * std::sin(M_PI / m);
    double hi = std::sin(M_PI / m);
    double glo = g(lo);
    if (glo != 0.0 && glo * g(hi) > 0.0)
        throw std::runtime_error("spectral_nu: no sign change in bracket (implementation bug)");
    for (int it = 0; it < 200 && glo != 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;  // interval at ulp width
        const double gm = g(mid);
        if (gm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    const double root = 0.5 * (lo + hi);
    std::lock_guard lock(cache_mutex);
    cache.emplace(n, root);
    return root;
}

double spectral_eta(int n) {
    const double nu = spectral_nu(n);
    return 1.0 - 2.0 * nu * nu;
}

SpectralParams spectral_params(int n) {
    if (n < 2) throw std::invalid_argument("spectral_params: n < 2");
    SpectralParams p;
    p.n = n;
    p.odd = (n % 2 != 0);
    if (p.odd) {
        p.mu = spectral_mu(n);
        if (std::abs(chebyshev_u((n + 1) / 2, p.mu)) > 1e-10 * (n + 3))
            throw std::logic_error("spectral_params: mu fails the root check");
    } else {
        p.nu = spectral_nu(n);
        p.eta = 1.0 - 2.0 * p.nu * p.nu;
        const double scale = 1e-8 * (n + 3.0) * (n + 3.0);
        if (std::abs(chebyshev_u_prime(n + 2, p.nu)) > scale)
            throw std::logic_error("spectral_params: nu fails the root check");
        if (std::abs(chebyshev_u_prime(n / 2 + 1, p.eta) - chebyshev_u_prime(n / 2, p.eta)) > scale)
            throw std::logic_error("spectral_params: eta fails the derivative-difference check");
    }
    return p;
}

std::array<double, 5> derivative_identity_residuals(int k, double x) {
    if (k < 1) throw std::invalid_argument("derivative_identity_residuals: k < 1");
    if (std::abs(x) >= 1.0)
        throw std::invalid_argument("derivative_identity_residuals: requires |x| < 1");

    const double dk = u_prime_recurrence(k, x);
    const double dk1 = u_prime_recurrence(k + 1, x);
    const double uk = chebyshev_u(k, x);
    const double uk1 = chebyshev_u(k + 1, x);
    const double ukm1 = chebyshev_u(k - 1, x);
    const double sp = std::sqrt((1.0 + x) / 2.0);
    const double sm = std::sqrt((1.0 - x) / 2.0);
    const double d2k = chebyshev_u_prime(2 * k + 2, sp);
    const double d2m = chebyshev_u_prime(2 * k + 2, sm);
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;

    const auto rel = [](double lhs, double rhs) {
        return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    };

    std::array<double, 5> r{};
    // two equivalent closed forms for U'_k
    const double a1 = ((k + 2) * ukm1 - k * uk1) / (2.0 * (1.0 - x * x));
    const double a2 = ((k + 1) * ukm1 - k * x * uk) / (1.0 - x * x);
    r[0] = std::max(rel(dk, a1), rel(dk, a2));
    // difference / sum / squared-difference forms
    const double b1 = ((k + 2) * uk + (k + 1) * uk1) / (1.0 + x);
    const double b2 = ((k + 2) * uk - (k + 1) * uk1) / (1.0 - x);
    const double b3 = ((k + 2.0) * (k + 2.0) * uk * uk - (k + 1.0) * (k + 1.0) * uk1 * uk1) /
                      (1.0 - x * x);
    r[1] = std::max({rel(dk1 - dk, b1), rel(dk1 + dk, b2), rel(dk1 * dk1 - dk * dk, b3)});
    // half-angle forms
    r[2] = rel(dk1 + dk, std::sqrt(2.0) / (4.0 * std::sqrt(1.0 + x)) * d2k);
    r[3] = rel(dk1 - dk, sgn * std::sqrt(2.0) / (4.0 * std::sqrt(1.0 - x)) * d2m);
    r[4] = rel(dk1 * dk1 - dk * dk, sgn / (8.0 * std::sqrt(1.0 - x * x)) * d2k * d2m);
    return r;
}

std::array<double, 4> mixed_sine_residuals(double a, double b, double t) {
    std::array<double, 4> r{};
    r[0] = std::abs(b * b * (1.0 - std::cos(2 * a * t)) + a * a * (1.0 - std::cos(2 * b * t)) +
                    2 * a * b * (std::cos((a - b) * t) - std::cos((a + b) * t)));
    r[1] = std::abs(b * b * std::sin(2 * a * t) + a * a * std::sin(2 * b * t) +
                    2 * a * b * std::sin((a + b) * t));
    r[2] = std::abs(b * std::sin(2 * a * t) + a * std::sin(2 * b * t) +
                    (a + b) * std::sin((a + b) * t) - (a - b) * std::sin((a - b) * t));
    r[3] = std::abs(b * std::cos(2 * a * t) + a * std::cos(2 * b * t) +
                    (a + b) * std::cos((a + b) * t) - (a + b) * (1.0 + std::cos((a - b) * t)));
    const double scale = std::max(1.0, a * a + b * b);
    for (auto& v : r) v /= scale;
    return r;
}

}  // namespace trpoly
