#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "trpoly/chebyshev.hpp"
#include "trpoly/rng.hpp"

using namespace trpoly;

namespace {

// Reference evaluation by plain recurrence, kept independent of the
// library's branch selection.
double u_ref(int n, double x) {
    if (n < 0) return n == -1 ? 0.0 : NAN;
    double a = 1.0, b = 2.0 * x;
    if (n == 0) return a;
    for (int k = 1; k < n; ++k) {
        const double c = 2.0 * x * b - a;
        a = b;
        b = c;
    }
    return b;
}

}  // namespace

TEST_CASE("second-kind values") {
    CHECK(chebyshev_u(0, 0.3) == 1.0);
    CHECK(chebyshev_u(1, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(chebyshev_u(2, std::cos(M_PI / 3))) < 1e-14);  // root of 4x^2-1
    CHECK(chebyshev_u(4, 1.0) == 5.0);
    CHECK(chebyshev_u(5, -1.0) == -6.0);
    CHECK(chebyshev_u(3, 1.2) == doctest::Approx(u_ref(3, 1.2)).epsilon(1e-15));
}

TEST_CASE("derivative values") {
    CHECK(chebyshev_u_prime(1, 0.7) == doctest::Approx(2.0).epsilon(1e-15));
    // 24 x^2 - 4 at 0.2, and the (k+2)U_{k-1} - kU_{k+1} route
    CHECK(chebyshev_u_prime(3, 0.2) == doctest::Approx(-3.04).epsilon(1e-14));
    const double via_u = (5.0 * chebyshev_u(2, 0.2) - 3.0 * chebyshev_u(4, 0.2)) / (2.0 * 0.96);
    CHECK(chebyshev_u_prime(3, 0.2) == doctest::Approx(via_u).epsilon(1e-14));
    CHECK(std::abs(chebyshev_u_prime(4, spectral_nu(2))) < 1e-10);
    // endpoint limits n(n+1)(n+2)/3
    CHECK(chebyshev_u_prime(4, 1.0) == doctest::Approx(40.0).epsilon(1e-15));
    CHECK(chebyshev_u_prime(4, -1.0) == doctest::Approx(-40.0).epsilon(1e-15));
    CHECK(chebyshev_u_prime(5, -1.0) == doctest::Approx(70.0).epsilon(1e-15));
}

TEST_CASE("first-kind values and mixed identity") {
    CHECK(chebyshev_t(0, 0.9) == 1.0);
    CHECK(chebyshev_t(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
    const double x = 0.37;
    CHECK(std::abs(chebyshev_t(3, x) - (x * chebyshev_u(2, x) - chebyshev_u(1, x))) < 1e-14);
}

TEST_CASE("spectral mu") {
    CHECK(spectral_mu(3) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(spectral_mu(5) == doctest::Approx(std::cos(M_PI / 4)).epsilon(1e-15));
    CHECK(std::abs(chebyshev_u(3, spectral_mu(5))) < 1e-12);
    CHECK_THROWS_AS(spectral_mu(4), std::invalid_argument);
    CHECK_THROWS_AS(spectral_mu(1), std::invalid_argument);
}

TEST_CASE("spectral nu and eta") {
    CHECK(spectral_nu(2) == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-14));
    CHECK(spectral_nu(2) < std::sin(M_PI / 4));
    CHECK(spectral_eta(2) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(spectral_eta(2) == doctest::Approx(1.0 - 2.0 * (3.0 / 8.0)).epsilon(1e-14));
    CHECK_THROWS_AS(spectral_nu(3), std::invalid_argument);
    CHECK_THROWS_AS(spectral_eta(5), std::invalid_argument);

    // brute-force scan oracles, step 1e-6
    {
        const double nu4 = spectral_nu(4);
        double lo = 0.0, hi = 0.0;
        double prev = chebyshev_u_prime(6, 1e-6);
        for (double x = 2e-6; x < 1.0; x += 1e-6) {
            const double cur = chebyshev_u_prime(6, x);
            if (prev * cur <= 0.0) {
                lo = x - 1e-6;
                hi = x;
                break;
            }
            prev = cur;
        }
        CHECK(lo < nu4);
        CHECK(nu4 < hi);
    }
    {
        const double eta4 = spectral_eta(4);
        const auto diff = [](double x) {
            return chebyshev_u_prime(3, x) - chebyshev_u_prime(2, x);
        };
        double hi_root = -2.0;
        double prev = diff(-1.0 + 1e-6);
        for (double x = -1.0 + 2e-6; x < 1.0; x += 1e-6) {
            const double cur = diff(x);
            if (prev * cur <= 0.0) hi_root = x;
            prev = cur;
        }
        CHECK(std::abs(eta4 - hi_root) < 2e-6);
        CHECK(eta4 == doctest::Approx((1.0 + std::sqrt(7.0)) / 6.0).epsilon(1e-13));
    }
}

TEST_CASE("spectral params invariants over a range") {
    for (int n = 2; n <= 80; ++n) {
        const SpectralParams p = spectral_params(n);
        if (p.odd) {
            CHECK(std::abs(chebyshev_u((n + 1) / 2, p.mu)) <= 1e-10 * (n + 3));
        } else {
            CHECK(std::abs(chebyshev_u_prime(n + 2, p.nu)) <= 1e-8 * (n + 3.0) * (n + 3.0));
            CHECK(p.eta == doctest::Approx(1.0 - 2.0 * p.nu * p.nu).epsilon(1e-15));
            CHECK(std::abs(chebyshev_u_prime(n / 2 + 1, p.eta) -
                           chebyshev_u_prime(n / 2, p.eta)) <= 1e-8 * (n + 3.0) * (n + 3.0));
            CHECK(p.nu > 0.0);
            CHECK(p.nu < 1.0);
            // arccos(eta) solves the classical angle equation
            //   (n+4) sin((n+2)t/2) + (n+2) sin((n+4)t/2) = 0
            const double t = std::acos(p.eta);
            const double rs = (n + 4.0) * std::sin((n + 2.0) / 2.0 * t) +
                              (n + 2.0) * std::sin((n + 4.0) / 2.0 * t);
            CHECK(std::abs(rs) <= 1e-9 * (n + 3.0) * (n + 3.0));
        }
    }
}

TEST_CASE("three-term recurrence on random points") {
    SplitMix64 rng(101);
    for (int trial = 0; trial < 400; ++trial) {
        const double x = rng.uniform(-2.0, 2.0);
        const int n = 1 + static_cast<int>(rng.next() % 59);
        const double um = chebyshev_u(n - 1, x);
        const double u = chebyshev_u(n, x);
        const double up = chebyshev_u(n + 1, x);
        const double scale = std::max({1.0, std::abs(um), std::abs(u), std::abs(up)});
        CHECK(std::abs(up - 2.0 * x * u + um) <= 1e-12 * scale);
    }
}

TEST_CASE("trig consistency") {
    SplitMix64 rng(102);
    for (int trial = 0; trial < 300; ++trial) {
        const double t = rng.uniform(1e-3, M_PI - 1e-3);
        const int n = static_cast<int>(rng.next() % 80);
        const double x = std::cos(t);
        const double ref = std::sin((n + 1) * t) / std::sin(t);
        CHECK(std::abs(chebyshev_u(n, x) - ref) <= 1e-11 * (n + 1));
    }
}

TEST_CASE("derivative against central differences") {
    SplitMix64 rng(103);
    const double h = 1e-6;
    for (int trial = 0; trial < 200; ++trial) {
        const double x = rng.uniform(-0.99, 0.99);
        const int n = 1 + static_cast<int>(rng.next() % 60);
        const double fd = (chebyshev_u(n, x + h) - chebyshev_u(n, x - h)) / (2.0 * h);
        CHECK(std::abs(chebyshev_u_prime(n, x) - fd) <= 1e-5 * std::max(1.0, std::abs(fd)));
    }
}

TEST_CASE("derivative root bounds") {
    for (int n = 4; n <= 60; n += 2) {
        CHECK(spectral_nu(n) < std::sin(M_PI / (n + 2)));
        // maximal positive root of U'_n by downward scan
        const double cap = std::cos(M_PI / n);
        double hi_root = -1.0;
        const int steps = 200000;
        double prev = chebyshev_u_prime(n, 1.0 - 1.0 / steps);
        for (int k = steps - 2; k >= 1; --k) {
            const double x = static_cast<double>(k) / steps;
            const double cur = chebyshev_u_prime(n, x);
            if (prev * cur <= 0.0) {
                hi_root = x + 1.0 / steps;
                break;
            }
            prev = cur;
        }
        REQUIRE(hi_root > 0.0);
        CHECK(hi_root < cap);
    }
}

TEST_CASE("sine-pair identities at scanned roots") {
    for (int n : {2, 4, 6, 20, 40, 60}) {
        const double a = (n + 2) / 2.0, b = (n + 4) / 2.0;
        const auto f = [&](double t) { return b * std::sin(a * t) + a * std::sin(b * t); };
        const int steps = 20000;
        int roots_found = 0;
        for (int k = 1; k < steps; ++k) {
            double lo = M_PI * k / steps, hi = M_PI * (k + 1) / steps;
            if (f(lo) == 0.0 || f(lo) * f(hi) > 0.0) continue;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (f(mid) * f(lo) > 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            const double t = 0.5 * (lo + hi);
            ++roots_found;
            for (double r : mixed_sine_residuals(a, b, t)) CHECK(r <= 1e-9);
        }
        CHECK(roots_found > 0);
    }
}

TEST_CASE("concurrent evaluation is consistent") {
    // pure functions plus the internal root cache; hammer them from
    // several threads and compare against single-threaded values
    std::vector<double> expected;
    for (int n = 2; n <= 30; n += 2) expected.push_back(spectral_nu(n + 60));
    std::atomic<int> mismatches{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([&, t] {
            SplitMix64 rng(900 + t);
            for (int rep = 0; rep < 200; ++rep) {
                size_t idx = 0;
                for (int n = 2; n <= 30; n += 2, ++idx)
                    if (spectral_nu(n + 60) != expected[idx]) ++mismatches;
                const double x = rng.uniform(-0.99, 0.99);
                const int k = 1 + static_cast<int>(rng.next() % 40);
                if (std::abs(chebyshev_u(k + 1, x) - 2.0 * x * chebyshev_u(k, x) +
                             chebyshev_u(k - 1, x)) > 1e-10 * (k + 2))
                    ++mismatches;
            }
        });
    }
    for (auto& th : pool) th.join();
    CHECK(mismatches.load() == 0);
}

TEST_CASE("derivative identity residuals") {
    for (double r : derivative_identity_residuals(1, 0.0)) CHECK(r <= 1e-12);
    for (double r : derivative_identity_residuals(5, 0.3)) CHECK(r <= 1e-10);
    for (double r : derivative_identity_residuals(8, -0.6)) CHECK(r <= 1e-10);
    SplitMix64 rng(104);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(rng.next() % 60);
        const double x = rng.uniform(-0.99, 0.99);
        for (double r : derivative_identity_residuals(k, x)) CHECK(r <= 1e-10);
    }
}
