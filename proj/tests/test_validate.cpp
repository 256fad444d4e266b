#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "trpoly/chebyshev.hpp"
#include "trpoly/extremal.hpp"
#include "trpoly/pencil.hpp"
#include "trpoly/rng.hpp"
#include "trpoly/validate.hpp"

using namespace trpoly;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

TEST_CASE("grid certification") {
    {
        const GridScan s = certify_typically_real({1.0, 1.0, 0.5}, 10000);
        CHECK(s.pass);
        CHECK(s.min_value >= -1e-10);
        CHECK(s.min_value <= 5e-8);  // quadratic tangency sampled at pi/10001 spacing
        CHECK(std::abs(s.argmin_t - 2.0 * M_PI / 3.0) < 0.01);  // zero at t = 2 pi/3
    }
    {
        const GridScan s = certify_typically_real({1.0, 0.5}, 10000);
        CHECK(s.pass);
        CHECK(s.min_value >= -1e-10);
        CHECK(s.argmin_t > 3.0);  // Im = sin t (1 + cos t) -> 0 only as t -> pi
    }
    {
        const GridScan s = certify_typically_real({1.0, 2.0}, 10000);
        CHECK_FALSE(s.pass);  // |a_2| = 2 breaks the even bound 1/2
        const double at34 = std::sin(3.0 * M_PI / 4.0) + 2.0 * std::sin(3.0 * M_PI / 2.0);
        CHECK(s.min_value <= at34 + 1e-12);
    }
    CHECK_THROWS_AS(certify_typically_real({1.0, 0.1}, 100), std::invalid_argument);
}

TEST_CASE("spectral factorization, small cases") {
    {
        const auto d = fejer_riesz_factorize({1, 0, 0, 0});
        CHECK(d == std::vector<double>{1, 0, 0, 0});
    }
    {
        const auto d = fejer_riesz_factorize({2, 1});
        CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(d[1] == doctest::Approx(1.0).epsilon(1e-10));
    }
    {
        const auto d = fejer_riesz_factorize({3, 2, 1});
        const auto g = gammas_from_factor(d);
        CHECK(max_abs_diff(g, {3, 2, 1}) <= 1e-10);
        CHECK(d[0] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d[1] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(d[2] == doctest::Approx(1.0).epsilon(1e-9));
    }
    // 1 + 1.2 cos 2t is negative near t = pi/2
    CHECK_THROWS_AS(fejer_riesz_factorize({1.0, 0.0, 0.6}), std::runtime_error);
    {
        // a hair below zero but inside the precheck slack: clamp, no NaN
        const auto d = fejer_riesz_factorize({-1e-10, 0.0});
        CHECK(d[0] == 0.0);
        CHECK(d[1] == 0.0);
    }
}

TEST_CASE("spectral factorization round trip on random factors") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 19);
        std::vector<double> d0(n);
        for (auto& v : d0) v = rng.uniform(-1.0, 1.0);
        const auto g = gammas_from_factor(d0);
        const auto d = fejer_riesz_factorize(g);
        const auto back = gammas_from_factor(d);
        CHECK(max_abs_diff(back, g) <= 1e-8 * std::max(1.0, max_abs(g)));
    }
}

TEST_CASE("factor of the extremal gammas is the odd eigenvector") {
    for (int n = 3; n <= 39; n += 2) {
        const auto z0 = eigenvector_odd(n, spectral_mu(n));
        const auto g = gammas_from_factor(z0);
        const auto d = fejer_riesz_factorize(g);
        // collinear up to sign after sup-normalization
        const double s0 = max_abs(z0), s1 = max_abs(d);
        double plus = 0.0, minus = 0.0;
        for (int i = 0; i < n; ++i) {
            plus = std::max(plus, std::abs(d[i] / s1 - z0[i] / s0));
            minus = std::max(minus, std::abs(d[i] / s1 + z0[i] / s0));
        }
        CHECK(std::min(plus, minus) <= 1e-7);
    }
}

TEST_CASE("pencil residual") {
    CHECK(pencil_residual(3, 1.0, {1, 1, 1}) <= 1e-15);
    CHECK(pencil_residual(2, 0.5, {1, 1}) == 0.0);
    CHECK(pencil_residual(2, 0.4, {1, 1}) == doctest::Approx(0.1).epsilon(1e-14));
    CHECK_THROWS_AS(pencil_residual(2, 0.4, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(pencil_residual(3, 0.4, {1, 1}), std::invalid_argument);
}

TEST_CASE("certification reports") {
    {
        const CertificationReport r = certify(2);
        CHECK(r.bound_closed == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(r.passed);
    }
    {
        const CertificationReport r = certify(3);
        CHECK(r.bound_closed == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(r.passed);
    }
    {
        const CertificationReport r = certify(40);
        CHECK(std::abs(r.bound_oracle - r.bound_closed) <= 1e-9);
        CHECK(r.passed);
    }
    for (int n : {4, 5, 11, 18, 27, 33, 46, 53, 60}) {
        const CertificationReport r = certify(n);
        CHECK(r.passed);
        CHECK(r.failed_stage.empty());
    }
    CHECK_THROWS_AS(certify(1), std::invalid_argument);
}

TEST_CASE("oracle agreement and monotone growth of the bound") {
    double prev_odd = 0.0, prev_even = 0.0;
    for (int n = 2; n <= 100; ++n) {
        const double b = sharp_bound(n);
        CHECK(b < 2.0);
        if (n % 2 == 1) {
            if (prev_odd > 0.0) CHECK(b > prev_odd);
            prev_odd = b;
        } else {
            if (prev_even > 0.0) CHECK(b > prev_even);
            prev_even = b;
        }
    }
    for (int n : {2, 3, 10, 31, 64, 100}) {
        const auto eig = generalized_eigen(n);
        CHECK(std::abs(eig.back().lambda - sharp_bound(n)) <= 1e-9);
    }
}

TEST_CASE("extremizer grid nonnegativity across degrees") {
    for (int n = 2; n <= 40; ++n) {
        const auto p = extremizer(n, Which::max);
        const GridScan s = certify_typically_real(p.coeffs, 10000);
        CHECK(s.pass);
        // the min variant is typically real as well
        const auto q = extremizer(n, Which::min);
        CHECK(certify_typically_real(q.coeffs, 10000).pass);
    }
}
