#include "trpoly/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "trpoly/chebyshev.hpp"
#include "trpoly/extremal.hpp"
#include "trpoly/pencil.hpp"
#include "trpoly/rng.hpp"

namespace trpoly {

GridScan certify_typically_real(const std::vector<double>& coeffs, int grid) {
    if (grid < 1000) throw std::invalid_argument("certify_typically_real: grid < 1000");
    GridScan out;
    out.min_value = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= grid; ++k) {
        const double t = M_PI * k / (grid + 1.0);
        const double v = horner(coeffs, complexd{std::cos(t), std::sin(t)}).imag();
        if (v < out.min_value) {
            out.min_value = v;
            out.argmin_t = t;
        }
    }
    out.pass = out.min_value >= -1e-10;
    return out;
}

namespace {

using complexd = std::complex<double>;

complexd poly_eval(const std::vector<double>& c, complexd z) {
    complexd acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

// Diagonal similarity scaling (powers of two) so row and column norms
// match; Eigen's solver does not balance on its own and companion
// matrices of polynomials with widely varying coefficients need it.
void balance(Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    for (bool converged = false; !converged;) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                r += std::abs(m(i, j));
                c += std::abs(m(j, i));
            }
            if (r == 0.0 || c == 0.0) continue;
            double f = 1.0;
            const double s = r + c;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c > r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if (c + r < 0.95 * s) {
                converged = false;
                m.row(i) /= f;
                m.col(i) *= f;
            }
        }
    }
}

std::vector<complexd> companion_roots(const std::vector<double>& c) {
    const int deg = static_cast<int>(c.size()) - 1;
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -c[i] / c[deg];
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    balance(comp);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    std::vector<complexd> roots(deg);
    for (int i = 0; i < deg; ++i) roots[i] = es.eigenvalues()[i];
    return roots;
}

}  // namespace

std::vector<double> fejer_riesz_factorize(const std::vector<double>& gamma) {
    const int n = static_cast<int>(gamma.size());
    if (n < 1) throw std::invalid_argument("fejer_riesz_factorize: empty input");
    double gmax = 0.0;
    for (double g : gamma) gmax = std::max(gmax, std::abs(g));
    if (gmax == 0.0) throw std::runtime_error("fejer_riesz_factorize: zero input");

    // Nonnegativity precheck of gamma_1 + 2 sum gamma_k cos((k-1)t).
    const int scan = std::max(2048, 16 * n);
    for (int k = 0; k <= scan; ++k) {
        const double t = M_PI * k / scan;
        double v = gamma[0];
        for (int s = 2; s <= n; ++s) v += 2.0 * gamma[s - 1] * std::cos((s - 1) * t);
        if (v < -1e-9 * std::max(1.0, gmax))
            throw std::runtime_error("fejer_riesz_factorize: cosine polynomial is negative");
    }

    int m = n;
    while (m > 1 && std::abs(gamma[m - 1]) < 1e-14 * gmax) --m;
    std::vector<double> delta(n, 0.0);
    if (m == 1) {
        // gamma_1 may sit a roundoff below zero within the precheck slack
        delta[0] = std::sqrt(std::max(0.0, gamma[0]));
        return delta;
    }

    // q(z) = z^{m-1} * (gamma_1 + sum_s gamma_s (z^{s-1} + z^{1-s})), degree 2m-2.
    std::vector<double> q(2 * m - 1, 0.0);
    q[m - 1] = gamma[0];
    for (int s = 2; s <= m; ++s) q[m - 1 + (s - 1)] = q[m - 1 - (s - 1)] = gamma[s - 1];

    std::vector<double> qd(q.size() - 1), qdd(q.size() - 2);
    for (size_t i = 1; i < q.size(); ++i) qd[i - 1] = i * q[i];
    for (size_t i = 1; i < qd.size(); ++i) qdd[i - 1] = i * qd[i];
    double qscale = 0.0;
    for (double v : q) qscale += std::abs(v);

    const auto roots = companion_roots(q);

    // Near-circle roots: polish on q' so genuine double roots collapse to
    // one point, then pair.  A simple root that merely drifted close to
    // the circle fails the |q| acceptance test and keeps its inside /
    // outside classification.
    std::vector<complexd> inside, circle;
    for (complexd r : roots) {
        if (std::abs(std::abs(r) - 1.0) < 1e-3) {
            complexd z = r, best = r;
            double best_qd = std::abs(poly_eval(qd, r));
            for (int it = 0; it < 40; ++it) {
                const complexd d2 = poly_eval(qdd, z);
                if (d2 == complexd{}) break;
                z -= poly_eval(qd, z) / d2;
                const double a = std::abs(poly_eval(qd, z));
                if (a < best_qd) {
                    best_qd = a;
                    best = z;
                }
            }
            if (std::abs(poly_eval(q, best)) <= 1e-9 * qscale && std::abs(best - r) <= 1e-3) {
                circle.push_back(best);
                continue;
            }
        }
        if (std::abs(r) < 1.0) inside.push_back(r);
    }

    std::vector<complexd> selected = inside;
    std::vector<bool> used(circle.size(), false);
    for (size_t i = 0; i < circle.size(); ++i) {
        if (used[i]) continue;
        size_t best = i;
        double bd = std::numeric_limits<double>::infinity();
        for (size_t j = i + 1; j < circle.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(circle[i] - circle[j]);
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        if (best == i || bd > 1e-6)
            throw std::runtime_error("fejer_riesz_factorize: unpaired unit-circle root");
        used[i] = used[best] = true;
        selected.push_back(0.5 * (circle[i] + circle[best]));
    }
    if (static_cast<int>(selected.size()) != m - 1)
        throw std::runtime_error("fejer_riesz_factorize: wrong root count after selection");

    // Coefficients of the monic factor by inverse DFT of its product-form
    // values on the unit circle.  The factor's circle values are bounded
    // by the square root of the cosine polynomial, so this stays stable
    // at degrees where factor-by-factor convolution does not.  The
    // selection is conjugate-closed up to roundoff; the imaginary parts
    // are dropped at the end.
    const int deg_m = m - 1;
    const int grid_k = 2 * m;
    std::vector<double> d(m, 0.0);
    {
        std::vector<complexd> vals(grid_k);
        for (int k = 0; k < grid_k; ++k) {
            const double th = 2.0 * M_PI * k / grid_k;
            const complexd w{std::cos(th), std::sin(th)};
            complexd prod = 1.0;
            for (const complexd r : selected) prod *= (w - r);
            vals[k] = prod;
        }
        for (int j = 0; j <= deg_m; ++j) {
            complexd acc = 0.0;
            for (int k = 0; k < grid_k; ++k) {
                const double th = -2.0 * M_PI * j * k / grid_k;
                acc += vals[k] * complexd{std::cos(th), std::sin(th)};
            }
            d[j] = (acc / static_cast<double>(grid_k)).real();
        }
    }
    const double g1 = gammas_from_factor(d)[0];
    const double kappa = std::sqrt(std::max(0.0, gamma[0]) / g1);
    for (double& v : d) v *= kappa;
    for (double v : d) {
        if (std::abs(v) > 1e-12) {
            if (v < 0.0)
                for (double& w : d) w = -w;
            break;
        }
    }
    std::copy(d.begin(), d.end(), delta.begin());
    return delta;
}

double pencil_residual(int n, double lambda, const std::vector<double>& z) {
    if (static_cast<int>(z.size()) != n)
        throw std::invalid_argument("pencil_residual: size mismatch");
    double zmax = 0.0;
    for (double v : z) zmax = std::max(zmax, std::abs(v));
    if (zmax == 0.0) throw std::invalid_argument("pencil_residual: zero vector");
    const BandPencil pen = build_pencil(n);
    double rmax = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = std::max(0, i - 3); j <= std::min(n - 1, i + 3); ++j)
            s += (pen.a(i, j) - lambda * pen.b(i, j)) * z[j];
        rmax = std::max(rmax, std::abs(s));
    }
    return rmax / zmax;
}

CertificationReport certify(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("certify: n < 2");
    CertificationReport rep;
    rep.n = n;
    std::string stage;
    try {
        stage = "bound";
        rep.bound_closed = sharp_bound(n);
        const auto eig = generalized_eigen(n);
        rep.bound_oracle = eig.back().lambda;

        stage = "extremizer";
        const auto pmax = extremizer(n, Which::max);

        stage = "grid";
        const GridScan scan = certify_typically_real(pmax.coeffs, 10000);
        rep.min_im_on_grid = scan.min_value;
        rep.argmin_t = scan.argmin_t;

        stage = "pencil_residual";
        const bool odd = (n % 2 == 1);
        const std::vector<double> zvec =
            odd ? eigenvector_odd(n, spectral_mu(n)) : eigenvector_even(n, spectral_eta(n));
        rep.pencil_residual = pencil_residual(n, rep.bound_closed, zvec);

        stage = "recurrence";
        SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const double x = rng.uniform(-0.99, 0.99);
            const double a = det_recurrence_scaled(n, x);
            const double b = det_closed_scaled(n, x);
            worst = std::max(worst, std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
        }
        rep.recurrence_residual = worst;

        stage = "pipeline";
        double gap = 0.0;
        if (odd) {
            const auto via_pipeline = coefficients_from_gammas(
                gammas_from_factor(eigenvector_odd(n, spectral_mu(n))));
            for (int j = 0; j < n; ++j)
                gap = std::max(gap, std::abs(via_pipeline[j] - pmax.coeffs[j]));
        } else {
            // The transform amplifies sample noise by r^{-n} in the last
            // coefficient, so above the default-radius range the radius is
            // chosen with r^n pinned at 0.1.
            const double r = n <= 40 ? 0.7 : std::pow(0.1, 1.0 / n);
            const auto extracted = extract_coefficients(
                [&](complexd z) { return compact_eval_even(n, z); }, n, r);
            for (int j = 0; j < n; ++j) gap = std::max(gap, std::abs(extracted[j] - pmax.coeffs[j]));
        }
        rep.pipeline_vs_closed_gap = gap;

        stage = "factorization";
        const auto gamma = gammas_from_factor(zvec);
        const auto delta = fejer_riesz_factorize(gamma);
        const auto back = gammas_from_factor(delta);
        double gmax = 0.0, fgap = 0.0;
        for (double g : gamma) gmax = std::max(gmax, std::abs(g));
        for (int j = 0; j < n; ++j) fgap = std::max(fgap, std::abs(back[j] - gamma[j]));
        rep.factorization_gap = fgap / gmax;
    } catch (const std::exception&) {
        rep.passed = false;
        rep.failed_stage = stage;
        return rep;
    }

    // Tolerances are pinned for the certified range n <= 60; beyond it the
    // grid scan and the recurrence accumulate roundoff that grows
    // polynomially with the degree, so those two thresholds widen with
    // (n/60)^2.
    const double growth = n <= 60 ? 1.0 : (n / 60.0) * (n / 60.0);
    rep.passed = std::abs(rep.bound_oracle - rep.bound_closed) <= 1e-9 &&
                 rep.min_im_on_grid >= -1e-10 * growth && rep.pencil_residual <= 1e-9 * n &&
                 rep.recurrence_residual <= 1e-8 * growth &&
                 rep.pipeline_vs_closed_gap <= ((n % 2 == 1) ? 1e-10 : 1e-8) &&
                 rep.factorization_gap <= 1e-8;
    if (!rep.passed && rep.failed_stage.empty()) rep.failed_stage = "tolerance";
    return rep;
}

}  // namespace trpoly
