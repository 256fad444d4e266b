#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trpoly {

/// Result of scanning Im P(e^{it}) on a uniform grid over (0, pi).
struct GridScan {
    double min_value = 0.0;
    double argmin_t = 0.0;
    bool pass = false;  // min_value >= -1e-10
};

/// Horner scan of Im P(e^{it}) at t_k = pi k/(grid+1), k = 1..grid.
/// Requires grid >= 1000.
GridScan certify_typically_real(const std::vector<double>& coeffs, int grid);

/// Spectral factorization of the nonnegative cosine polynomial
///   gamma_1 + 2 sum_{k>=2} gamma_k cos((k-1)t)
/// into real delta with gammas_from_factor(delta) == gamma.
///
/// Method: roots of the self-reciprocal polynomial
/// q(z) = z^{m-1}(gamma_1 + sum gamma_s (z^{s-1} + z^{-(s-1)})) via
/// companion-matrix eigenvalues; near-circle roots are polished on q'
/// (double roots of q are simple roots of q'), paired within 1e-6, and
/// the minimum-phase half is kept.  delta is sign-fixed so its first
/// significant entry is positive.
///
/// Throws std::runtime_error when the input fails the nonnegativity
/// precheck (>= -1e-9 on a dense grid) or when circle roots cannot be
/// paired.
std::vector<double> fejer_riesz_factorize(const std::vector<double>& gamma);

/// ||(A - lambda B) z||_inf / ||z||_inf for the degree-n pencil.
/// Rejects the zero vector.
double pencil_residual(int n, double lambda, const std::vector<double>& z);

constexpr std::uint64_t kDefaultSeed = 42;

/// Aggregated per-degree verification record.  `passed` holds exactly
/// when every residual is below its declared tolerance.
struct CertificationReport {
    int n = 0;
    double bound_closed = 0.0;
    double bound_oracle = 0.0;        // max pencil eigenvalue
    double min_im_on_grid = 0.0;
    double argmin_t = 0.0;
    double pencil_residual = 0.0;     // at the spectral eigenpair
    double recurrence_residual = 0.0; // det recurrence vs closed form, rescaled
    double pipeline_vs_closed_gap = 0.0;
    double factorization_gap = 0.0;   // Fejer-Riesz round trip on gamma
    bool passed = false;
    std::string failed_stage;         // empty when everything ran
};

/// Runs the full verification chain for degree n:
///   - closed-form bound vs max generalized eigenvalue (<= 1e-9)
///   - extremizer construction + grid nonnegativity (>= -1e-10, 1e4 grid)
///   - pencil residual of the spectral eigenvector (<= 1e-9 n)
///   - determinant recurrence vs closed form at 20 seeded x (<= 1e-8,
///     compared after the 2^{n+2} rescaling)
///   - eigenvector-pipeline coefficients vs the closed form (odd,
///     <= 1e-10) or vs compact-form extraction (even, <= 1e-8)
///   - factorize-and-reconstruct gap on the extremizer's gamma (<= 1e-8)
CertificationReport certify(int n, std::uint64_t seed = kDefaultSeed);

}  // namespace trpoly
