#pragma once

#include <array>

namespace trpoly {

/// Chebyshev polynomial of the second kind U_n(x).
///
/// Uses the trigonometric form sin((n+1)t)/sin(t), x = cos t, on the
/// interior of [-1,1]; within 1e-8 of the endpoints the limit values
/// U_n(1) = n+1 and U_n(-1) = (-1)^n (n+1) are used; outside [-1,1]
/// the three-term recurrence.  The recurrence loses relative accuracy
/// near interior roots, the trigonometric form does not.
double chebyshev_u(int n, double x);

/// Derivative U'_n(x).  Closed form
///   U'_n = ((n+2) U_{n-1} - n U_{n+1}) / (2 (1 - x^2))
/// inside, limit value n(n+1)(n+2)/3 with sign (+-1)^{n+1} at the
/// endpoints, derivative recurrence outside [-1,1].
double chebyshev_u_prime(int n, double x);

/// Chebyshev polynomial of the first kind T_n(x).
double chebyshev_t(int n, double x);

/// cos(2*pi/(n+3)): the largest root of U_{(n+1)/2}.  Requires odd n >= 3.
double spectral_mu(int n);

/// Smallest positive root of U'_{n+2}, located by bisection of
/// g(x) = (n+4) U_{n+1}(x) - (n+2) U_{n+3}(x) on (0, sin(pi/(n+2))).
/// Requires even n >= 2.  Throws std::runtime_error if the bracket shows
/// no sign change (an implementation bug, not an input error).
double spectral_nu(int n);

/// 1 - 2 nu^2, the maximal root of U'_{n/2+1} - U'_{n/2}.  Even n >= 2.
double spectral_eta(int n);

/// Spectral location of the extreme pencil eigenvalue for degree n.
struct SpectralParams {
    int n = 0;
    bool odd = false;
    double mu = 0.0;   // odd n only
    double nu = 0.0;   // even n only
    double eta = 0.0;  // even n only
};

/// Computes the parameters for degree n >= 2 and cross-checks the root
/// properties (|U_{(n+1)/2}(mu)| small, |U'_{n+2}(nu)| small, eta matches
/// the derivative-difference root).  Throws std::logic_error if a check
/// fails.
SpectralParams spectral_params(int n);

/// Residuals of the five identities tying U'_k to neighbouring U's and to
/// U'_{2k+2} at the half-angle arguments sqrt((1 +- x)/2).  Each entry is
/// |lhs - rhs| / max(1, |lhs|); requires |x| < 1.  The left-hand sides are
/// evaluated by the derivative recurrence so the two routes stay
/// independent.
std::array<double, 5> derivative_identity_residuals(int k, double x);

/// Residuals of the four trigonometric identities that hold at any root t
/// of b sin(at) + a sin(bt) = 0.
std::array<double, 4> mixed_sine_residuals(double a, double b, double t);

}  // namespace trpoly
