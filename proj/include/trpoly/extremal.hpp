#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace trpoly {

using complexd = std::complex<double>;

enum class Which { max, min };

/// A typically real polynomial P(z) = a_1 z + ... + a_N z^N with a_1 = 1.
/// coeffs[j-1] holds a_j.
struct TypicallyRealPolynomial {
    int degree = 0;
    std::vector<double> coeffs;
    Which which = Which::max;

    complexd eval(complexd z) const;
};

/// Horner evaluation of a_1 z + ... + a_N z^N.
complexd horner(const std::vector<double>& coeffs, complexd z);

/// Eigenvector family for odd n:
///   z_{2k-1} = U_{k-1}(x)^2,  z_{2k} = U_{k-1}(x) U_k(x),  z_n = 1.
/// At x = cos(2 pi j/(n+3)) the vector is palindromic and spans the
/// kernel of Phi_n(x).
std::vector<double> eigenvector_odd(int n, double x);

/// Eigenvector family for even n:
///   z_{2k-1} = U_{k-1}^2 - R (U_{2k-1} + 2k)
///   z_{2k}   = U_{k-1} U_k - R (U_{2k} - 2k - 1)
/// with R = (n+2)(n+4)/(4(n+3)) / (q^2 - 1), q = (n+2)/(2 U_{n/2}(x)).
/// Throws std::domain_error when U_{n/2}(x) or q^2 - 1 is within 1e-12
/// of zero.
std::vector<double> eigenvector_even(int n, double x);

/// Scaled variant of the even family whose image under Phi_n(x) vanishes
/// in the first n-1 coordinates for every x; the last coordinate equals
///   1/4 ((n+4)^2/(n+2) U_{n/2}^2 - (n+2) U_{n/2+1}^2).
/// At x = eta_n it is -1/2 (U_{n+2}(eta) - n - 3) times eigenvector_even.
std::vector<double> eigenvector_even_scaled(int n, double x);

/// gamma_s = sum_j delta_j delta_{j+s-1}; the cosine coefficients of
/// |delta_1 + delta_2 e^{it} + ... |^2 after factoring out sin t.
std::vector<double> gammas_from_factor(const std::vector<double>& delta);

/// a_l = (gamma_l - gamma_{l+2}) / (gamma_1 - gamma_3), gamma's beyond the
/// length counting as zero.  Throws std::domain_error when the
/// normalizer |gamma_1 - gamma_3| < 1e-12 * max|gamma|.
std::vector<double> coefficients_from_gammas(const std::vector<double>& gamma);

/// Closed-form coefficients of the odd-degree maximal polynomial, all
/// Chebyshev values taken at mu_n; a_n = 4/(n+3) sin^2(2 pi/(n+3)).
std::vector<double> coefficients_odd_closed(int n);

/// The unique degree-n typically real polynomial attaining max a_2
/// (resp. min a_2).  Odd n uses the closed-form coefficients; even n the
/// eigenvector pipeline at eta_n.  The min variant negates the
/// even-indexed coefficients (P_min(z) = -P_max(-z)).
TypicallyRealPolynomial extremizer(int n, Which which);

/// Rational compact form of the odd maximal polynomial:
///   z/(1 - 2 mu z + z^2)
///   + 4 sin^2(a)/(n+3) * z^3 (1 - z^{n+3}) / ((1-z^2)(1 - 2 mu z + z^2)^2)
/// with a = 2 pi/(n+3).  Within 1e-4 of the removable singularities
/// (z = +-1 and e^{+-ia}) the exact polynomial is evaluated instead.
complexd compact_eval_odd(int n, complexd z);

/// Rational compact form of the even maximal polynomial (numerator
/// z + z^5 + g1 (z^2+z^4) + g2 z^3 over (1+z)^2 (z^2+1-2 eta z)^2, plus
/// the Q_n-scaled tail).  Same singularity fallback as the odd form, at
/// z = +-1 and the unit roots of z^2 + 1 - 2 eta z.
complexd compact_eval_even(int n, complexd z);

/// Im P_max(e^{it}) in closed form on 0 < t < pi:
///   odd:  sin^2(a)/(n+3) * sin^2((n+3)t/2) / (sin t (cos t - mu)^2)
///   even: Q_n / ((1+cos t) sin t)
///         * ((n+4)/2 sin((n+2)t/2) + (n+2)/2 sin((n+4)t/2))^2 / (cos t - eta)^2
/// Falls back to the Horner imaginary part when cos t is within 1e-4 of
/// the spectral parameter or t is within 1e-4 of pi.
double kernel_on_circle(int n, double t);

/// Residuals (relative) of the two closed forms for the shifted products
///   2 sum_k U_k U_{k+j} and 2 sum_k U_{k-1} U_{k+j}
/// at mu_n, for odd n and 1 <= j <= (n-1)/2.
std::array<double, 2> pair_sum_residuals(int n, int j);

/// Relative residual of sum_{j=0..m} U_j(cos(pi/(m+2)))^2
///   = (m+2) / (2 sin^2(pi/(m+2))).
double squared_sum_residual(int m);

/// Vanishing checks for the numerator combination whose zeros make the
/// odd compact form a polynomial: |R| at z = 1, -1, e^{+-ia} and |R'| at
/// e^{+-ia}, computed with exact polynomial derivatives.
std::array<double, 6> compact_odd_singularity_residuals(int n);

/// Even counterpart: |R| at 1, -1, e^{+-ia}; |R'| at -1, e^{+-ia}; |R''|
/// at -1, where cos a = eta_n.
std::array<double, 8> compact_even_singularity_residuals(int n);

/// Coefficients a_1..a_n of a polynomial with a_0 = 0 recovered from
/// values on the circle |z| = r via the inverse discrete transform at the
/// n+1 points r e^{2 pi i k/(n+1)}.
std::vector<double> extract_coefficients(const std::function<complexd(complexd)>& f, int n,
                                         double r = 0.7);

}  // namespace trpoly
