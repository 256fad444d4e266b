#pragma once

#include <array>
#include <complex>
#include <vector>

#include "trpoly/matrix.hpp"

namespace trpoly {

/// The symmetric matrices A and B behind the quadratic forms
///   sum delta_j delta_{j+1} - sum delta_j delta_{j+3}   (A)
///   sum delta_j^2           - sum delta_j delta_{j+2}   (B)
/// A has 1/2 on the first off-diagonals and -1/2 on the third; B has a
/// unit diagonal and -1/2 on the second off-diagonals.  B is positive
/// definite.  Entries are generated from the band pattern on demand.
struct BandPencil {
    int n = 0;

    double a(int i, int j) const {
        const int d = i > j ? i - j : j - i;
        if (d == 1) return 0.5;
        if (d == 3) return -0.5;
        return 0.0;
    }
    double b(int i, int j) const {
        const int d = i > j ? i - j : j - i;
        if (d == 0) return 1.0;
        if (d == 2) return -0.5;
        return 0.0;
    }

    Matrix dense_a() const;
    Matrix dense_b() const;
};

/// Requires n >= 2; for n < 4 the third band of A is empty.
BandPencil build_pencil(int n);

/// Leading principal minors of B, computed by fraction-free integer
/// elimination of the scaled matrix 2B (so the values are exact binary64).
/// Entry k-1 holds det of the leading k x k block.
std::vector<double> b_leading_minors(int n);

/// Phi_n(x) = 2x B - A as a dense matrix.
Matrix phi_matrix(int n, double x);

/// Phi_n(x) * z without materializing the matrix.
std::vector<double> phi_apply(int n, double x, const std::vector<double>& z);

/// Determinant of the leading k x k block of Phi(x) by Gaussian
/// elimination with partial pivoting.  Reserved for the recurrence's
/// initial segment and oracle duty: requires 1 <= k <= 24.
double det_direct(int k, double x);

/// 2^{k+2} * det_direct(k, x); the scaling is an exact power of two.
double det_direct_scaled(int k, double x);

/// Determinant of Phi_n(x) by the order-20 linear recurrence seeded with
/// det_direct for k <= 20.  Run internally on 2^{n+2}-rescaled values so
/// the iteration is neutrally stable.
double det_recurrence(int n, double x);
double det_recurrence_scaled(int n, double x);

/// Closed form of det Phi_n(x) for |x| < 1:
///   odd n:  (n+3) 2^{-(n+2)} U_{(n+1)/2}(x) U'_{(n+1)/2}(x)
///   even n: 2^{-(n+2)} ((U'_{n/2+1}(x))^2 - (U'_{n/2}(x))^2)
/// Rejects |x| >= 1.
double det_closed(int n, double x);
double det_closed_scaled(int n, double x);

/// Coefficients of the order-20 determinant recurrence (the b_j, as
/// polynomial values at x) and of the order-5 factor (the c_j).  The
/// degree-10 characteristic polynomial built from b is the exact square
/// of the degree-5 one built from c.
struct DetCoefficients {
    std::array<double, 10> b{};
    std::array<double, 5> c{};
};

DetCoefficients b_coefficients(double x);

/// b_j evaluated at complex x; needed when the recurrence is analysed at
/// x = (z + 1/z)/2.
std::array<std::complex<double>, 10> b_coefficients_complex(std::complex<double> x);

/// Particular solutions of  Psi_n = sum_j 2^j b_j((z+1/z)/2) Psi_{n-j}.
enum class PsiKind { affine, zpow, zinvpow };

/// Residual of one particular solution family, scaled by the largest term
/// magnitude.  affine: Psi_k = c0 + c1 k; zpow: (c0 + k) z^{2k};
/// zinvpow: (c0 + k) z^{-2k}.  Requires n >= 11 and 0.5 <= |z| <= 2.
double psi_residual(PsiKind kind, int n, std::complex<double> z, double c0, double c1 = 0.0);

struct EigenPair {
    double lambda = 0.0;
    std::vector<double> vector;
    double residual = 0.0;  // ||(A - lambda B) z||_inf / ||z||_inf
};

/// All n eigenpairs of det(A - lambda B) = 0, sorted by eigenvalue.
/// B = L L^T (guaranteed positive definite), then cyclic Jacobi on
/// L^{-1} A L^{-T} and back-transformation of the eigenvectors.
/// Requires 2 <= n <= 500.  Throws std::runtime_error if the
/// factorization meets a nonpositive pivot (build bug).
std::vector<EigenPair> generalized_eigen(int n);

/// The sharp bound on |a_2| over degree-n typically real polynomials:
/// 2 mu_n for odd n, 2 eta_n for even n.  Requires n >= 2.
double sharp_bound(int n);

}  // namespace trpoly
