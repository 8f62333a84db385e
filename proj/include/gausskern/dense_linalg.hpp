#ifndef GAUSSKERN_DENSE_LINALG_HPP
#define GAUSSKERN_DENSE_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gausskern
{

using Matrix        = Eigen::MatrixXd;
using Vector        = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Default relative singular-value cutoff for pseudoinverses.
inline constexpr double default_svd_cutoff = 1.0e-13;

///
/// Solves A x = b for symmetric positive definite A by Cholesky with
/// diagonal pivoting, P A Pᵀ = L Lᵀ.
///
/// Throws NotPositiveDefinite once the largest remaining pivot falls to
/// `pivot_tol` times the largest initial diagonal entry or below, and
/// DomainError if A is not square, not symmetric to 1e-12 relative, or the
/// sizes disagree.
///
Vector spd_solve_pivoted(const Matrix& a, const Vector& b, double pivot_tol = 1.0e-14);

/// A = U diag(s) Vᵀ with k = min(rows, cols) columns in U and V and s
/// descending.
struct SvdResult
{
    Matrix u;
    Vector s;
    Matrix v;
};

SvdResult thin_svd(const Matrix& a);

/// Moore-Penrose inverse; singular values below cutoff * s_max are dropped.
Matrix pseudo_inverse(const Matrix& a, double cutoff = default_svd_cutoff);

/// Eigenvalues of a square real matrix (Hessenberg QR). Throws
/// ConvergenceFailure if the solver does not converge.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

///
/// Eigenvalues of pinv(W0ᵀ, cutoff) · W1ᵀ, the reduced form of the pencil
/// λ W0 - W1 used by the matrix-pencil frequency extraction.
///
std::vector<std::complex<double>> pencil_eigenvalues(const Matrix& w0, const Matrix& w1,
                                                     double cutoff = default_svd_cutoff);

/// Minimum-norm least-squares solution through the SVD; requires rows >= cols.
Vector least_squares(const Matrix& a, const Vector& b, double cutoff = default_svd_cutoff);
ComplexVector least_squares(const ComplexMatrix& a, const ComplexVector& b,
                            double cutoff = default_svd_cutoff);

} // namespace gausskern

#endif
