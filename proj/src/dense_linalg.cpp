#include "gausskern/dense_linalg.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "gausskern/errors.hpp"

namespace gausskern
{

Vector spd_solve_pivoted(const Matrix& a, const Vector& b, double pivot_tol)
{
    const Eigen::Index n = a.rows();
    if (a.cols() != n || b.size() != n)
    {
        throw DomainError("spd_solve_pivoted: dimension mismatch");
    }
    if (n == 0)
    {
        return Vector();
    }
    const double scale = a.cwiseAbs().maxCoeff();
    if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1.0e-12 * scale)
    {
        throw DomainError("spd_solve_pivoted: matrix is not symmetric");
    }

    // In-place outer-product factorization; the lower triangle of `work`
    // becomes L, perm[k] is the original index at position k.
    Matrix work = a;
    std::vector<Eigen::Index> perm(n);
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    const double threshold = pivot_tol * a.diagonal().maxCoeff();

    for (Eigen::Index k = 0; k < n; ++k)
    {
        Eigen::Index p = k;
        for (Eigen::Index i = k + 1; i < n; ++i)
        {
            if (work(i, i) > work(p, p))
            {
                p = i;
            }
        }
        if (!(work(p, p) > threshold))
        {
            throw NotPositiveDefinite("spd_solve_pivoted: pivot " + std::to_string(k) +
                                      " fell below the relative threshold");
        }
        if (p != k)
        {
            work.row(k).swap(work.row(p));
            work.col(k).swap(work.col(p));
            std::swap(perm[k], perm[p]);
        }

        const double pivot = std::sqrt(work(k, k));
        work(k, k)         = pivot;
        const Eigen::Index rest = n - k - 1;
        if (rest > 0)
        {
            work.col(k).tail(rest) /= pivot;
            const Vector l = work.col(k).tail(rest);
            // Full symmetric update: later pivot swaps read both triangles.
            work.bottomRightCorner(rest, rest).noalias() -= l * l.transpose();
        }
    }

    Vector y(n);
    for (Eigen::Index k = 0; k < n; ++k)
    {
        y[k] = b[perm[k]];
    }
    work.triangularView<Eigen::Lower>().solveInPlace(y);
    work.triangularView<Eigen::Lower>().transpose().solveInPlace(y);

    Vector x(n);
    for (Eigen::Index k = 0; k < n; ++k)
    {
        x[perm[k]] = y[k];
    }
    return x;
}

SvdResult thin_svd(const Matrix& a)
{
    Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

Matrix pseudo_inverse(const Matrix& a, double cutoff)
{
    const auto [u, s, v] = thin_svd(a);
    Vector inv_s         = Vector::Zero(s.size());
    if (s.size() > 0)
    {
        const double floor = cutoff * s[0];
        for (Eigen::Index i = 0; i < s.size(); ++i)
        {
            if (s[i] > floor)
            {
                inv_s[i] = 1.0 / s[i];
            }
        }
    }
    return v * inv_s.asDiagonal() * u.transpose();
}

std::vector<std::complex<double>> eigenvalues(const Matrix& a)
{
    if (a.rows() != a.cols())
    {
        throw DomainError("eigenvalues: matrix must be square");
    }
    Eigen::EigenSolver<Matrix> solver(a, false);
    if (solver.info() != Eigen::Success)
    {
        throw ConvergenceFailure("eigenvalues: Hessenberg QR did not converge");
    }
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<std::complex<double>> pencil_eigenvalues(const Matrix& w0, const Matrix& w1, double cutoff)
{
    if (w0.rows() != w0.cols() || w1.rows() != w1.cols() || w0.rows() != w1.rows())
    {
        throw DomainError("pencil_eigenvalues: W0 and W1 must be square and of equal size");
    }
    const Matrix reduced = pseudo_inverse(w0.transpose(), cutoff) * w1.transpose();
    return eigenvalues(reduced);
}

namespace
{

template <typename MatrixT, typename VectorT>
VectorT svd_least_squares(const MatrixT& a, const VectorT& b, double cutoff)
{
    if (a.rows() < a.cols())
    {
        throw DomainError("least_squares: requires rows >= cols");
    }
    if (b.size() != a.rows())
    {
        throw DomainError("least_squares: right-hand side has the wrong length");
    }
    Eigen::JacobiSVD<MatrixT> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    VectorT coeffs = svd.matrixU().adjoint() * b;
    const double floor = s.size() > 0 ? cutoff * s[0] : 0.0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
    {
        coeffs[i] = s[i] > floor ? coeffs[i] / s[i] : typename VectorT::Scalar(0);
    }
    return svd.matrixV() * coeffs;
}

} // namespace

Vector least_squares(const Matrix& a, const Vector& b, double cutoff)
{
    return svd_least_squares(a, b, cutoff);
}

ComplexVector least_squares(const ComplexMatrix& a, const ComplexVector& b, double cutoff)
{
    return svd_least_squares(a, b, cutoff);
}

} // namespace gausskern
