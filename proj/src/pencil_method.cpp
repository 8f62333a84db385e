#include "gausskern/pencil_method.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "gausskern/errors.hpp"
#include "gausskern/special_functions.hpp"

namespace gausskern
{

namespace
{

void check_order(int n)
{
    if (n < 1 || n > pencil_build_limit)
    {
        throw DomainError("pencil matrix: N = " + std::to_string(n) + " outside [1, " +
                          std::to_string(pencil_build_limit) + "]");
    }
}

double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i)
    {
        f *= i;
    }
    return f;
}

// Shared double-sum evaluator; `gamma_term(z)` supplies Γ(z) or its
// truncated counterpart.
template <typename GammaTerm>
Matrix double_sum(const GaussianTarget& target, int n, GammaTerm gamma_term)
{
    const double s    = target.sigma();
    const double p    = target.rho();
    const double lead = std::sqrt(2.0 * s * p / (2.0 * p + s));
    const double base = 2.0 * p / (s * (2.0 * p + s));
    const double q    = (2.0 * p + s) / (4.0 * p);

    Matrix a = Matrix::Zero(n, n + 1);
    for (int j = 0; j < n; ++j)
    {
        for (int m = j % 2; m <= n; m += 2)
        {
            double sum = 0.0;
            for (int k = 0; 2 * k <= j; ++k)
            {
                for (int l = 0; 2 * l <= m; ++l)
                {
                    const double coef = factorial(j) * factorial(m) /
                                        (factorial(k) * factorial(l) * factorial(j - 2 * k) *
                                         factorial(m - 2 * l));
                    const double sign = (k + l) % 2 == 0 ? 1.0 : -1.0;
                    sum += sign * coef * std::pow(q, k + l) *
                           gamma_term(0.5 * (j + m - 2 * k - 2 * l + 1));
                }
            }
            a(j, m) = lead * std::pow(base, 0.5 * (j + m)) * sum;
        }
    }
    return a;
}

} // namespace

Matrix build_A(const GaussianTarget& target, int n)
{
    check_order(n);
    const double s     = target.sigma();
    const double p     = target.rho();
    const double lead  = std::sqrt(2.0 * p * s / (2.0 * p + s));
    const double kappa2 = 2.0 * (p + s) / (s * (2.0 * p + s));
    const double z     = (2.0 * p + s) / (2.0 * (p + s));

    Matrix a = Matrix::Zero(n, n + 1);
    for (int j = 0; j < n; ++j)
    {
        for (int m = j % 2; m <= n; m += 2)
        {
            const int h       = (m + j) / 2;
            const double sign = h % 2 == 0 ? 1.0 : -1.0;
            a(j, m) = sign * lead * std::pow(kappa2, h) * gamma_fn(h + 0.5) *
                      hyp2f1_terminating(m, j, z);
        }
    }
    return a;
}

Matrix build_A_double_sum(const GaussianTarget& target, int n)
{
    check_order(n);
    return double_sum(target, n, [](double z) { return gamma_fn(z); });
}

Matrix build_A_truncated(const GaussianTarget& target, int n, double truncation)
{
    check_order(n);
    if (!(truncation >= 0.0) || !std::isfinite(truncation))
    {
        throw DomainError("build_A_truncated: T must be finite and non-negative");
    }
    const double s = target.sigma();
    const double p = target.rho();
    const double x = (2.0 * p + s) / (2.0 * s * p) * truncation * truncation;
    return double_sum(target, n,
                      [x](double z) { return gamma_fn(z) - upper_incomplete_gamma(z, x); });
}

void pencil_blocks(const Matrix& a, Matrix& w0, Matrix& w1)
{
    const Eigen::Index n = a.rows();
    if (a.cols() != n + 1)
    {
        throw DomainError("pencil_blocks: expected an N x (N+1) matrix");
    }
    const auto svd = thin_svd(a);
    const Matrix w = svd.v.transpose();
    w0 = w.leftCols(n);
    w1 = w.rightCols(n);
}

PencilProblem make_pencil_problem(const GaussianTarget& target, int n,
                                  std::optional<double> truncation)
{
    if (truncation && !(*truncation > 0.0))
    {
        throw DomainError("pencil: truncation T must be positive");
    }
    PencilProblem problem;
    problem.order      = n;
    problem.truncation = truncation;
    problem.a = truncation ? build_A_truncated(target, n, *truncation) : build_A(target, n);
    pencil_blocks(problem.a, problem.w0, problem.w1);
    return problem;
}

std::vector<double> pencil_frequencies(const GaussianTarget& target, int n,
                                       const PencilOptions& options,
                                       std::optional<double> truncation)
{
    if (n > options.max_order)
    {
        throw ProjectionFailure("pencil: N = " + std::to_string(n) +
                                    " is outside the double-precision window (max " +
                                    std::to_string(options.max_order) + ")",
                                n);
    }
    const auto problem = make_pencil_problem(target, n, truncation);
    auto ev            = pencil_eigenvalues(problem.w0, problem.w1, options.cutoff);

    std::sort(ev.begin(), ev.end(),
              [](const auto& x, const auto& y) { return x.imag() < y.imag(); });
    double largest = 0.0;
    for (const auto& z : ev)
    {
        largest = std::max(largest, std::abs(z));
    }
    const std::size_t centre = n % 2 == 1 ? static_cast<std::size_t>(n / 2) : ev.size();
    for (std::size_t j = 0; j < ev.size(); ++j)
    {
        const double scale = j == centre ? largest : std::abs(ev[j]);
        if (std::abs(ev[j].real()) > options.max_real_part * scale)
        {
            throw ProjectionFailure("pencil: eigenvalue " + std::to_string(j + 1) + " of N = " +
                                        std::to_string(n) + " has relative real part " +
                                        std::to_string(std::abs(ev[j].real()) / scale),
                                    n);
        }
    }

    std::vector<double> mu(ev.size());
    for (std::size_t j = 0; j < mu.size() / 2; ++j)
    {
        const double v = 0.5 * (ev[mu.size() - 1 - j].imag() - ev[j].imag());
        mu[j]                 = -v;
        mu[mu.size() - 1 - j] = v;
    }
    return mu;
}

CosineSumApprox approximate_pencil(const GaussianTarget& target, int n, const PencilOptions& options,
                                   std::optional<double> truncation)
{
    auto mu    = pencil_frequencies(target, n, options, truncation);
    auto gamma = solve_coefficients(target, mu);
    return {target, std::move(mu), std::move(gamma)};
}

} // namespace gausskern
