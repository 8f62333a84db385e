#include "gausskern/prony_derivative.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gausskern/errors.hpp"

namespace gausskern
{

DerivativeTable derivative_values(double sigma, int max_order)
{
    if (!(sigma > 0.0))
    {
        throw DomainError("derivative_values: sigma must be positive");
    }
    if (max_order < 0)
    {
        throw DomainError("derivative_values: L must be non-negative");
    }
    DerivativeTable table{sigma, max_order, std::vector<double>(max_order + 1, 0.0)};
    double v = 1.0;
    for (int k = 0; k <= max_order; k += 2)
    {
        table.values[k] = v;
        v *= -(k + 1.0) / sigma;
    }
    return table;
}

Matrix derivative_hankel(const DerivativeTable& table, int n)
{
    const int rows = table.max_order - n + 1;
    if (n < 1 || rows < 1)
    {
        throw DomainError("derivative_hankel: need 1 <= N <= L");
    }
    Matrix h(rows, n + 1);
    for (int k = 0; k < rows; ++k)
    {
        for (int l = 0; l <= n; ++l)
        {
            h(k, l) = table.values[k + l];
        }
    }
    return h;
}

std::vector<std::complex<double>> prony_frequencies(const DerivativeTable& table, int n, double cutoff)
{
    if (n < 1)
    {
        throw DomainError("prony_frequencies: N must be positive");
    }
    if (table.max_order < 2 * n - 1)
    {
        throw DomainError("prony_frequencies: L = " + std::to_string(table.max_order) +
                          " is below 2N-1 = " + std::to_string(2 * n - 1));
    }
    const double root = std::sqrt(table.sigma);
    DerivativeTable balanced = table;
    double scale             = 1.0;
    for (double& v : balanced.values)
    {
        v *= scale;
        scale *= root;
    }
    const Matrix h = derivative_hankel(balanced, n);
    const auto svd = thin_svd(h);
    const Matrix w = svd.v.leftCols(n).transpose();
    auto ev        = pencil_eigenvalues(w.leftCols(n), w.rightCols(n), cutoff);
    for (auto& z : ev)
    {
        z /= root;
    }
    std::sort(ev.begin(), ev.end(), [](const auto& x, const auto& y) {
        return x.imag() < y.imag() || (x.imag() == y.imag() && x.real() < y.real());
    });
    return ev;
}

std::vector<std::complex<double>> prony_frequencies(double sigma, int n, int max_order, double cutoff)
{
    if (!(sigma > 0.0))
    {
        throw DomainError("prony_frequencies: sigma must be positive");
    }
    // σ^{k/2} f^{(k)}(0) is exactly the table of e^{-t²/2}.
    auto ev = prony_frequencies(derivative_values(1.0, max_order), n, cutoff);
    const double unscale = 1.0 / std::sqrt(sigma);
    for (auto& z : ev)
    {
        z *= unscale;
    }
    return ev;
}

PronyCoefficients prony_coefficients(std::span<const std::complex<double>> freqs,
                                     const DerivativeTable& table, double cutoff)
{
    const auto n    = static_cast<Eigen::Index>(freqs.size());
    const auto rows = static_cast<Eigen::Index>(table.values.size());
    if (n < 1 || rows < n)
    {
        throw DomainError("prony_coefficients: need 1 <= N <= L+1");
    }
    ComplexMatrix v(rows, n);
    for (Eigen::Index j = 0; j < n; ++j)
    {
        std::complex<double> power = 1.0;
        for (Eigen::Index k = 0; k < rows; ++k)
        {
            v(k, j) = power;
            power *= freqs[j];
        }
    }
    ComplexVector f(rows);
    for (Eigen::Index k = 0; k < rows; ++k)
    {
        f[k] = table.values[k];
    }
    const ComplexVector gamma = least_squares(v, f, cutoff);
    return {{gamma.data(), gamma.data() + gamma.size()}, (v * gamma - f).norm()};
}

std::complex<double> ExponentialSum::operator()(double t) const
{
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < freqs.size(); ++j)
    {
        s += coeffs[j] * std::exp(freqs[j] * t);
    }
    return s;
}

ExponentialSum approximate_prony(const GaussianTarget& target, int n, int max_order, double cutoff)
{
    const int l      = max_order > 0 ? max_order : 2 * n;
    auto freqs       = prony_frequencies(target.sigma(), n, l, cutoff);
    const auto table = derivative_values(target.sigma(), l);
    auto fit         = prony_coefficients(freqs, table, cutoff);
    return {target, std::move(freqs), std::move(fit.coeffs), fit.residual};
}

} // namespace gausskern
