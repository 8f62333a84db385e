#include "gausskern/gaussian_approx.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gausskern/errors.hpp"
#include "gausskern/kernels.hpp"
#include "gausskern/rule_cache.hpp"

namespace gausskern
{

namespace
{

double s0_of(double r)
{
    return r * (1.0 + r) / (2.0 * r + 1.0);
}

std::vector<double> hermite_nodes(const GaussianTarget& target, std::span<const double> freqs)
{
    const double kappa = target.frequency_scale();
    std::vector<double> t(freqs.size());
    for (std::size_t j = 0; j < freqs.size(); ++j)
    {
        t[j] = -freqs[j] / kappa;
    }
    return t;
}

Vector rhs_in_t(double r, std::span<const double> t)
{
    const double scale = 1.0 / std::sqrt(1.0 + r);
    const double decay = r / (2.0 * r + 1.0);
    Vector g(static_cast<Eigen::Index>(t.size()));
    for (std::size_t k = 0; k < t.size(); ++k)
    {
        g[static_cast<Eigen::Index>(k)] = scale * std::exp(-decay * t[k] * t[k]);
    }
    return g;
}

void symmetrize(std::vector<double>& v)
{
    const std::size_t n = v.size();
    for (std::size_t j = 0; j < n / 2; ++j)
    {
        const double mean = 0.5 * (v[j] + v[n - 1 - j]);
        v[j] = v[n - 1 - j] = mean;
    }
}

std::vector<double> solve_in_t(double r, std::span<const double> t)
{
    const Matrix h = kernels::gaussian_gram(t, s0_of(r));
    const Vector g = rhs_in_t(r, t);
    Vector x;
    try
    {
        x = spd_solve_pivoted(h, g);
    }
    catch (const NotPositiveDefinite& e)
    {
        const int n = static_cast<int>(t.size());
        throw NotPositiveDefinite("Gram matrix is numerically singular at N = " + std::to_string(n) +
                                      " (" + e.what() + ")",
                                  n);
    }
    std::vector<double> gamma(x.data(), x.data() + x.size());
    symmetrize(gamma);
    return gamma;
}

} // namespace

GaussianTarget::GaussianTarget(double sigma, double rho)
    : sigma_(sigma), rho_(rho)
{
    if (!(sigma > 0.0) || !(rho > 0.0) || !std::isfinite(sigma) || !std::isfinite(rho))
    {
        throw DomainError("GaussianTarget: sigma and rho must be positive and finite");
    }
}

double GaussianTarget::frequency_scale() const noexcept
{
    return std::sqrt(2.0 * (rho_ + sigma_) / (sigma_ * (2.0 * rho_ + sigma_)));
}

double GaussianTarget::weighted_mass() const noexcept
{
    return std::sqrt(2.0 * std::numbers::pi * rho_ * sigma_ / (2.0 * rho_ + sigma_));
}

double GaussianTarget::operator()(double t) const noexcept
{
    return std::exp(-t * t / (2.0 * sigma_));
}

double CosineSumApprox::operator()(double t) const
{
    double s = 0.0;
    for (std::size_t j = 0; j < freqs.size(); ++j)
    {
        s += coeffs[j] * std::cos(freqs[j] * t);
    }
    return s;
}

std::vector<double> frequencies(const GaussianTarget& target, const HermiteRule& rule)
{
    const double kappa = target.frequency_scale();
    std::vector<double> mu(rule.zeros.size());
    for (std::size_t j = 0; j < mu.size(); ++j)
    {
        mu[j] = -kappa * rule.zeros[j];
    }
    // Keep the exact mirror symmetry of the zeros (and -0.0 out of the middle).
    for (std::size_t j = 0; j < mu.size() / 2; ++j)
    {
        mu[mu.size() - 1 - j] = -mu[j];
    }
    if (mu.size() % 2 == 1)
    {
        mu[mu.size() / 2] = 0.0;
    }
    return mu;
}

CharPolyCoeffs char_poly_coeffs(const GaussianTarget& target, int n)
{
    if (n < 1 || n > 40)
    {
        throw DomainError("char_poly_coeffs: N must lie in [1, 40]");
    }
    const double s = target.sigma();
    const double p = target.rho();
    const double q = (p + s) / (2.0 * s * (2.0 * p + s));
    CharPolyCoeffs out{n, std::vector<double>(n, 0.0)};
    double b = 1.0;
    for (int k = n; k >= 2; k -= 2)
    {
        const double half = 0.5 * (n - k);
        b *= static_cast<double>(k) * (k - 1) * q / (half + 1.0);
        out.b[k - 2] = b;
    }
    return out;
}

Matrix gram_matrix(const GaussianTarget& target, std::span<const double> freqs)
{
    return kernels::gaussian_gram(freqs, 0.5 * target.rho());
}

Vector gram_rhs(const GaussianTarget& target, std::span<const double> freqs)
{
    const double s = target.sigma();
    const double p = target.rho();
    const double scale = std::sqrt(s / (s + p));
    const double decay = s * p / (2.0 * (s + p));
    Vector g(static_cast<Eigen::Index>(freqs.size()));
    for (std::size_t k = 0; k < freqs.size(); ++k)
    {
        g[static_cast<Eigen::Index>(k)] = scale * std::exp(-decay * freqs[k] * freqs[k]);
    }
    return g;
}

std::vector<double> solve_coefficients(const GaussianTarget& target, std::span<const double> freqs)
{
    if (freqs.empty())
    {
        throw DomainError("solve_coefficients: need at least one frequency");
    }
    const auto t = hermite_nodes(target, freqs);
    return solve_in_t(target.ratio(), t);
}

std::vector<double> solve_coefficients_cosine(const GaussianTarget& target,
                                              std::span<const double> freqs)
{
    const int n = static_cast<int>(freqs.size());
    if (n == 0)
    {
        throw DomainError("solve_coefficients_cosine: need at least one frequency");
    }
    for (int j = 0; j < n / 2; ++j)
    {
        if (freqs[j] != -freqs[n - 1 - j])
        {
            throw DomainError("solve_coefficients_cosine: frequencies are not mirror symmetric");
        }
    }
    const double r = target.ratio();
    const auto t   = hermite_nodes(target, freqs);
    const Matrix h = kernels::gaussian_gram(t, s0_of(r));
    const Vector g = rhs_in_t(r, t);

    // Normal equations Sᵀ H S x = Sᵀ g, where S spreads the half vector x to
    // the symmetric full vector.
    const int half = (n + 1) / 2;
    auto mirror    = [n](int j) { return n - 1 - j; };
    Matrix m(half, half);
    Vector rhs(half);
    for (int k = 0; k < half; ++k)
    {
        const bool k_centre = mirror(k) == k;
        rhs[k] = k_centre ? g[k] : g[k] + g[mirror(k)];
        for (int j = 0; j < half; ++j)
        {
            const bool j_centre = mirror(j) == j;
            double v = h(k, j);
            if (!j_centre)
            {
                v += h(k, mirror(j));
            }
            if (!k_centre)
            {
                v += h(mirror(k), j);
                if (!j_centre)
                {
                    v += h(mirror(k), mirror(j));
                }
            }
            m(k, j) = v;
        }
    }
    // Exact symmetry for the solver's check.
    m = 0.5 * (m + m.transpose()).eval();

    Vector x;
    try
    {
        x = spd_solve_pivoted(m, rhs);
    }
    catch (const NotPositiveDefinite& e)
    {
        throw NotPositiveDefinite("half-size Gram matrix is numerically singular at N = " +
                                      std::to_string(n) + " (" + e.what() + ")",
                                  n);
    }
    std::vector<double> gamma(n);
    for (int j = 0; j < half; ++j)
    {
        gamma[j] = gamma[mirror(j)] = x[j];
    }
    return gamma;
}

CosineSumApprox approximate(const GaussianTarget& target, int n, int max_order)
{
    if (n < 1 || n > max_order)
    {
        throw DomainError("approximate: N = " + std::to_string(n) + " outside [1, " +
                          std::to_string(max_order) + "]");
    }
    return approximate(target, cached_hermite_rule(n));
}

CosineSumApprox approximate(const GaussianTarget& target, const HermiteRule& rule)
{
    if (rule.degree < 1)
    {
        throw DomainError("approximate: empty Hermite rule");
    }
    auto gamma = solve_in_t(target.ratio(), rule.zeros);
    return {target, frequencies(target, rule), std::move(gamma)};
}

std::vector<double> quadrature_coefficients(const GaussianTarget& target, const HermiteRule& rule)
{
    const double r     = target.ratio();
    const double scale = std::sqrt((r + 1.0) / (std::numbers::pi * (2.0 * r + 1.0)));
    // (s₀ - 2s₁ - 1) t² with s₀ - 2s₁ = r/(2r+1).
    const double decay = (r + 1.0) / (2.0 * r + 1.0);
    std::vector<double> gamma(rule.zeros.size());
    for (std::size_t j = 0; j < gamma.size(); ++j)
    {
        const double t = rule.zeros[j];
        gamma[j] = scale * std::exp(-decay * t * t) * rule.scaled_weights[j];
    }
    return gamma;
}

} // namespace gausskern
