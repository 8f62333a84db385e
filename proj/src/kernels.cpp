#include "gausskern/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef GAUSSKERN_HAVE_OPENMP
#include <omp.h>
#endif

#include "gausskern/errors.hpp"
#include "gausskern/quadrature.hpp"

namespace gausskern::kernels
{

namespace
{

void check_lengths(std::span<const double> freqs, std::span<const double> coeffs)
{
    if (freqs.size() != coeffs.size())
    {
        throw DomainError("kernels: frequency and coefficient counts differ");
    }
}

inline double cosine_at(std::span<const double> freqs, std::span<const double> coeffs, double t)
{
    double s = 0.0;
    for (std::size_t j = 0; j < freqs.size(); ++j)
    {
        s += coeffs[j] * std::cos(freqs[j] * t);
    }
    return s;
}

PanelSum combine(const std::vector<QuadratureResult>& parts)
{
    PanelSum sum;
    for (const auto& p : parts)
    {
        sum.value += p.value;
        sum.error += p.error;
        sum.l1 += p.l1;
        sum.converged = sum.converged && p.converged;
    }
    return sum;
}

// Two passes: one Gauss-Kronrod rule per panel estimates ∫|f| over the
// whole range, then each panel adapts to an equal share of rel_tol · ∫|f|.
PanelSum panels_impl(const Integrand& f, std::span<const double> breaks, double rel_tol,
                     int max_depth, Backend backend)
{
    if (breaks.size() < 2)
    {
        return {};
    }
    const int count = static_cast<int>(breaks.size() - 1);
    std::vector<QuadratureResult> coarse(count);
    detail::run_indexed(
        count, [&](int i) { coarse[i] = integrate_adaptive(f, breaks[i], breaks[i + 1], 1.0, 0); },
        backend);
    double l1 = 0.0;
    std::vector<double> panel_l1(count);
    for (int i = 0; i < count; ++i)
    {
        panel_l1[i] = coarse[i].l1;
        l1 += coarse[i].l1;
    }
    const double share = rel_tol * l1 / count;

    std::vector<QuadratureResult> parts(count);
    detail::run_indexed(
        count,
        [&](int i) {
            const double tol = std::max(rel_tol, share / std::max(panel_l1[i], 1e-300));
            parts[i]         = integrate_adaptive(f, breaks[i], breaks[i + 1], std::min(tol, 1.0), max_depth);
            parts[i].converged = parts[i].error <= std::max(tol * parts[i].l1, share);
        },
        backend);
    return combine(parts);
}

} // namespace

bool openmp_available() noexcept
{
#ifdef GAUSSKERN_HAVE_OPENMP
    return true;
#else
    return false;
#endif
}

Backend default_backend() noexcept
{
    return openmp_available() ? Backend::openmp : Backend::serial;
}

int max_threads() noexcept
{
#ifdef GAUSSKERN_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::vector<double> linspace(double a, double b, int n)
{
    if (n < 1)
    {
        throw DomainError("linspace: n must be positive");
    }
    std::vector<double> x(n);
    if (n == 1)
    {
        x[0] = a;
        return x;
    }
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i)
    {
        x[i] = a + h * i;
    }
    x[n - 1] = b;
    return x;
}

namespace serial
{

Matrix gaussian_gram(std::span<const double> nodes, double decay)
{
    const auto n = static_cast<Eigen::Index>(nodes.size());
    Matrix g(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
    {
        g(j, j) = 1.0;
        for (Eigen::Index k = 0; k < j; ++k)
        {
            const double d = nodes[j] - nodes[k];
            g(j, k) = g(k, j) = std::exp(-decay * d * d);
        }
    }
    return g;
}

void cosine_sum(std::span<const double> freqs, std::span<const double> coeffs,
                std::span<const double> ts, std::span<double> out)
{
    check_lengths(freqs, coeffs);
    for (std::size_t i = 0; i < ts.size(); ++i)
    {
        out[i] = cosine_at(freqs, coeffs, ts[i]);
    }
}

double max_abs_deviation(std::span<const double> freqs, std::span<const double> coeffs,
                         double sigma, std::span<const double> ts)
{
    check_lengths(freqs, coeffs);
    double worst = 0.0;
    for (double t : ts)
    {
        worst = std::max(worst, std::abs(std::exp(-t * t / (2.0 * sigma)) - cosine_at(freqs, coeffs, t)));
    }
    return worst;
}

PanelSum integrate_panels(const Integrand& f, std::span<const double> breaks, double rel_tol,
                          int max_depth)
{
    return panels_impl(f, breaks, rel_tol, max_depth, Backend::serial);
}

} // namespace serial

namespace omp
{

Matrix gaussian_gram(std::span<const double> nodes, double decay)
{
    const auto n = static_cast<Eigen::Index>(nodes.size());
    Matrix g(n, n);
#pragma omp parallel for schedule(static)
    for (Eigen::Index j = 0; j < n; ++j)
    {
        for (Eigen::Index k = 0; k < n; ++k)
        {
            const double d = nodes[j] - nodes[k];
            g(j, k) = j == k ? 1.0 : std::exp(-decay * d * d);
        }
    }
    return g;
}

void cosine_sum(std::span<const double> freqs, std::span<const double> coeffs,
                std::span<const double> ts, std::span<double> out)
{
    check_lengths(freqs, coeffs);
    const auto m = static_cast<long>(ts.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < m; ++i)
    {
        out[i] = cosine_at(freqs, coeffs, ts[i]);
    }
}

double max_abs_deviation(std::span<const double> freqs, std::span<const double> coeffs,
                         double sigma, std::span<const double> ts)
{
    check_lengths(freqs, coeffs);
    const auto m = static_cast<long>(ts.size());
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (long i = 0; i < m; ++i)
    {
        const double t = ts[i];
        worst = std::max(worst, std::abs(std::exp(-t * t / (2.0 * sigma)) - cosine_at(freqs, coeffs, t)));
    }
    return worst;
}

PanelSum integrate_panels(const Integrand& f, std::span<const double> breaks, double rel_tol,
                          int max_depth)
{
    return panels_impl(f, breaks, rel_tol, max_depth, Backend::openmp);
}

} // namespace omp

namespace detail
{

void run_indexed(int count, const std::function<void(int)>& body, Backend backend)
{
#ifdef GAUSSKERN_HAVE_OPENMP
    if (backend == Backend::openmp && !omp_in_parallel())
    {
        std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
        for (int i = 0; i < count; ++i)
        {
            try
            {
                body(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
        for (const auto& e : errors)
        {
            if (e)
            {
                std::rethrow_exception(e);
            }
        }
        return;
    }
#else
    (void)backend;
#endif
    for (int i = 0; i < count; ++i)
    {
        body(i);
    }
}

} // namespace detail

Matrix gaussian_gram(std::span<const double> nodes, double decay, Backend backend)
{
    return backend == Backend::openmp ? omp::gaussian_gram(nodes, decay)
                                      : serial::gaussian_gram(nodes, decay);
}

void cosine_sum(std::span<const double> freqs, std::span<const double> coeffs,
                std::span<const double> ts, std::span<double> out, Backend backend)
{
    if (out.size() != ts.size())
    {
        throw DomainError("cosine_sum: output length must match the grid");
    }
    if (backend == Backend::openmp)
    {
        omp::cosine_sum(freqs, coeffs, ts, out);
    }
    else
    {
        serial::cosine_sum(freqs, coeffs, ts, out);
    }
}

double max_abs_deviation(std::span<const double> freqs, std::span<const double> coeffs,
                         double sigma, std::span<const double> ts, Backend backend)
{
    return backend == Backend::openmp ? omp::max_abs_deviation(freqs, coeffs, sigma, ts)
                                      : serial::max_abs_deviation(freqs, coeffs, sigma, ts);
}

PanelSum integrate_panels(const Integrand& f, std::span<const double> breaks, double rel_tol,
                          int max_depth, Backend backend)
{
    return backend == Backend::openmp ? omp::integrate_panels(f, breaks, rel_tol, max_depth)
                                      : serial::integrate_panels(f, breaks, rel_tol, max_depth);
}

} // namespace gausskern::kernels
