#ifndef GAUSSKERN_KERNELS_HPP
#define GAUSSKERN_KERNELS_HPP

#include <exception>
#include <functional>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "gausskern/dense_linalg.hpp"

//
// Data-parallel inner loops. Every kernel exists twice: a plain serial loop
// kept as the reference, and an OpenMP variant. The dispatching overloads in
// `gausskern::kernels` pick the OpenMP one when the library was built with
// it. Both variants produce bit-identical results for the map-style kernels;
// reductions (max, panel sums) are combined in a fixed order.
//
namespace gausskern::kernels
{

enum class Backend
{
    serial,
    openmp,
};

bool openmp_available() noexcept;
Backend default_backend() noexcept;
int max_threads() noexcept;

using Integrand = std::function<double(double)>;

/// Integral and accumulated error estimate over consecutive panels.
struct PanelSum
{
    double value   = 0.0;
    double error   = 0.0;
    double l1      = 0.0;
    bool converged = true;
};

namespace serial
{
/// G_jk = exp(-decay (x_j - x_k)²).
Matrix gaussian_gram(std::span<const double> nodes, double decay);
/// out[i] = Σ_j c_j cos(ω_j t_i).
void cosine_sum(std::span<const double> freqs, std::span<const double> coeffs,
                std::span<const double> ts, std::span<double> out);
/// max_i |e^{-t_i²/2σ} - Σ_j c_j cos(ω_j t_i)|.
double max_abs_deviation(std::span<const double> freqs, std::span<const double> coeffs,
                         double sigma, std::span<const double> ts);
/// Σ over panels [b_i, b_{i+1}] of adaptive Gauss-Kronrod integrals.
PanelSum integrate_panels(const Integrand& f, std::span<const double> breaks, double rel_tol,
                          int max_depth);
} // namespace serial

namespace omp
{
Matrix gaussian_gram(std::span<const double> nodes, double decay);
void cosine_sum(std::span<const double> freqs, std::span<const double> coeffs,
                std::span<const double> ts, std::span<double> out);
double max_abs_deviation(std::span<const double> freqs, std::span<const double> coeffs,
                         double sigma, std::span<const double> ts);
PanelSum integrate_panels(const Integrand& f, std::span<const double> breaks, double rel_tol,
                          int max_depth);
} // namespace omp

Matrix gaussian_gram(std::span<const double> nodes, double decay,
                     Backend backend = default_backend());
void cosine_sum(std::span<const double> freqs, std::span<const double> coeffs,
                std::span<const double> ts, std::span<double> out,
                Backend backend = default_backend());
double max_abs_deviation(std::span<const double> freqs, std::span<const double> coeffs,
                         double sigma, std::span<const double> ts,
                         Backend backend = default_backend());
PanelSum integrate_panels(const Integrand& f, std::span<const double> breaks, double rel_tol,
                          int max_depth, Backend backend = default_backend());

/// n equispaced points covering [a, b] inclusive.
std::vector<double> linspace(double a, double b, int n);

namespace detail
{
void run_indexed(int count, const std::function<void(int)>& body, Backend backend);
}

///
/// Evaluates f(i) for i in [first, last] and returns the results in index
/// order. Work items may run concurrently; if any throw, the exception of the
/// smallest failing index is rethrown after all items finish.
///
template <typename F>
auto parallel_map(int first, int last, F&& f, Backend backend = default_backend())
    -> std::vector<std::invoke_result_t<F&, int>>
{
    using R         = std::invoke_result_t<F&, int>;
    const int count = last >= first ? last - first + 1 : 0;
    std::vector<std::optional<R>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    detail::run_indexed(
        count,
        [&](int i) {
            try
            {
                slots[i].emplace(f(first + i));
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        },
        backend);
    for (const auto& e : errors)
    {
        if (e)
        {
            std::rethrow_exception(e);
        }
    }
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots)
    {
        out.push_back(std::move(*s));
    }
    return out;
}

} // namespace gausskern::kernels

#endif
