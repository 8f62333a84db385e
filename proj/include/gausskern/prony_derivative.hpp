#ifndef GAUSSKERN_PRONY_DERIVATIVE_HPP
#define GAUSSKERN_PRONY_DERIVATIVE_HPP

#include <complex>
#include <span>
#include <vector>

#include "gausskern/dense_linalg.hpp"
#include "gausskern/gaussian_approx.hpp"

namespace gausskern
{

/// f^{(k)}(0), k = 0..L, for f(t) = e^{-t²/2σ}.
struct DerivativeTable
{
    double sigma = 1.0;
    int max_order = 0;
    std::vector<double> values;
};

/// f^{(k)}(0) = (-1)^{k/2} σ^{-k/2} (k-1)!! for even k and 0 for odd k,
/// built by f^{(k+2)}(0) = -(k+1)/σ · f^{(k)}(0). Requires L >= 0.
DerivativeTable derivative_values(double sigma, int max_order);

/// Hankel matrix (f^{(k+ℓ)}(0)), k = 0..L-N, ℓ = 0..N.
Matrix derivative_hankel(const DerivativeTable& table, int n);

///
/// Exponents λ_j of Σ γ_j e^{λ_j t} matching the derivatives at 0: matrix
/// pencil on the Hankel matrix of f^{(k)}(0), k <= L. Entries are balanced
/// to σ^{(k+ℓ)/2} f^{(k+ℓ)}(0) before the SVD and the eigenvalues scaled
/// back by 1/√σ. No projection onto the imaginary axis is applied; the
/// result is sorted by imaginary part. Requires L >= 2N-1.
///
std::vector<std::complex<double>> prony_frequencies(double sigma, int n, int max_order,
                                                    double cutoff = default_svd_cutoff);

/// Pencil on an arbitrary derivative table d_k = Σ γ_j λ_j^k, balanced
/// by table.sigma^{k/2} (use sigma = 1 for no balancing).
std::vector<std::complex<double>> prony_frequencies(const DerivativeTable& table, int n,
                                                    double cutoff = default_svd_cutoff);

struct PronyCoefficients
{
    std::vector<std::complex<double>> coeffs;
    /// ‖Vγ - f‖₂ over the L+1 derivative equations.
    double residual = 0.0;
};

/// Least-squares solution of Σ_j γ_j λ_j^k = f^{(k)}(0), k = 0..L.
PronyCoefficients prony_coefficients(std::span<const std::complex<double>> freqs,
                                     const DerivativeTable& table,
                                     double cutoff = default_svd_cutoff);

/// y(t) = Σ_j γ_j e^{λ_j t} with complex data.
struct ExponentialSum
{
    GaussianTarget target;
    std::vector<std::complex<double>> freqs;
    std::vector<std::complex<double>> coeffs;
    double residual = 0.0;

    int order() const noexcept { return static_cast<int>(freqs.size()); }
    std::complex<double> operator()(double t) const;
};

/// Algorithm of derivative samples at 0; max_order <= 0 selects L = 2N.
ExponentialSum approximate_prony(const GaussianTarget& target, int n, int max_order = 0,
                                 double cutoff = default_svd_cutoff);

} // namespace gausskern

#endif
