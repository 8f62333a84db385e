#ifndef GAUSSKERN_PENCIL_METHOD_HPP
#define GAUSSKERN_PENCIL_METHOD_HPP

#include <optional>
#include <vector>

#include "gausskern/dense_linalg.hpp"
#include "gausskern/gaussian_approx.hpp"

namespace gausskern
{

/// Largest N accepted by the matrix builders.
inline constexpr int pencil_build_limit = 20;

///
/// A_{j,m}, j = 0..N-1, m = 0..N, from the terminating hypergeometric form
///
///   A_{j,m} = (-1)^{(m+j)/2} √(2ρσ/(2ρ+σ)) κ^{m+j} Γ((m+j+1)/2)
///             ₂F₁(-m, -j; (1-m-j)/2; (2ρ+σ)/(2(ρ+σ)))
///
/// for j+m even and exactly 0 otherwise (κ² = 2(ρ+σ)/(σ(2ρ+σ))). The
/// monic characteristic coefficients (b_0, ..., b_{N-1}, 1) span its null
/// space. DomainError unless 1 <= N <= 20.
///
Matrix build_A(const GaussianTarget& target, int n);

///
/// The same matrix from the Hermite monomial expansion
///
///   A_{j,m} = √(2σρ/(2ρ+σ)) (2ρ/(σ(2ρ+σ)))^{(j+m)/2}
///             Σ_k Σ_ℓ (-1)^{k+ℓ} j! m! / (k! ℓ! (j-2k)! (m-2ℓ)!)
///             ((2ρ+σ)/(4ρ))^{k+ℓ} Γ((j+m-2k-2ℓ+1)/2).
///
Matrix build_A_double_sum(const GaussianTarget& target, int n);

/// Entries restricted to t ∈ (-T, T): every Γ(z) of the double sum becomes
/// Γ(z) - Γ(z, (2ρ+σ)T²/(2σρ)). T = 0 gives the zero matrix.
Matrix build_A_truncated(const GaussianTarget& target, int n, double truncation);

///
/// A together with the shifted blocks of its right singular factor: with
/// the thin SVD A = U S Vᵀ, W = Vᵀ (N×(N+1)), W0 = W(:, 0..N-1) and
/// W1 = W(:, 1..N).
///
struct PencilProblem
{
    int order = 0;
    Matrix a;
    Matrix w0;
    Matrix w1;
    std::optional<double> truncation;
};

PencilProblem make_pencil_problem(const GaussianTarget& target, int n,
                                  std::optional<double> truncation = std::nullopt);

/// Shifted blocks W0, W1 of the right singular factor of any N×(N+1) matrix.
void pencil_blocks(const Matrix& a, Matrix& w0, Matrix& w1);

struct PencilOptions
{
    double cutoff = default_svd_cutoff;
    /// Orders above this are rejected up front as outside the double
    /// precision window.
    int max_order = 13;
    /// Largest accepted |Re λ| / |λ| before projection.
    double max_real_part = 1.0e-6;
};

///
/// Frequencies Im λ_j from the eigenvalues of pinv(W0ᵀ) W1ᵀ, projected onto
/// the imaginary axis, mirror-symmetrized and sorted ascending (the order
/// of frequencies(), i.e. descending Hermite zeros). For odd N the
/// eigenvalue nearest zero is measured against max|λ|.
///
/// Throws ProjectionFailure when N exceeds options.max_order or an
/// eigenvalue is too far from the imaginary axis.
///
std::vector<double> pencil_frequencies(const GaussianTarget& target, int n,
                                       const PencilOptions& options = {},
                                       std::optional<double> truncation = std::nullopt);

/// Pencil frequencies followed by the optimal coefficient solve.
CosineSumApprox approximate_pencil(const GaussianTarget& target, int n,
                                   const PencilOptions& options = {},
                                   std::optional<double> truncation = std::nullopt);

} // namespace gausskern

#endif
