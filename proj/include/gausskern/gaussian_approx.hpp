#ifndef GAUSSKERN_GAUSSIAN_APPROX_HPP
#define GAUSSKERN_GAUSSIAN_APPROX_HPP

#include <span>
#include <vector>

#include "gausskern/dense_linalg.hpp"
#include "gausskern/hermite.hpp"

namespace gausskern
{

///
/// The Gaussian f(t) = e^{-t²/2σ} together with the weight e^{-t²/2ρ} of
/// the space L²(ℝ, e^{-t²/2ρ}) in which it is approximated.
///
class GaussianTarget
{
public:
    /// Throws DomainError unless sigma > 0 and rho > 0 (both finite).
    GaussianTarget(double sigma, double rho);

    double sigma() const noexcept { return sigma_; }
    double rho() const noexcept { return rho_; }
    /// r = ρ/σ; the normalized coefficient problem depends on r alone.
    double ratio() const noexcept { return rho_ / sigma_; }
    /// κ = √(2(ρ+σ)/(σ(2ρ+σ))), so that Im λ_j = -κ t_j.
    double frequency_scale() const noexcept;
    /// ‖f‖² in the weighted space, √(2πρσ/(2ρ+σ)).
    double weighted_mass() const noexcept;

    double operator()(double t) const noexcept;

private:
    double sigma_;
    double rho_;
};

///
/// y(t) = Σ_j γ_j cos(μ_j t), the real form of Σ_j γ_j e^{λ_j t} with
/// λ_j = iμ_j. `freqs` holds μ_j = Im λ_j; both vectors are mirror
/// symmetric (μ_j = -μ_{N+1-j}, γ_j = γ_{N+1-j}).
///
struct CosineSumApprox
{
    GaussianTarget target;
    std::vector<double> freqs;
    std::vector<double> coeffs;

    int order() const noexcept { return static_cast<int>(freqs.size()); }
    double operator()(double t) const;
};

/// Monic characteristic polynomial λ^N + Σ_{k<N} b_k λ^k with the
/// frequencies as roots.
struct CharPolyCoeffs
{
    int order = 0;
    std::vector<double> b;
};

/// Largest order accepted by `approximate` unless overridden.
inline constexpr int default_max_order = 60;

/// Im λ_j = -κ t_j over the rule's zeros (ascending in j).
std::vector<double> frequencies(const GaussianTarget& target, const HermiteRule& rule);

///
/// b_k = N!/(k! ((N-k)/2)!) q^{(N-k)/2} for N-k even and 0 otherwise, with
/// q = (ρ+σ)/(2σ(2ρ+σ)). Built downward from b_N = 1 by the ratio
/// b_{k-2}/b_k = k(k-1) q / ((N-k)/2 + 1). Requires 1 <= N <= 40.
///
CharPolyCoeffs char_poly_coeffs(const GaussianTarget& target, int n);

/// Normalized Gram matrix Ĥ_jk = e^{-ρ(μ_j-μ_k)²/2} (the weighted inner
/// products divided by √(2πρ)).
Matrix gram_matrix(const GaussianTarget& target, std::span<const double> freqs);

/// Normalized right-hand side ĝ_k = (1+r)^{-1/2} e^{-σρμ_k²/(2(σ+ρ))}.
Vector gram_rhs(const GaussianTarget& target, std::span<const double> freqs);

///
/// Minimizing coefficients for fixed frequencies: solves Ĥγ = ĝ by pivoted
/// Cholesky and averages mirror pairs. The system is assembled in the
/// Hermite variable t = -μ/κ, where it reads
///
///   Σ_j γ_j e^{-s₀(t_j-t_k)²} = (1+r)^{-1/2} e^{-r t_k²/(2r+1)},
///   s₀ = r(1+r)/(2r+1).
///
/// Throws NotPositiveDefinite carrying N when the Gram matrix is
/// numerically singular.
///
std::vector<double> solve_coefficients(const GaussianTarget& target, std::span<const double> freqs);

/// Same minimizer from the ⌈N/2⌉-dimensional system over symmetric
/// coefficient vectors. `freqs` must be mirror symmetric.
std::vector<double> solve_coefficients_cosine(const GaussianTarget& target,
                                              std::span<const double> freqs);

/// Frequencies from the degree-N Gauss-Hermite rule (honouring
/// GAUSSKERN_RULE_CACHE) and the optimal coefficients. DomainError unless
/// 1 <= n <= max_order.
CosineSumApprox approximate(const GaussianTarget& target, int n,
                            int max_order = default_max_order);

/// As above with a caller-supplied rule.
CosineSumApprox approximate(const GaussianTarget& target, const HermiteRule& rule);

///
/// Quadrature-derived (suboptimal) coefficients
///
///   γ_j^(H) = √(r+1)/√(π(2r+1)) e^{(s₀-2s₁)t_j²} ω_j,  s₁ = r²/(2(2r+1)),
///
/// evaluated as a decaying exponential times ω_j e^{t_j²}.
///
std::vector<double> quadrature_coefficients(const GaussianTarget& target, const HermiteRule& rule);

} // namespace gausskern

#endif
