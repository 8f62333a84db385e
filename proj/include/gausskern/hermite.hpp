#ifndef GAUSSKERN_HERMITE_HPP
#define GAUSSKERN_HERMITE_HPP

#include <vector>

namespace gausskern
{

///
/// N-point Gauss-Hermite rule for the weight e^{-t²}.
///
/// `zeros` are the roots of H_N in descending order, t_1 > ... > t_N, and
/// are exactly antisymmetric (t_j == -t_{N+1-j}); for odd N the middle
/// zero is exactly 0. `scaled_weights` holds ω_j e^{t_j²}, which stays
/// O(1) where ω_j itself underflows for large N.
///
struct HermiteRule
{
    int degree = 0;
    std::vector<double> zeros;
    std::vector<double> weights;
    std::vector<double> scaled_weights;
};

/// Physicists' Hermite polynomial H_n(t) by the three-term recurrence.
/// Overflows to ±inf for large n·|t|.
double hermite_eval(int n, double t);

///
/// Orthonormal Hermite function ψ_n(t) = (2ⁿ n! √π)^{-1/2} e^{-t²/2} H_n(t),
/// computed by the normalized recurrence
///
///   ψ_{k+1} = √(2/(k+1)) t ψ_k - √(k/(k+1)) ψ_{k-1}.
///
/// Accurate while e^{-t²/2} is representable (|t| < ~38).
///
double hermite_function(int n, double t);

/// Returns {ψ_n(t), ψ_{n-1}(t)} (ψ_{-1} = 0) from one recurrence sweep.
struct HermiteFunctionPair
{
    double value;
    double previous;
};
HermiteFunctionPair hermite_function_pair(int n, double t);

///
/// Gauss-Hermite nodes and weights for 1 <= n <= 200.
///
/// Initial guesses for the positive zeros come from the symmetric Jacobi
/// matrix; each is polished by Newton's method on ψ_n. Weights follow from
/// ω_j e^{t_j²} = 1 / ((n+1) ψ_{n+1}(t_j)²). Throws ConvergenceFailure if a
/// zero does not reach |ψ_n(t_j)| <= 1e-14 within 100 Newton steps.
///
HermiteRule hermite_rule(int n);

///
/// Residual of the Hermite scaling identity
///
///   H_N(aτ) = Σ_r N! / (r! (N-2r)!) (a²-1)^r a^{N-2r} H_{N-2r}(τ)
///
/// maximised over 50 equispaced τ in [-3, 3]. Test helper; N <= 30.
///
double scaling_expansion_check(int n, double a);

} // namespace gausskern

#endif
