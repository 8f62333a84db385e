#ifndef GAUSSKERN_ERROR_ANALYSIS_HPP
#define GAUSSKERN_ERROR_ANALYSIS_HPP

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "gausskern/gaussian_approx.hpp"
#include "gausskern/hermite.hpp"
#include "gausskern/prony_derivative.hpp"
#include "gausskern/quadrature.hpp"

namespace gausskern
{

///
/// √F for the weighted squared error
///
///   F(γ) = ‖f‖² - 2 Re Σ_j g_j γ_j + Σ_{j,m} γ_j conj(γ_m) H_{j,m}
///
/// with the exact weighted inner products of f and the exponentials. The
/// quadratic form is evaluated in 128-bit floating point, so F is resolved
/// far below the double cancellation floor ‖f‖²·1e-16.
///
struct ClosedFormError
{
    double value = 0.0;
    /// F itself, before clamping.
    double squared = 0.0;
    /// F came out negative (pure rounding) and was clamped to 0.
    bool clamped = false;
};

ClosedFormError closed_form_error(const GaussianTarget& target, std::span<const double> freqs,
                                  std::span<const double> coeffs);
ClosedFormError closed_form_error(const CosineSumApprox& approx);
ClosedFormError closed_form_error(const GaussianTarget& target,
                                  std::span<const std::complex<double>> freqs,
                                  std::span<const std::complex<double>> coeffs);
ClosedFormError closed_form_error(const ExponentialSum& approx);

struct Interval
{
    double lo;
    double hi;
};

struct OracleOptions
{
    /// Integration interval; defaults to [-T*, T*] with T* = √(160ρ).
    std::optional<Interval> domain;
    /// Multiply by e^{-t²/2ρ}.
    bool weighted = true;
    QuadratureOptions quadrature{};
};

struct OracleError
{
    /// √ of the integral.
    double value = 0.0;
    double integral = 0.0;
    double quadrature_error = 0.0;
    /// Bound on the weighted integral outside the interval, (1+Σ|γ|)² ∫_{|t|>T} w
    /// (0 when unweighted).
    double tail_bound = 0.0;
    bool converged = true;
};

/// Default oracle half-width √(2ρ·80).
double oracle_half_width(double rho);

/// Quadrature of |f - y|² (times the weight) with the difference formed in
/// long double.
OracleError oracle_error(const CosineSumApprox& approx, const OracleOptions& options = {});
OracleError oracle_error(const ExponentialSum& approx, const OracleOptions& options = {});

/// Generic form: `abs_diff_sq(t)` returns |f(t) - y(t)|² and
/// `coeff_abs_sum` = Σ|γ_j| feeds the tail bound.
OracleError oracle_error(const GaussianTarget& target,
                         const std::function<long double(long double)>& abs_diff_sq,
                         double coeff_abs_sum, const OracleOptions& options);

struct TruncatedError
{
    double truncation = 0.0;
    double error = 0.0;
    double interior = 0.0;
    double tail = 0.0;
    bool converged = true;
};

///
/// Unweighted error on ℝ with the approximant cut off outside [-T, T]:
/// error² = ∫_{|t|>T} e^{-t²/σ} dt + ∫_{-T}^{T} |f - y|² dt, both by
/// quadrature. T defaults to √(2σN ln 2). Requires ρ = σ/2 (relative
/// 1e-12) as the setting this error is analysed in.
///
TruncatedError truncated_L2_error(const CosineSumApprox& approx,
                                  std::optional<double> truncation = std::nullopt,
                                  const QuadratureOptions& quadrature = {});

/// Rate factor (r/√(2(2r+1)))^N N^{3/4}.
double thm31_bound(double r, int n);
/// r/√(2(2r+1)); below 1 iff r < 2+√6.
double thm31_base(double r);

struct MNDiagnostic
{
    double mn = 0.0;
    /// M_N / N^{3/2}.
    double ratio = 0.0;
};

/// M_N = Σ ω_k e^{t_k²} from the rule's scaled weights.
MNDiagnostic MN_diagnostic(const HermiteRule& rule);

struct LemmaCheck
{
    double lhs = 0.0;
    double rhs = 0.0;
    double log_rhs = 0.0;
};

///
/// Gauss-Hermite error for f_k(t) = e^{-2s₁t² + 2s₀t_k t}:
///   lhs = |Σ_j ω_j f_k(t_j) - √(π(2r+1))/(r+1) e^{2s₁t_k²}|,
///   rhs = √π s₁^N e^{s₀²t_k²/(2s₁)},
/// with s₀ = r(1+r)/(2r+1), s₁ = r²/(2(2r+1)) and k a 0-based zero index.
/// The sum is formed in 128-bit floating point from the scaled weights.
///
LemmaCheck lemma31_bound_check(const GaussianTarget& target, const HermiteRule& rule, int k);

/// One line of the error table.
struct ErrorReport
{
    double sigma = 0.0;
    double rho = 0.0;
    int order = 0;
    std::string method;
    double weighted_error_closed = 0.0;
    std::optional<double> weighted_error_oracle;
    double bound_thm31 = 0.0;
    std::optional<double> truncated_T;
    std::optional<double> truncated_error;
    std::optional<double> mn;
};

} // namespace gausskern

#endif
