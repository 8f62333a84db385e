#include "gausskern/error_analysis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <quadmath.h>

#include "gausskern/errors.hpp"

namespace gausskern
{

namespace
{

using quad = __float128;

struct qcomplex
{
    quad re = 0;
    quad im = 0;
};

qcomplex operator+(qcomplex a, qcomplex b)
{
    return {a.re + b.re, a.im + b.im};
}

qcomplex operator*(qcomplex a, qcomplex b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

qcomplex operator*(quad s, qcomplex a)
{
    return {s * a.re, s * a.im};
}

qcomplex qexp(qcomplex z)
{
    const quad m = expq(z.re);
    return {m * cosq(z.im), m * sinq(z.im)};
}

qcomplex conj(qcomplex z)
{
    return {z.re, -z.im};
}

qcomplex to_q(std::complex<double> z)
{
    return {z.real(), z.imag()};
}

ClosedFormError finish(quad f)
{
    ClosedFormError out;
    out.squared = static_cast<double>(f);
    if (f < 0)
    {
        out.clamped = true;
        f           = 0;
    }
    out.value = static_cast<double>(sqrtq(f));
    return out;
}

struct QuadConstants
{
    quad mass;
    quad g_scale;
    quad g_decay;
    quad h_scale;
    quad rho;
};

QuadConstants constants(const GaussianTarget& target)
{
    const quad s = target.sigma();
    const quad p = target.rho();
    return {sqrtq(2 * M_PIq * p * s / (2 * p + s)), sqrtq(2 * M_PIq * s * p / (s + p)),
            s * p / (2 * (s + p)), sqrtq(2 * M_PIq * p), p};
}

void check_sizes(std::size_t a, std::size_t b)
{
    if (a != b)
    {
        throw DomainError("closed_form_error: frequency and coefficient counts differ");
    }
}

double tail_weight_integral(double rho, double half_width)
{
    return std::sqrt(2.0 * std::numbers::pi * rho) * std::erfc(half_width / std::sqrt(2.0 * rho));
}

} // namespace

ClosedFormError closed_form_error(const GaussianTarget& target, std::span<const double> freqs,
                                  std::span<const double> coeffs)
{
    check_sizes(freqs.size(), coeffs.size());
    const auto c = constants(target);
    const std::size_t n = freqs.size();
    quad cross = 0;
    quad gram  = 0;
    for (std::size_t j = 0; j < n; ++j)
    {
        const quad mj = freqs[j];
        const quad gj = coeffs[j];
        cross += gj * c.g_scale * expq(-c.g_decay * mj * mj);
        quad row = 0;
        for (std::size_t m = 0; m < n; ++m)
        {
            const quad d = mj - static_cast<quad>(freqs[m]);
            row += static_cast<quad>(coeffs[m]) * expq(-c.rho * d * d / 2);
        }
        gram += gj * row;
    }
    return finish(c.mass - 2 * cross + c.h_scale * gram);
}

ClosedFormError closed_form_error(const CosineSumApprox& approx)
{
    return closed_form_error(approx.target, approx.freqs, approx.coeffs);
}

ClosedFormError closed_form_error(const GaussianTarget& target,
                                  std::span<const std::complex<double>> freqs,
                                  std::span<const std::complex<double>> coeffs)
{
    check_sizes(freqs.size(), coeffs.size());
    const auto c = constants(target);
    const std::size_t n = freqs.size();
    quad cross = 0;
    qcomplex gram;
    for (std::size_t j = 0; j < n; ++j)
    {
        const qcomplex lj = to_q(freqs[j]);
        const qcomplex gj = to_q(coeffs[j]);
        cross += (gj * qexp(c.g_decay * (lj * lj))).re;
        for (std::size_t m = 0; m < n; ++m)
        {
            const qcomplex s = lj + conj(to_q(freqs[m]));
            gram = gram + gj * conj(to_q(coeffs[m])) * qexp((c.rho / 2) * (s * s));
        }
    }
    return finish(c.mass - 2 * c.g_scale * cross + c.h_scale * gram.re);
}

ClosedFormError closed_form_error(const ExponentialSum& approx)
{
    return closed_form_error(approx.target, approx.freqs, approx.coeffs);
}

double oracle_half_width(double rho)
{
    return std::sqrt(2.0 * rho * 80.0);
}

OracleError oracle_error(const GaussianTarget& target,
                         const std::function<long double(long double)>& abs_diff_sq,
                         double coeff_abs_sum, const OracleOptions& options)
{
    const double half = oracle_half_width(target.rho());
    const Interval domain = options.domain.value_or(Interval{-half, half});
    if (!(domain.hi >= domain.lo))
    {
        throw DomainError("oracle_error: empty interval");
    }
    const long double two_rho = 2.0L * target.rho();
    const bool weighted       = options.weighted;
    auto integrand = [&](double t) -> double {
        const long double tl = t;
        long double v        = abs_diff_sq(tl);
        if (weighted)
        {
            v *= std::exp(-tl * tl / two_rho);
        }
        return static_cast<double>(v);
    };
    const auto q = integrate(integrand, domain.lo, domain.hi, options.quadrature);

    OracleError out;
    out.integral         = q.value;
    out.quadrature_error = q.error;
    out.converged        = q.converged;
    out.value            = std::sqrt(std::max(q.value, 0.0));
    if (weighted)
    {
        const double reach = std::min(-domain.lo, domain.hi);
        const double amp   = 1.0 + coeff_abs_sum;
        out.tail_bound     = reach > 0.0 ? amp * amp * tail_weight_integral(target.rho(), reach)
                                         : amp * amp * std::sqrt(2.0 * std::numbers::pi * target.rho());
    }
    return out;
}

OracleError oracle_error(const CosineSumApprox& approx, const OracleOptions& options)
{
    const long double two_sigma = 2.0L * approx.target.sigma();
    auto diff_sq = [&](long double t) {
        long double y = 0.0L;
        for (std::size_t j = 0; j < approx.freqs.size(); ++j)
        {
            y += static_cast<long double>(approx.coeffs[j]) *
                 std::cos(static_cast<long double>(approx.freqs[j]) * t);
        }
        const long double d = std::exp(-t * t / two_sigma) - y;
        return d * d;
    };
    double abs_sum = 0.0;
    for (double g : approx.coeffs)
    {
        abs_sum += std::abs(g);
    }
    return oracle_error(approx.target, diff_sq, abs_sum, options);
}

OracleError oracle_error(const ExponentialSum& approx, const OracleOptions& options)
{
    using lcomplex              = std::complex<long double>;
    const long double two_sigma = 2.0L * approx.target.sigma();
    auto diff_sq = [&](long double t) {
        lcomplex y = 0.0L;
        for (std::size_t j = 0; j < approx.freqs.size(); ++j)
        {
            y += lcomplex(approx.coeffs[j]) * std::exp(lcomplex(approx.freqs[j]) * t);
        }
        return std::norm(std::exp(-t * t / two_sigma) - y);
    };
    double abs_sum = 0.0;
    for (const auto& g : approx.coeffs)
    {
        abs_sum += std::abs(g);
    }
    return oracle_error(approx.target, diff_sq, abs_sum, options);
}

TruncatedError truncated_L2_error(const CosineSumApprox& approx, std::optional<double> truncation,
                                  const QuadratureOptions& quadrature)
{
    const double s = approx.target.sigma();
    const double p = approx.target.rho();
    if (std::abs(p - 0.5 * s) > 1.0e-12 * s)
    {
        throw DomainError("truncated_L2_error: requires rho = sigma/2");
    }
    const double t = truncation.value_or(std::sqrt(2.0 * s * approx.order() * std::numbers::ln2));
    if (!(t >= 0.0) || !std::isfinite(t))
    {
        throw DomainError("truncated_L2_error: T must be finite and non-negative");
    }

    OracleOptions inner;
    inner.domain     = Interval{-t, t};
    inner.weighted   = false;
    inner.quadrature = quadrature;
    const auto interior = oracle_error(approx, inner);

    const double reach = std::sqrt(80.0 * s);
    auto tail_integrand = [s](double x) { return std::exp(-x * x / s); };
    const auto tail = integrate(tail_integrand, t, t + reach, quadrature);

    TruncatedError out;
    out.truncation = t;
    out.interior   = interior.integral;
    out.tail       = 2.0 * tail.value;
    out.error      = std::sqrt(std::max(out.interior + out.tail, 0.0));
    out.converged  = interior.converged && tail.converged;
    return out;
}

double thm31_base(double r)
{
    if (!(r > 0.0))
    {
        throw DomainError("thm31_base: r must be positive");
    }
    return r / std::sqrt(2.0 * (2.0 * r + 1.0));
}

double thm31_bound(double r, int n)
{
    if (n < 1)
    {
        throw DomainError("thm31_bound: N must be positive");
    }
    return std::pow(thm31_base(r), n) * std::pow(static_cast<double>(n), 0.75);
}

MNDiagnostic MN_diagnostic(const HermiteRule& rule)
{
    if (rule.degree < 1)
    {
        throw DomainError("MN_diagnostic: empty rule");
    }
    double sum = 0.0;
    for (double w : rule.scaled_weights)
    {
        sum += w;
    }
    return {sum, sum / std::pow(static_cast<double>(rule.degree), 1.5)};
}

LemmaCheck lemma31_bound_check(const GaussianTarget& target, const HermiteRule& rule, int k)
{
    if (k < 0 || k >= rule.degree)
    {
        throw DomainError("lemma31_bound_check: k = " + std::to_string(k) + " outside the rule");
    }
    const quad r  = target.ratio();
    const quad s0 = r * (1 + r) / (2 * r + 1);
    const quad s1 = r * r / (2 * (2 * r + 1));
    const quad tk = rule.zeros[k];

    quad sum = 0;
    for (int j = 0; j < rule.degree; ++j)
    {
        const quad tj = rule.zeros[j];
        sum += static_cast<quad>(rule.scaled_weights[j]) * expq(-(1 + 2 * s1) * tj * tj + 2 * s0 * tk * tj);
    }
    const quad exact = sqrtq(M_PIq * (2 * r + 1)) / (1 + r) * expq(2 * s1 * tk * tk);

    LemmaCheck out;
    out.lhs     = static_cast<double>(fabsq(sum - exact));
    const quad log_rhs = logq(sqrtq(M_PIq)) + rule.degree * logq(s1) + s0 * s0 * tk * tk / (2 * s1);
    out.log_rhs = static_cast<double>(log_rhs);
    out.rhs     = static_cast<double>(expq(log_rhs));
    return out;
}

} // namespace gausskern
