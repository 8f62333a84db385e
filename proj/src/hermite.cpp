#include "gausskern/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "gausskern/errors.hpp"

namespace gausskern
{

namespace
{

constexpr int max_rule_degree     = 200;
constexpr int max_newton_steps    = 100;
constexpr double residual_target  = 1.0e-14;

} // namespace

double hermite_eval(int n, double t)
{
    if (n < 0)
    {
        throw DomainError("hermite_eval: degree must be non-negative");
    }
    if (n == 0)
    {
        return 1.0;
    }
    double prev = 1.0;
    double curr = 2.0 * t;
    for (int k = 1; k < n; ++k)
    {
        const double next = 2.0 * t * curr - 2.0 * k * prev;
        prev              = curr;
        curr              = next;
    }
    return curr;
}

HermiteFunctionPair hermite_function_pair(int n, double t)
{
    if (n < 0)
    {
        throw DomainError("hermite_function: degree must be non-negative");
    }
    const double psi0 = std::exp(-0.5 * t * t) / std::sqrt(std::sqrt(std::numbers::pi));
    if (n == 0)
    {
        return {psi0, 0.0};
    }
    double prev = psi0;
    double curr = std::numbers::sqrt2 * t * psi0;
    for (int k = 1; k < n; ++k)
    {
        const double kk   = static_cast<double>(k);
        const double next = std::sqrt(2.0 / (kk + 1.0)) * t * curr - std::sqrt(kk / (kk + 1.0)) * prev;
        prev              = curr;
        curr              = next;
    }
    return {curr, prev};
}

double hermite_function(int n, double t)
{
    return hermite_function_pair(n, t).value;
}

HermiteRule hermite_rule(int n)
{
    if (n < 1 || n > max_rule_degree)
    {
        throw DomainError("hermite_rule: degree must be in [1, 200], got " + std::to_string(n));
    }

    HermiteRule rule;
    rule.degree = n;
    rule.zeros.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    rule.scaled_weights.assign(n, 0.0);

    const int half = n / 2;
    if (half > 0)
    {
        // Jacobi matrix of the monic Hermite recurrence: zero diagonal,
        // off-diagonal √(k/2).
        Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
        Eigen::VectorXd off(n - 1);
        for (int k = 1; k < n; ++k)
        {
            off[k - 1] = std::sqrt(0.5 * k);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> jacobi;
        jacobi.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
        if (jacobi.info() != Eigen::Success)
        {
            throw ConvergenceFailure("hermite_rule: Jacobi eigenvalue solve failed");
        }
        // Eigenvalues ascend; the last `half` are the positive zeros.
        const Eigen::VectorXd& guesses = jacobi.eigenvalues();

        for (int j = 0; j < half; ++j)
        {
            double x   = guesses[n - 1 - j];
            bool done  = false;
            for (int step = 0; step < max_newton_steps; ++step)
            {
                const auto [psi, psi_prev] = hermite_function_pair(n, x);
                const double dpsi          = std::sqrt(2.0 * n) * psi_prev - x * psi;
                const double delta         = psi / dpsi;
                x -= delta;
                if (std::abs(delta) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, x))
                {
                    done = std::abs(hermite_function(n, x)) <= residual_target;
                    break;
                }
            }
            if (!done)
            {
                throw ConvergenceFailure("hermite_rule: Newton iteration did not converge for zero " +
                                         std::to_string(j + 1) + " of H_" + std::to_string(n));
            }
            rule.zeros[j]         = x;
            rule.zeros[n - 1 - j] = -x;
        }
    }

    for (int j = 0; j <= (n - 1) / 2; ++j)
    {
        const double t        = rule.zeros[j];
        const double psi_next = hermite_function(n + 1, t);
        const double scaled   = 1.0 / ((n + 1.0) * psi_next * psi_next);
        const double weight   = scaled * std::exp(-t * t);

        rule.scaled_weights[j]         = scaled;
        rule.scaled_weights[n - 1 - j] = scaled;
        rule.weights[j]                = weight;
        rule.weights[n - 1 - j]        = weight;
    }
    return rule;
}

double scaling_expansion_check(int n, double a)
{
    if (n < 1 || n > 30)
    {
        throw DomainError("scaling_expansion_check: N must be in [1, 30]");
    }
    constexpr int samples = 50;
    double worst          = 0.0;
    for (int i = 0; i < samples; ++i)
    {
        const double tau = -3.0 + 6.0 * i / (samples - 1);

        double expansion = 0.0;
        double binom     = 1.0; // N! / (r! (N-2r)!)
        for (int r = 0; 2 * r <= n; ++r)
        {
            expansion += binom * std::pow(a * a - 1.0, r) * std::pow(a, n - 2 * r) *
                         hermite_eval(n - 2 * r, tau);
            binom *= static_cast<double>(n - 2 * r) * (n - 2 * r - 1) / (r + 1);
        }
        worst = std::max(worst, std::abs(hermite_eval(n, a * tau) - expansion));
    }
    return worst;
}

} // namespace gausskern
