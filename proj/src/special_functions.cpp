#include "gausskern/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "gausskern/errors.hpp"

namespace gausskern
{

namespace
{

// 2z as an integer if z is a positive multiple of 1/2, else -1.
long twice_if_half_integer(double z)
{
    const double twice = 2.0 * z;
    if (!(twice >= 1.0) || twice != std::floor(twice) || twice > 1.0e6)
    {
        return -1;
    }
    return static_cast<long>(twice);
}

} // namespace

double gamma_fn(double z)
{
    if (!(z > 0.0))
    {
        throw DomainError("gamma_fn: argument must be positive, got " + std::to_string(z));
    }
    if (z > 171.0)
    {
        throw OverflowError("gamma_fn: Γ(z) overflows double for z > 171");
    }

    const long twice = twice_if_half_integer(z);
    if (twice > 0)
    {
        if (twice % 2 == 0)
        {
            // (n-1)!
            const long n = twice / 2;
            double prod  = 1.0;
            for (long i = 2; i < n; ++i)
            {
                prod *= static_cast<double>(i);
            }
            return prod;
        }
        // Γ(k + 1/2) = √π Π_{i=1}^{k} (i - 1/2)
        const long k = (twice - 1) / 2;
        double prod  = std::sqrt(std::numbers::pi);
        for (long i = 1; i <= k; ++i)
        {
            prod *= static_cast<double>(i) - 0.5;
        }
        return prod;
    }
    return std::tgamma(z);
}

double upper_incomplete_gamma(double z, double a)
{
    const long twice = twice_if_half_integer(z);
    if (twice <= 0)
    {
        throw DomainError("upper_incomplete_gamma: z must be a positive multiple of 1/2");
    }
    if (!(a >= 0.0))
    {
        throw DomainError("upper_incomplete_gamma: a must be non-negative");
    }
    if (a == 0.0)
    {
        return gamma_fn(z);
    }

    const double log_a = std::log(a);
    double s           = (twice % 2 == 0) ? 1.0 : 0.5;
    double value       = (twice % 2 == 0) ? std::exp(-a)
                                          : std::sqrt(std::numbers::pi) * std::erfc(std::sqrt(a));
    while (2.0 * s < static_cast<double>(twice))
    {
        value = s * value + std::exp(s * log_a - a);
        s += 1.0;
    }
    return value;
}

double hyp2f1_terminating(int m, int j, double z)
{
    if (m < 0 || j < 0)
    {
        throw DomainError("hyp2f1_terminating: m and j must be non-negative");
    }
    if ((m + j) % 2 != 0)
    {
        throw DomainError("hyp2f1_terminating: m + j must be even");
    }

    const double c = 0.5 * (1.0 - m - j);
    const int last = std::min(m, j);
    double term    = 1.0;
    double sum     = 1.0;
    for (int n = 0; n < last; ++n)
    {
        const double denom = (c + n) * (n + 1);
        if (denom == 0.0)
        {
            throw DomainError("hyp2f1_terminating: vanishing Pochhammer denominator");
        }
        term *= static_cast<double>(n - m) * static_cast<double>(n - j) / denom * z;
        sum += term;
    }
    return sum;
}

double double_factorial(int k)
{
    if (k < -1)
    {
        throw DomainError("double_factorial: k must be >= -1");
    }
    double prod = 1.0;
    for (int i = k; i > 1; i -= 2)
    {
        prod *= static_cast<double>(i);
    }
    return prod;
}

} // namespace gausskern
