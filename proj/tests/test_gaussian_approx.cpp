#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "gausskern/error_analysis.hpp"
#include "gausskern/errors.hpp"
#include "gausskern/gaussian_approx.hpp"
#include "gausskern/kernels.hpp"
#include "oracles.hpp"

using namespace gausskern;

TEST_CASE("target validation")
{
    CHECK_THROWS_AS(GaussianTarget(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(GaussianTarget(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(GaussianTarget(std::numeric_limits<double>::infinity(), 1.0), DomainError);
    const GaussianTarget t(0.8, 1.0);
    CHECK(t.ratio() == 1.0 / 0.8);
    CHECK(t(0.0) == 1.0);
}

TEST_CASE("frequencies")
{
    const GaussianTarget unit(1.0, 1.0);
    CHECK(frequencies(unit, hermite_rule(1)) == std::vector<double>{0.0});

    const auto f2 = frequencies(unit, hermite_rule(2));
    CHECK(f2[0] == doctest::Approx(-std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    CHECK(f2[1] == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));

    const auto rule = hermite_rule(9);
    const auto a    = frequencies(GaussianTarget(0.7, 1.3), rule);
    const auto b    = frequencies(GaussianTarget(1.4, 2.6), rule);
    for (int j = 0; j < 9; ++j)
    {
        CHECK(b[j] == doctest::Approx(a[j] / std::sqrt(2.0)).epsilon(1e-14));
        CHECK(a[j] == -a[8 - j]);
    }
}

TEST_CASE("characteristic polynomial")
{
    const GaussianTarget target(0.8, 1.0);
    const double q = (1.0 + 0.8) / (2.0 * 0.8 * (2.0 + 0.8));

    CHECK(char_poly_coeffs(target, 1).b == std::vector<double>{0.0});
    const auto b2 = char_poly_coeffs(target, 2).b;
    CHECK(b2[0] == doctest::Approx(2.0 * q).epsilon(1e-15));
    CHECK(b2[1] == 0.0);
    const auto mu2 = frequencies(target, hermite_rule(2));
    CHECK(b2[0] == doctest::Approx(mu2[0] * mu2[0]).epsilon(1e-14));

    SUBCASE("Vieta against the frequencies")
    {
        for (auto [sigma, rho] : {std::pair{0.8, 1.0}, std::pair{1.0, 0.5}, std::pair{1.25, 1.75}})
        {
            const GaussianTarget tg(sigma, rho);
            for (int n = 1; n <= 12; ++n)
            {
                CAPTURE(n);
                const auto mu = frequencies(tg, hermite_rule(n));
                // Π (λ - iμ_j), coefficients low to high.
                std::vector<std::complex<double>> p{1.0};
                for (double m : mu)
                {
                    std::vector<std::complex<double>> next(p.size() + 1, 0.0);
                    for (std::size_t k = 0; k < p.size(); ++k)
                    {
                        next[k + 1] += p[k];
                        next[k] -= std::complex<double>(0.0, m) * p[k];
                    }
                    p = next;
                }
                const auto b = char_poly_coeffs(tg, n).b;
                double scale = 1.0;
                for (double v : b)
                {
                    scale = std::max(scale, std::abs(v));
                }
                for (int k = 0; k < n; ++k)
                {
                    CHECK(std::abs(p[k].imag()) <= 1e-12 * scale);
                    if ((n - k) % 2 == 0)
                    {
                        CHECK(b[k] > 0.0);
                        CHECK(std::abs(p[k].real() - b[k]) <= 1e-9 * b[k]);
                    }
                    else
                    {
                        CHECK(b[k] == 0.0);
                    }
                }
            }
        }
    }
    CHECK_THROWS_AS(char_poly_coeffs(target, 41), DomainError);
}

TEST_CASE("coefficient solve")
{
    for (double r : {0.25, 0.5, 1.0, 3.0})
    {
        const auto a = approximate(GaussianTarget(1.0, r), 1);
        CHECK(a.coeffs[0] == doctest::Approx(1.0 / std::sqrt(1.0 + r)).epsilon(1e-15));
    }
    CHECK(approximate(GaussianTarget(1.0, 1.0), 1).coeffs[0] == doctest::Approx(1.0 / std::sqrt(2.0)));

    SUBCASE("r-only dependence")
    {
        for (double r : {0.5, 1.25})
        {
            for (int n : {3, 8, 14})
            {
                const auto a = approximate(GaussianTarget(1.0, r), n);
                const auto b = approximate(GaussianTarget(5.0, 5.0 * r), n);
                for (int j = 0; j < n; ++j)
                {
                    CHECK(std::abs(a.coeffs[j] - b.coeffs[j]) <= 1e-12);
                }
            }
        }
    }

    SUBCASE("residual and symmetry at sigma = 0.8, rho = 1, N = 6")
    {
        const GaussianTarget target(0.8, 1.0);
        const auto a   = approximate(target, 6);
        const Matrix h = gram_matrix(target, a.freqs);
        const Vector g = gram_rhs(target, a.freqs);
        const Vector x = Eigen::Map<const Vector>(a.coeffs.data(), 6);
        CHECK((h * x - g).norm() <= 1e-10 * g.norm());
        for (int j = 0; j < 6; ++j)
        {
            CHECK(a.coeffs[j] == a.coeffs[5 - j]);
            CHECK(a.freqs[j] == -a.freqs[5 - j]);
        }
    }

    SUBCASE("half-size cosine system")
    {
        const GaussianTarget target(0.8, 1.0);
        for (int n = 1; n <= 14; ++n)
        {
            const auto mu   = frequencies(target, hermite_rule(n));
            const auto full = solve_coefficients(target, mu);
            const auto half = solve_coefficients_cosine(target, mu);
            for (int j = 0; j < n; ++j)
            {
                CHECK(std::abs(full[j] - half[j]) <= 1e-12 * std::max(1.0, std::abs(full[j])));
            }
        }
    }
}

TEST_CASE("order window and breakdown")
{
    const GaussianTarget target(1.0, 0.5);
    CHECK_THROWS_AS(approximate(target, 0), DomainError);
    CHECK_THROWS_AS(approximate(target, 61), DomainError);
    try
    {
        approximate(target, 36);
        FAIL("expected NotPositiveDefinite");
    }
    catch (const NotPositiveDefinite& e)
    {
        CHECK(e.order() == 36);
    }
}

TEST_CASE("quadrature-derived coefficients")
{
    for (double r : {0.5, 1.0, 1.25})
    {
        const GaussianTarget target(1.0, r);
        const auto g1 = quadrature_coefficients(target, hermite_rule(1));
        CHECK(g1[0] == doctest::Approx(std::sqrt(r + 1.0) / std::sqrt(2.0 * r + 1.0)).epsilon(1e-15));

        for (int n = 2; n <= 12; ++n)
        {
            const auto rule = hermite_rule(n);
            const auto mu   = frequencies(target, rule);
            const auto gh   = quadrature_coefficients(target, rule);
            const double s  = target.sigma();
            const double p  = target.rho();
            double dot      = 0.0;
            for (int j = 0; j < n; ++j)
            {
                dot += std::sqrt(2.0 * std::numbers::pi * s * p / (s + p)) *
                       std::exp(-s * p * mu[j] * mu[j] / (2.0 * (s + p))) * gh[j];
            }
            const double want = std::sqrt(2.0 * std::numbers::pi * p) / std::sqrt(2.0 * r + 1.0);
            CHECK(std::abs(dot - want) <= 1e-10 * want);

            const auto opt = approximate(target, rule);
            CHECK(closed_form_error(target, mu, gh).squared >= closed_form_error(opt).squared);
        }
    }
}

TEST_CASE("first-order stationarity")
{
    const GaussianTarget target(0.8, 1.0);
    const auto a     = approximate(target, 4);
    const long double f0 = oracle::weighted_error_sq(0.8, 1.0, a.freqs, a.coeffs);
    for (int j = 0; j < 4; ++j)
    {
        for (double d : {1e-6, -1e-6})
        {
            auto c = a.coeffs;
            c[j] += d;
            CHECK(oracle::weighted_error_sq(0.8, 1.0, a.freqs, c) > f0);
        }
    }
}

TEST_CASE("weighted error decays across N = 1..18")
{
    const GaussianTarget target(0.8, 1.0);
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= 18; ++n)
    {
        const double e = closed_form_error(approximate(target, n)).value;
        CHECK(e < prev);
        prev = e;
    }
}

TEST_CASE("sup error on [-5, 5] at sigma = 1.25, rho = sigma/2, N = 16")
{
    const GaussianTarget target(1.25, 0.625);
    const auto a   = approximate(target, 16);
    const auto ts  = kernels::linspace(-5.0, 5.0, 10000);
    const double e = kernels::max_abs_deviation(a.freqs, a.coeffs, 1.25, ts);
    CHECK(e <= 5.0 * 4.3e-9);
    CHECK(e >= 4.3e-9 / 5.0);
}
