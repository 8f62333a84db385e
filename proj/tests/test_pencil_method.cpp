#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gausskern/errors.hpp"
#include "gausskern/pencil_method.hpp"
#include "oracles.hpp"

using namespace gausskern;

namespace
{
const std::pair<double, double> pairs[] = {{0.8, 1.0}, {1.25, 1.75}, {1.0, 0.5}};

double max_rel_dev(const std::vector<double>& a, const std::vector<double>& b)
{
    double dev = 0.0;
    double top = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j)
    {
        dev = std::max(dev, std::abs(a[j] - b[j]));
        top = std::max(top, std::abs(b[j]));
    }
    return top > 0.0 ? dev / top : dev;
}

// (2σ)^{-(j+m)/2} ∫_{-T}^{T} H_j(t/√(2σ)) H_m(t/√(2σ)) e^{-ηt²} dt, η = (2ρ+σ)/(2σρ)
double direct_entry(double sigma, double rho, int j, int m, double T)
{
    const long double s   = std::sqrt(2.0L * sigma);
    const long double eta = (2.0L * rho + sigma) / (2.0L * sigma * rho);
    auto f = [&](long double t) {
        return oracle::hermite_monomial(j, t / s) * oracle::hermite_monomial(m, t / s) * std::exp(-eta * t * t);
    };
    return static_cast<double>(oracle::simpson(f, -T, T, 8000) / std::pow(s, j + m));
}
} // namespace

TEST_CASE("A matrix structure")
{
    const GaussianTarget target(0.8, 1.0);
    const Matrix a = build_A(target, 8);
    CHECK(a.rows() == 8);
    CHECK(a.cols() == 9);
    for (int j = 0; j < 8; ++j)
    {
        for (int m = 0; m <= 8; ++m)
        {
            if ((j + m) % 2)
            {
                CHECK(a(j, m) == 0.0);
            }
        }
    }
    const double mass = std::sqrt(2.0 * std::numbers::pi * 1.0 * 0.8 / (2.0 + 0.8));
    CHECK(a(0, 0) == doctest::Approx(mass).epsilon(1e-14));
    CHECK(build_A_double_sum(target, 8)(0, 0) == doctest::Approx(a(0, 0)).epsilon(1e-15));
    CHECK_THROWS_AS(build_A(target, 21), DomainError);
    CHECK_THROWS_AS(build_A(target, 0), DomainError);
}

TEST_CASE("hypergeometric form against the double sum")
{
    for (auto [sigma, rho] : pairs)
    {
        const GaussianTarget target(sigma, rho);
        for (int n = 1; n <= 10; ++n)
        {
            const Matrix a = build_A(target, n);
            const Matrix d = build_A_double_sum(target, n);
            for (int j = 0; j < n; ++j)
            {
                for (int m = 0; m <= n; ++m)
                {
                    CHECK(std::abs(a(j, m) - d(j, m)) <= 1e-11 * std::abs(d(j, m)));
                }
            }
        }
    }
}

TEST_CASE("direct quadrature of the entries")
{
    for (auto [sigma, rho] : pairs)
    {
        const GaussianTarget target(sigma, rho);
        for (double T : {0.7, 1.5, 3.0})
        {
            const Matrix at = build_A_truncated(target, 5, T);
            const double scale = at.cwiseAbs().maxCoeff();
            for (int j = 0; j < 5; ++j)
            {
                for (int m = 0; m <= 5; ++m)
                {
                    CHECK(std::abs(at(j, m) - direct_entry(sigma, rho, j, m, T)) <= 1e-10 * scale);
                }
            }
        }
        const Matrix full = build_A(target, 5);
        for (int j = 0; j < 5; ++j)
        {
            CHECK(std::abs(full(j, j) - direct_entry(sigma, rho, j, j, 40.0)) <= 1e-10 * std::abs(full(j, j)));
        }
    }
}

TEST_CASE("truncated matrix")
{
    const GaussianTarget target(1.0, 1.0);
    const Matrix a  = build_A(target, 6);
    const Matrix a20 = build_A_truncated(target, 6, 20.0);
    for (int j = 0; j < 6; ++j)
    {
        for (int m = 0; m <= 6; ++m)
        {
            CHECK(std::abs(a20(j, m) - a(j, m)) <= 1e-12 * std::abs(a(j, m)));
        }
    }
    CHECK(build_A_truncated(target, 6, 0.0).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(build_A_truncated(target, 6, -1.0), DomainError);

    double prev = (build_A_truncated(target, 6, 1.0) - a).norm();
    for (int T = 2; T <= 8; ++T)
    {
        const double d = (build_A_truncated(target, 6, T) - a).norm();
        CAPTURE(T);
        CHECK((d <= 0.5 * prev || d <= 1e-12 * a.norm()));
        prev = d;
    }
}

TEST_CASE("characteristic coefficients span the null space")
{
    for (auto [sigma, rho] : pairs)
    {
        const GaussianTarget target(sigma, rho);
        for (int n = 1; n <= 10; ++n)
        {
            const Matrix a = build_A(target, n);
            Vector b(n + 1);
            const auto cp = char_poly_coeffs(target, n);
            for (int k = 0; k < n; ++k)
            {
                b[k] = cp.b[k];
            }
            b[n] = 1.0;
            CHECK((a * b).norm() <= 1e-8 * a.norm());
        }
    }
}

TEST_CASE("pencil frequencies match the scaled Hermite zeros")
{
    CHECK(pencil_frequencies(GaussianTarget(0.8, 1.0), 1) == std::vector<double>{0.0});

    for (auto [sigma, rho] : pairs)
    {
        const GaussianTarget target(sigma, rho);
        for (int n = 1; n <= 10; ++n)
        {
            CAPTURE(n);
            const auto got  = pencil_frequencies(target, n);
            const auto want = frequencies(target, hermite_rule(n));
            CHECK(max_rel_dev(got, want) <= 1e-7);
            for (int j = 0; j < n; ++j)
            {
                CHECK(got[j] == -got[n - 1 - j]);
            }
        }
    }

    const GaussianTarget fig(0.8, 1.0);
    CHECK(max_rel_dev(pencil_frequencies(fig, 6), frequencies(fig, hermite_rule(6))) <= 1e-8);
    CHECK(max_rel_dev(pencil_frequencies(fig, 12), frequencies(fig, hermite_rule(12))) <= 1e-4);

    const auto ap = approximate_pencil(fig, 6);
    const auto ah = approximate(fig, 6);
    for (int j = 0; j < 6; ++j)
    {
        CHECK(ap.coeffs[j] == doctest::Approx(ah.coeffs[j]).epsilon(1e-6));
    }
}

TEST_CASE("truncated pencil converges to the full one")
{
    const GaussianTarget target(0.8, 1.0);
    const auto full = pencil_frequencies(target, 6);
    const auto trunc = pencil_frequencies(target, 6, {}, 12.0);
    CHECK(max_rel_dev(trunc, full) <= 1e-9);
}

TEST_CASE("breakdown beyond the double-precision window")
{
    const GaussianTarget target(0.8, 1.0);
    try
    {
        pencil_frequencies(target, 15);
        FAIL("expected ProjectionFailure");
    }
    catch (const ProjectionFailure& e)
    {
        CHECK(e.order() == 15);
    }

    PencilOptions lifted;
    lifted.max_order = pencil_build_limit;
    CHECK_THROWS_AS(pencil_frequencies(target, 15, lifted), ProjectionFailure);
}

TEST_CASE("pencil blocks")
{
    const Matrix a = build_A(GaussianTarget(0.8, 1.0), 4);
    Matrix w0, w1;
    pencil_blocks(a, w0, w1);
    CHECK(w0.rows() == 4);
    CHECK(w0.cols() == 4);
    const auto problem = make_pencil_problem(GaussianTarget(0.8, 1.0), 4);
    CHECK((problem.w0.cwiseAbs() - w0.cwiseAbs()).norm() <= 1e-12);
    CHECK(!problem.truncation.has_value());
    CHECK_THROWS_AS(make_pencil_problem(GaussianTarget(0.8, 1.0), 4, 0.0), DomainError);
}
