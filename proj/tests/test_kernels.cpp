#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "gausskern/gaussian_approx.hpp"
#include "gausskern/kernels.hpp"

using namespace gausskern;
namespace k = gausskern::kernels;

TEST_CASE("linspace")
{
    const auto x = k::linspace(-2.0, 3.0, 11);
    REQUIRE(x.size() == 11);
    CHECK(x.front() == -2.0);
    CHECK(x.back() == 3.0);
    CHECK(x[2] == doctest::Approx(-1.0));
}

TEST_CASE("serial and openmp kernels agree")
{
    const GaussianTarget target(1.25, 0.625);
    const auto approx = approximate(target, 16);
    const auto ts     = k::linspace(-6.0, 6.0, 5001);

    const Matrix gs = k::serial::gaussian_gram(approx.freqs, 0.3);
    const Matrix go = k::omp::gaussian_gram(approx.freqs, 0.3);
    CHECK((gs - go).cwiseAbs().maxCoeff() == 0.0);

    std::vector<double> ys(ts.size()), yo(ts.size());
    k::serial::cosine_sum(approx.freqs, approx.coeffs, ts, ys);
    k::omp::cosine_sum(approx.freqs, approx.coeffs, ts, yo);
    CHECK(ys == yo);
    CHECK(ys[2500] == doctest::Approx(approx(0.0)).epsilon(1e-14));

    const double ds = k::serial::max_abs_deviation(approx.freqs, approx.coeffs, target.sigma(), ts);
    const double dm = k::omp::max_abs_deviation(approx.freqs, approx.coeffs, target.sigma(), ts);
    CHECK(ds == dm);

    auto f          = [](double t) { return std::exp(-t * t) * std::cos(3.0 * t); };
    const auto brk  = k::linspace(-8.0, 8.0, 33);
    const auto ps   = k::serial::integrate_panels(f, brk, 1e-11, 12);
    const auto po   = k::omp::integrate_panels(f, brk, 1e-11, 12);
    const double ex = std::sqrt(M_PI) * std::exp(-9.0 / 4.0);
    CHECK(ps.value == po.value);
    CHECK(ps.converged);
    CHECK(std::abs(ps.value - ex) <= 1e-12);
}

TEST_CASE("parallel_map keeps index order")
{
    for (auto backend : {k::Backend::serial, k::Backend::openmp})
    {
        const auto out = k::parallel_map(3, 40, [](int i) { return i * i; }, backend);
        REQUIRE(out.size() == 38);
        for (int i = 3; i <= 40; ++i)
        {
            CHECK(out[i - 3] == i * i);
        }
        CHECK(k::parallel_map(5, 4, [](int i) { return i; }, backend).empty());
    }
}

TEST_CASE("parallel_map rethrows the first failing index")
{
    auto body = [](int i) -> int {
        if (i == 7 || i == 12)
        {
            throw std::runtime_error(std::to_string(i));
        }
        return i;
    };
    for (auto backend : {k::Backend::serial, k::Backend::openmp})
    {
        try
        {
            k::parallel_map(1, 20, body, backend);
            FAIL("expected an exception");
        }
        catch (const std::runtime_error& e)
        {
            CHECK(std::string(e.what()) == "7");
        }
    }
}
