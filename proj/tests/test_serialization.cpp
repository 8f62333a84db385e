#include <doctest.h>

#include <json.hpp>

#include "gausskern/errors.hpp"
#include "gausskern/serialization.hpp"

using namespace gausskern;

TEST_CASE("format_real round-trips")
{
    for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0})
    {
        CHECK(std::stod(format_real(x)) == x);
    }
}

TEST_CASE("cosine sum JSON")
{
    const auto a        = approximate(GaussianTarget(0.8, 1.0), 6);
    const std::string s = to_json(a);
    const auto j        = nlohmann::json::parse(s);
    CHECK(j["sigma"] == "0.80000000000000004");
    CHECK(j["N"] == 6);
    CHECK(j["freqs"].size() == 6);
    CHECK(s.find("\"sigma\"") < s.find("\"rho\""));
    CHECK(s.find("\"freqs\"") < s.find("\"coeffs\""));

    const auto back = cosine_sum_from_json(s);
    CHECK(back.target.sigma() == 0.8);
    CHECK(back.target.rho() == 1.0);
    CHECK(back.freqs == a.freqs);
    CHECK(back.coeffs == a.coeffs);

    CHECK_THROWS_AS(cosine_sum_from_json("{}"), DomainError);
    CHECK_THROWS_AS(cosine_sum_from_json("not json"), DomainError);
}

TEST_CASE("exponential sum JSON")
{
    const auto p = approximate_prony(GaussianTarget(0.8, 1.0), 3);
    const auto j = nlohmann::json::parse(to_json(p));
    CHECK(j["N"] == 3);
    CHECK(j["freqs"][0].size() == 2);
    CHECK(std::stod(j["coeffs"][1][0].get<std::string>()) == p.coeffs[1].real());
}

TEST_CASE("CSV rows")
{
    CHECK(csv_header() == "sigma,rho,N,method,weighted_error,oracle_error,bound,truncT,trunc_error,MN");

    ErrorReport r;
    r.sigma                 = 1.0;
    r.rho                   = 0.5;
    r.order                 = 3;
    r.method                = "hermite";
    r.weighted_error_closed = 0.25;
    r.bound_thm31           = 0.5;
    CHECK(csv_row(r) == "1,0.5,3,hermite,0.25,,0.5,,,");

    r.weighted_error_oracle = 0.25;
    r.mn                    = 2.0;
    CHECK(csv_row(r) == "1,0.5,3,hermite,0.25,0.25,0.5,,,2");
}
