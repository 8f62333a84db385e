#include "gausskern/serialization.hpp"

#include <cstdio>

#include <json.hpp>

#include "gausskern/errors.hpp"

namespace gausskern
{

using json = nlohmann::ordered_json;

namespace
{

json real_array(const std::vector<double>& xs)
{
    json a = json::array();
    for (double x : xs)
    {
        a.push_back(format_real(x));
    }
    return a;
}

json complex_array(const std::vector<std::complex<double>>& zs)
{
    json a = json::array();
    for (const auto& z : zs)
    {
        a.push_back(json::array({format_real(z.real()), format_real(z.imag())}));
    }
    return a;
}

json header(const GaussianTarget& target, int n)
{
    return json{{"sigma", format_real(target.sigma())}, {"rho", format_real(target.rho())}, {"N", n}};
}

double parse_real(const json& v)
{
    if (v.is_number())
    {
        return v.get<double>();
    }
    if (!v.is_string())
    {
        throw DomainError("approximation JSON: expected a number or numeric string");
    }
    const auto s = v.get<std::string>();
    std::size_t used = 0;
    double x         = 0.0;
    try
    {
        x = std::stod(s, &used);
    }
    catch (const std::exception&)
    {
        used = 0;
    }
    if (used == 0 || used != s.size())
    {
        throw DomainError("approximation JSON: '" + s + "' is not a real number");
    }
    return x;
}

std::string optional_field(const std::optional<double>& x)
{
    return x ? format_real(*x) : std::string();
}

} // namespace

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string to_json(const CosineSumApprox& approx)
{
    json j      = header(approx.target, approx.order());
    j["freqs"]  = real_array(approx.freqs);
    j["coeffs"] = real_array(approx.coeffs);
    return j.dump();
}

std::string to_json(const ExponentialSum& approx)
{
    json j      = header(approx.target, approx.order());
    j["freqs"]  = complex_array(approx.freqs);
    j["coeffs"] = complex_array(approx.coeffs);
    return j.dump();
}

CosineSumApprox cosine_sum_from_json(const std::string& text)
{
    json j;
    try
    {
        j = json::parse(text);
    }
    catch (const json::exception& e)
    {
        throw DomainError(std::string("approximation JSON: ") + e.what());
    }
    for (const char* key : {"sigma", "rho", "N", "freqs", "coeffs"})
    {
        if (!j.contains(key))
        {
            throw DomainError(std::string("approximation JSON: missing '") + key + "'");
        }
    }
    CosineSumApprox approx{GaussianTarget(parse_real(j["sigma"]), parse_real(j["rho"])), {}, {}};
    for (const auto& v : j["freqs"])
    {
        approx.freqs.push_back(parse_real(v));
    }
    for (const auto& v : j["coeffs"])
    {
        approx.coeffs.push_back(parse_real(v));
    }
    if (!j["N"].is_number_integer() || j["N"].get<long>() != approx.order() ||
        approx.coeffs.size() != approx.freqs.size())
    {
        throw DomainError("approximation JSON: N does not match the array lengths");
    }
    return approx;
}

std::string csv_header()
{
    return "sigma,rho,N,method,weighted_error,oracle_error,bound,truncT,trunc_error,MN";
}

std::string csv_row(const ErrorReport& r)
{
    return format_real(r.sigma) + ',' + format_real(r.rho) + ',' + std::to_string(r.order) + ',' +
           r.method + ',' + format_real(r.weighted_error_closed) + ',' +
           optional_field(r.weighted_error_oracle) + ',' + format_real(r.bound_thm31) + ',' +
           optional_field(r.truncated_T) + ',' + optional_field(r.truncated_error) + ',' +
           optional_field(r.mn);
}

} // namespace gausskern
