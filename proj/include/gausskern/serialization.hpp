#ifndef GAUSSKERN_SERIALIZATION_HPP
#define GAUSSKERN_SERIALIZATION_HPP

#include <string>

#include "gausskern/error_analysis.hpp"
#include "gausskern/gaussian_approx.hpp"
#include "gausskern/prony_derivative.hpp"

namespace gausskern
{

/// %.17g, enough to round-trip any double.
std::string format_real(double x);

///
/// One compact JSON object per approximation,
///   {"sigma":"0.8","rho":"1","N":6,"freqs":[...],"coeffs":[...]}
/// with every real written as a decimal string. Complex entries of an
/// ExponentialSum are ["re","im"] pairs.
///
std::string to_json(const CosineSumApprox& approx);
std::string to_json(const ExponentialSum& approx);

/// Inverse of to_json for cosine sums. Throws DomainError on bad input.
CosineSumApprox cosine_sum_from_json(const std::string& text);

/// "sigma,rho,N,method,weighted_error,oracle_error,bound,truncT,trunc_error,MN"
std::string csv_header();
/// Absent optional fields are left empty.
std::string csv_row(const ErrorReport& report);

} // namespace gausskern

#endif
