#ifndef GAUSSKERN_SPECIAL_FUNCTIONS_HPP
#define GAUSSKERN_SPECIAL_FUNCTIONS_HPP

namespace gausskern
{

///
/// Gamma function for z > 0. Positive integers and half-integers use exact
/// products; everything else goes through `std::tgamma`.
///
/// Throws DomainError for z <= 0 and OverflowError for z > 171.
///
double gamma_fn(double z);

///
/// Upper incomplete Gamma function Γ(z, a) = ∫_a^∞ t^{z-1} e^{-t} dt for
/// z ∈ {1/2, 1, 3/2, ...} and a >= 0.
///
/// Seeds Γ(1, a) = e^{-a} or Γ(1/2, a) = √π erfc(√a) and recurs upward with
/// Γ(z+1, a) = z Γ(z, a) + a^z e^{-a}; every term is positive so the
/// recurrence is stable. At a = 0 the result is exactly `gamma_fn(z)`.
///
double upper_incomplete_gamma(double z, double a);

///
/// Terminating Gauss hypergeometric series
///
///   2F1(-m, -j; (1-m-j)/2; z) = Σ_{n=0}^{min(m,j)} (-m)_n (-j)_n / ((1-m-j)/2)_n  zⁿ/n!
///
/// used for the Hermite product integrals ∫ e^{-2α²t²} H_j(t) H_m(t) dt.
/// Requires j + m even, which makes the lower parameter a half-integer so
/// no denominator Pochhammer factor can vanish. Terms are built from the
/// previous one by a rational factor; no factorials are formed.
///
double hyp2f1_terminating(int m, int j, double z);

/// k!! with (-1)!! = 0!! = 1. Overflows to +inf past k ≈ 300.
double double_factorial(int k);

} // namespace gausskern

#endif
