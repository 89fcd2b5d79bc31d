#pragma once

#include "soblag/rational.hpp"

namespace soblag {

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1. Requires k >= 0.
[[nodiscard]] Rational pochhammer(const Rational& a, long k);

/// k! for k >= 0.
[[nodiscard]] Rational factorial(long k);

/// Generalized binomial C(a, k) = (a-k+1)_k / k!, and 0 for k < 0.
[[nodiscard]] Rational binomial_general(const Rational& a, long k);

/// 1/Gamma(m) at an integer: 0 at the poles m <= 0, otherwise 1/(m-1)!.
[[nodiscard]] Rational recip_gamma_int(long m);

/// 1/Gamma(c) for rational c, expressed in units of 1/Gamma(c - floor(c) + 1).
///
/// Arguments that differ by an integer share the same unit, so any identity whose
/// Gamma arguments differ only by integers can be checked in exact rational
/// arithmetic. For integer c the unit is 1/Gamma(1) = 1 and the result equals
/// recip_gamma_int(c).
[[nodiscard]] Rational recip_gamma_normalized(const Rational& c);

}  // namespace soblag
