#pragma once

#include <vector>

#include "soblag/bigfloat.hpp"
#include "soblag/coeffs.hpp"

namespace soblag {

struct NumericSumReport {
    Family family;
    Rational alpha;
    Rational x;
    int i_max;
    long precision_bits;
    Float partial_sum;          ///< sum_{i=1}^{i_max} table[i](x)
    Float extrapolated;         ///< limit of the partial sums by polynomial extrapolation in 1/N
    Float extrapolation_error;  ///< |extrapolated - same extrapolation with one node fewer|
    Float closed_form;          ///< closed-form value of the infinite sum
    Float truncation_bound;     ///< bound on the neglected tail of the closed form's series
    Float raw_difference;       ///< |partial_sum - closed_form|
    Float difference;           ///< |extrapolated - closed_form|
};

/// Entries a_i(x) or beta_i(x) for i = 1..i_max in MPFR (index 0 unused).
[[nodiscard]] std::vector<Float> family_values_numeric(Family family, const Rational& alpha, const Rational& x,
                                                       int i_max, long precision_bits);

/// Closed form of the infinite coefficient sum for family a or beta, with the bound on
/// the truncated hypergeometric tail stored in `bound`.
[[nodiscard]] Float family_sum_closed_form(Family family, const Rational& alpha, const Rational& x,
                                           long precision_bits, Float& bound);

/// Numeric comparison of sum_i table[i](x) with its closed form. Family must be a or
/// beta; alpha > -1 (std::domain_error otherwise); i_max >= 2.
[[nodiscard]] NumericSumReport family_sum_numeric(Family family, const Rational& alpha, const Rational& x,
                                                  int i_max = 400, long precision_bits = 256);

}  // namespace soblag
