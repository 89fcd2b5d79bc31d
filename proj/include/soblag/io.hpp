#pragma once

#include <string>

#include "json.hpp"
#include "soblag/coeffs.hpp"
#include "soblag/numeric_sum.hpp"
#include "soblag/sobolev.hpp"

namespace soblag {

/// Rational strings, constant term first.
[[nodiscard]] nlohmann::json poly_to_json(const Poly& p);
/// Throws std::invalid_argument on malformed input.
[[nodiscard]] Poly poly_from_json(const nlohmann::json& j);

/// {family, alpha, entries:[{i, coeffs}], const_term:[{n, value}]}; constant terms for
/// n = 0..i_max where the family has one.
[[nodiscard]] nlohmann::json family_to_json(const CoefficientFamily& family);
/// Header "family,alpha,i,j,value", rows ascending in i then j over each entry's degree.
[[nodiscard]] std::string family_to_csv(const CoefficientFamily& family);
/// "i: poly" per line followed by the constant terms.
[[nodiscard]] std::string family_to_pretty(const CoefficientFamily& family);

[[nodiscard]] nlohmann::json failure_to_json(const Failure& f);
[[nodiscard]] nlohmann::json report_to_json(const VerificationReport& r);
[[nodiscard]] nlohmann::json numeric_report_to_json(const NumericSumReport& r, int digits = 40);

}  // namespace soblag
