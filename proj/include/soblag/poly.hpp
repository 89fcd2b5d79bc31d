#pragma once

#include <span>
#include <string>
#include <vector>

#include "soblag/rational.hpp"

namespace soblag {

/// Dense univariate polynomial in x over the rationals. Coefficient j multiplies x^j;
/// trailing zeros are never stored, so the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(Rational constant);  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coefficients);

    static Poly monomial(Rational coefficient, int power);
    static Poly x() { return monomial(Rational(1), 1); }

    /// Degree, with the zero polynomial reported as -1.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^degree. Throws std::domain_error on the zero polynomial.
    [[nodiscard]] const Rational& leading() const;
    /// Coefficient of x^j, zero outside the stored range.
    [[nodiscard]] Rational coeff(int j) const;
    [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    /// k-th derivative d^k/dx^k.
    [[nodiscard]] Poly derivative(int k = 1) const;
    /// p(-x).
    [[nodiscard]] Poly reflect() const;
    [[nodiscard]] Rational evaluate(const Rational& x) const;

    /// Human readable form, ascending powers: "1 - 2*x + 1/2*x^2".
    [[nodiscard]] std::string to_string(std::string_view var = "x") const;

    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly p, const Rational& s) { return p *= s; }
    friend Poly operator*(const Rational& s, Poly p) { return p *= s; }
    friend Poly operator-(Poly p) { return p *= Rational(-1); }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

}  // namespace soblag
