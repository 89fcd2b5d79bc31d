#pragma once

#include <array>
#include <optional>
#include <string>

#include "soblag/poly.hpp"

namespace soblag {

/// One nonzero coefficient of an MNPoly: the x^power coefficient of the M^deg_m N^deg_n cell.
struct MNCell {
    int deg_m = 0;
    int deg_n = 0;
    int power = 0;
    Rational value;
};

/// Polynomial in the point masses M and N, of degree at most 2 in each, with
/// Poly coefficients. Entry (p, q) is the coefficient of M^p N^q.
class MNPoly {
public:
    static constexpr int kMaxDegree = 2;

    MNPoly() = default;
    MNPoly(Poly constant);  // NOLINT(google-explicit-constructor)

    static MNPoly term(Poly coefficient, int deg_m, int deg_n);

    [[nodiscard]] const Poly& cell(int deg_m, int deg_n) const;
    [[nodiscard]] bool is_zero() const;
    /// First nonzero coefficient in (deg_m, deg_n, power) order, if any.
    [[nodiscard]] std::optional<MNCell> first_nonzero() const;
    /// Largest degree in M (resp. N) with a nonzero cell; -1 for the zero MNPoly.
    [[nodiscard]] int degree_m() const;
    [[nodiscard]] int degree_n() const;

    /// Multiply by M^deg_m N^deg_n. Throws std::logic_error if a nonzero cell would pass (2,2).
    [[nodiscard]] MNPoly mul_by_monomial(int deg_m, int deg_n) const;
    /// Cell-wise product with an x-polynomial.
    [[nodiscard]] MNPoly scale_by_poly(const Poly& p) const;
    /// Cell-wise k-th derivative in x.
    [[nodiscard]] MNPoly derivative(int k = 1) const;
    /// Substitute numeric masses.
    [[nodiscard]] Poly evaluate(const Rational& m, const Rational& n) const;

    /// "p00 + (p10)*M + ..." with zero cells omitted; "0" for the zero MNPoly.
    [[nodiscard]] std::string to_string() const;

    MNPoly& operator+=(const MNPoly& rhs);
    MNPoly& operator-=(const MNPoly& rhs);
    MNPoly& operator*=(const Rational& s);

    friend MNPoly operator+(MNPoly lhs, const MNPoly& rhs) { return lhs += rhs; }
    friend MNPoly operator-(MNPoly lhs, const MNPoly& rhs) { return lhs -= rhs; }
    friend MNPoly operator*(MNPoly p, const Rational& s) { return p *= s; }
    friend MNPoly operator*(const Rational& s, MNPoly p) { return p *= s; }
    /// Full product; throws std::logic_error if the result passes degree (2,2).
    friend MNPoly operator*(const MNPoly& lhs, const MNPoly& rhs);

    friend bool operator==(const MNPoly&, const MNPoly&) = default;

private:
    static constexpr std::size_t index(int deg_m, int deg_n) {
        return static_cast<std::size_t>(deg_m * (kMaxDegree + 1) + deg_n);
    }

    std::array<Poly, (kMaxDegree + 1) * (kMaxDegree + 1)> grid_{};
};

}  // namespace soblag
