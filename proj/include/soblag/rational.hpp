#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace soblag {

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    Rational(long numerator, long denominator);

    explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

    /// Accepts "p/q" (q != 0, any sign) or a bare integer "p".
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& raw() const noexcept { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const noexcept { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(value_); }

    /// Value as a machine integer. Throws std::domain_error if not an integer or out of range.
    [[nodiscard]] long to_long() const;
    /// Largest integer not exceeding the value.
    [[nodiscard]] long floor() const;
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    /// "p/q", or "p" when the denominator is 1.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
    Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
    Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

[[nodiscard]] Rational abs(const Rational& x);
/// x^k for integer k (k < 0 requires x != 0).
[[nodiscard]] Rational pow(const Rational& x, long k);
/// (-1)^k
[[nodiscard]] inline Rational sign_power(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace soblag
