#pragma once

#include <mpfr.h>

#include <string>

#include "soblag/rational.hpp"

namespace soblag {

/// Owning MPFR value with a fixed precision chosen at construction. Results of binary
/// operations take the larger precision of the two operands.
class Float {
public:
    explicit Float(long precision_bits = 256);
    Float(const Rational& value, long precision_bits);
    Float(const Float& other);
    Float(Float&& other) noexcept;
    Float& operator=(const Float& other);
    Float& operator=(Float&& other) noexcept;
    ~Float();

    static Float pi(long precision_bits);

    [[nodiscard]] long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with the given number of significant digits.
    [[nodiscard]] std::string to_string(int digits = 30) const;
    [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    Float& operator+=(const Float& rhs);
    Float& operator-=(const Float& rhs);
    Float& operator*=(const Float& rhs);
    Float& operator/=(const Float& rhs);

    friend Float operator+(Float lhs, const Float& rhs) { return lhs += rhs; }
    friend Float operator-(Float lhs, const Float& rhs) { return lhs -= rhs; }
    friend Float operator*(Float lhs, const Float& rhs) { return lhs *= rhs; }
    friend Float operator/(Float lhs, const Float& rhs) { return lhs /= rhs; }
    friend Float operator-(const Float& x);

    friend bool operator<(const Float& lhs, const Float& rhs) { return mpfr_less_p(lhs.v_, rhs.v_) != 0; }
    friend bool operator>(const Float& lhs, const Float& rhs) { return rhs < lhs; }

    friend Float abs(const Float& x);
    friend Float sin(const Float& x);

private:
    void widen_to(const Float& rhs);
    mpfr_t v_;
};

}  // namespace soblag
