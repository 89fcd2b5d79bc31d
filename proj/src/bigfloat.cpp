#include "soblag/bigfloat.hpp"

#include <utility>
#include <vector>

namespace soblag {

Float::Float(long precision_bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_zero(v_, 1);
}

Float::Float(const Rational& value, long precision_bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
}

Float::Float(const Float& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Float::Float(Float&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

Float& Float::operator=(const Float& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Float& Float::operator=(Float&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Float::~Float() { mpfr_clear(v_); }

Float Float::pi(long precision_bits) {
    Float out(precision_bits);
    mpfr_const_pi(out.v_, MPFR_RNDN);
    return out;
}

std::string Float::to_string(int digits) const {
    const int len = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
    std::vector<char> buf(static_cast<std::size_t>(len) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
    return std::string(buf.data(), static_cast<std::size_t>(len));
}

void Float::widen_to(const Float& rhs) {
    if (mpfr_get_prec(rhs.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(rhs.v_), MPFR_RNDN);
}

Float& Float::operator+=(const Float& rhs) {
    widen_to(rhs);
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Float& Float::operator-=(const Float& rhs) {
    widen_to(rhs);
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Float& Float::operator*=(const Float& rhs) {
    widen_to(rhs);
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Float& Float::operator/=(const Float& rhs) {
    widen_to(rhs);
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Float operator-(const Float& x) {
    Float out(x);
    mpfr_neg(out.v_, out.v_, MPFR_RNDN);
    return out;
}

Float abs(const Float& x) {
    Float out(x);
    mpfr_abs(out.v_, out.v_, MPFR_RNDN);
    return out;
}

Float sin(const Float& x) {
    Float out(x.precision());
    mpfr_sin(out.v_, x.v_, MPFR_RNDN);
    return out;
}

}  // namespace soblag
