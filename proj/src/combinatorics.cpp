#include "soblag/combinatorics.hpp"

#include <stdexcept>

namespace soblag {

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::domain_error("pochhammer: negative length");
    Rational result(1);
    Rational term = a;
    for (long m = 0; m < k; ++m) {
        if (term.is_zero()) return Rational(0);
        result *= term;
        term += 1;
    }
    return result;
}

Rational factorial(long k) {
    if (k < 0) throw std::domain_error("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(mpq_class(f));
}

Rational binomial_general(const Rational& a, long k) {
    if (k < 0) return Rational(0);
    return pochhammer(a - k + 1, k) / factorial(k);
}

Rational recip_gamma_int(long m) {
    if (m <= 0) return Rational(0);
    return Rational(1) / factorial(m - 1);
}

Rational recip_gamma_normalized(const Rational& c) {
    if (c.is_integer()) return recip_gamma_int(c.to_long());
    // c = t + m with t in (1, 2); Gamma(t + m) = Gamma(t) (t)_m.
    const long m = c.floor() - 1;
    const Rational t = c - m;
    if (m >= 0) return Rational(1) / pochhammer(t, m);
    return pochhammer(c, -m);
}

}  // namespace soblag
