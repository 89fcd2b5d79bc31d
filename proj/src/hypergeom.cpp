#include "soblag/hypergeom.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "soblag/combinatorics.hpp"
#include "soblag/laguerre.hpp"

namespace soblag {

namespace {

bool is_nonpositive_integer(const Rational& v) { return v.is_integer() && v.sign() <= 0; }

bool is_positive_integer(const Rational& v) { return v.is_integer() && v.sign() > 0; }

long integer_alpha(const Rational& alpha, const char* who) {
    if (!alpha.is_integer() || alpha.sign() < 0) {
        throw std::domain_error(std::string(who) + ": alpha must be a nonnegative integer, got " + alpha.to_string());
    }
    return alpha.to_long();
}

}  // namespace

int HypergeometricTerm::terminating_length() const {
    long best = std::numeric_limits<long>::max();
    for (const auto& u : upper) {
        if (is_nonpositive_integer(u)) best = std::min(best, -u.to_long() + 1);
    }
    if (best == std::numeric_limits<long>::max()) {
        throw std::domain_error("hypergeometric series does not terminate");
    }
    return static_cast<int>(best);
}

Rational HypergeometricTerm::evaluate(const Rational& z) const {
    const int len = terminating_length();
    Rational sum;
    Rational term(1);  // running prod(upper)_k z^k / (prod(lower)_k k!)
    for (int k = 0; k < len; ++k) {
        Rational reg(1);
        for (const auto& d : regularized_lower) reg *= recip_gamma_normalized(d + k);
        sum += term * reg;
        for (const auto& u : upper) term *= u + k;
        for (const auto& l : lower) {
            if ((l + k).is_zero()) {
                if (term.is_zero()) continue;
                throw std::domain_error("hypergeometric lower parameter " + l.to_string() + " hits a pole");
            }
            term /= l + k;
        }
        term *= z;
        term /= Rational(k + 1);
    }
    return sum;
}

Rational gauss_partial_sum(const Rational& a, const Rational& b, const Rational& c, int n) {
    if (n < 0) throw std::domain_error("gauss_partial_sum: negative n");
    Rational sum;
    Rational term(1);
    for (int k = 0; k <= n; ++k) {
        sum += term;
        if (k == n) break;
        if ((c + k).is_zero()) throw std::domain_error("gauss_partial_sum: (c)_k vanishes for c=" + c.to_string());
        term *= (a + k) * (b + k) / ((c + k) * Rational(k + 1));
    }
    return sum;
}

Rational gauss_partial_sum_closed(const Rational& a, const Rational& b, const Rational& c, int n) {
    if (n < 0) throw std::domain_error("gauss_partial_sum_closed: negative n");
    const Rational pre = pochhammer(a + 1, n);
    if (pre.is_zero() || pochhammer(c, n).is_zero()) {
        throw std::domain_error("gauss_partial_sum_closed: (a+1)_n (c)_n vanishes");
    }
    const HypergeometricTerm f{{Rational(-n), a, c - b}, {a + 1, c}, {}};
    return pre / factorial(n) * f.evaluate();
}

Rational vandermonde_sum(int n, const Rational& b, const Rational& c) {
    return HypergeometricTerm{{Rational(-n), b}, {}, {c}}.evaluate();
}

Rational vandermonde_closed(int n, const Rational& b, const Rational& c) {
    return pochhammer(c - b, n) * recip_gamma_normalized(c + n);
}

Rational vandermonde_regularized(int n, const Rational& b, const Rational& c) {
    Rational lhs = vandermonde_sum(n, b, c);
    if (lhs != vandermonde_closed(n, b, c)) {
        throw std::logic_error("Vandermonde sum disagrees with its closed form at n=" + std::to_string(n));
    }
    return lhs;
}

Rational phi_3f2_regularized(int n, const Rational& a, const Rational& b, const Rational& c, int l) {
    return HypergeometricTerm{{Rational(-n), a, c + l}, {}, {b, c}}.evaluate();
}

Rational phi_3f2_closed(int n, const Rational& a, const Rational& b, const Rational& c, int l) {
    if (l < 0) throw std::domain_error("phi_3f2_closed: negative l");
    if (is_positive_integer(b - a)) {
        throw std::domain_error("phi_3f2_closed: b - a = " + (b - a).to_string() + " is a positive integer");
    }
    Rational sum;
    for (int k = 0; k <= l; ++k) {
        const Rational num = pochhammer(Rational(-n), k) * pochhammer(Rational(-l), k) * pochhammer(a, k) *
                             pochhammer(b - a - k, n);
        if (num.is_zero()) continue;
        sum += num * recip_gamma_normalized(c + k) / (pochhammer(a - b + 1, k) * factorial(k));
    }
    return sum * recip_gamma_normalized(b + n);
}

Poly F_def(int i, const Rational& a, const Rational& b, const Rational& c) {
    Poly sum;
    for (int k = 0; k <= i; ++k) {
        const Rational w = pochhammer(a, k) * recip_gamma_normalized(c + k);
        if (w.is_zero()) continue;
        sum += laguerre_at_negx(i - k, -a - i) * laguerre(k, b) * w;
    }
    return sum;
}

Poly F_closed(int i, const Rational& a, const Rational& b, const Rational& c) {
    std::vector<Rational> out(static_cast<std::size_t>(i) + 1);
    for (int j = 0; j <= i; ++j) {
        out[static_cast<std::size_t>(j)] = sign_power(j) * binomial_general(a - c, j) *
                                           binomial_general(b - c + 1, i - j) * pochhammer(a, i - j);
    }
    return Poly(std::move(out)) * recip_gamma_normalized(c + i);
}

Poly G_def(int i, const Rational& a, const Rational& b, const Rational& c) {
    Poly sum;
    for (int k = 0; k <= i; ++k) {
        const Rational w = pochhammer(a, k) * recip_gamma_normalized(c + k);
        if (w.is_zero()) continue;
        sum += laguerre_at_negx(i - k, -b - i - 1) * laguerre(k, b) * w;
    }
    return sum;
}

Poly G_closed(int i, const Rational& a, const Rational& c) {
    const Rational d = (a + 1) * (a - c + 2);
    if (d.is_zero()) throw std::domain_error("G_closed: (a+1)(a-c+2) vanishes");
    std::vector<Rational> out(static_cast<std::size_t>(i) + 1);
    for (int j = 0; j <= i; ++j) {
        out[static_cast<std::size_t>(j)] = sign_power(j) * binomial_general(a - c + 2, j) *
                                           binomial_general(a - c + 2, i - j) * pochhammer(a + 1, i - j) *
                                           (d + Rational(j) * (i - j));
    }
    return Poly(std::move(out)) * (recip_gamma_normalized(c + i) / d);
}

Poly H_def(int i, const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& e) {
    Poly sum;
    for (int k = 0; k <= i; ++k) {
        const Rational w =
            pochhammer(a, k) * pochhammer(b, k) * recip_gamma_normalized(d + k) * recip_gamma_normalized(e + k);
        if (w.is_zero()) continue;
        sum += laguerre_at_negx(i - k, -a - i) * laguerre(k, c) * w;
    }
    return sum;
}

Poly H_closed(int i, const Rational& a, const Rational& b, const Rational& c, const Rational& d, const Rational& e) {
    std::vector<Rational> out(static_cast<std::size_t>(i) + 1);
    for (int j = 0; j <= i; ++j) {
        Rational cj;
        for (int n = 0; n <= j; ++n) {
            const Rational w = pochhammer(Rational(-j), n) * pochhammer(a, i - j + n) * pochhammer(b, n);
            if (w.is_zero()) continue;
            const HypergeometricTerm phi{{Rational(-i + j), b + n, c + n + 1}, {}, {d + n, e + n}};
            cj += w / (factorial(j) * factorial(i - j) * factorial(n)) * phi.evaluate();
        }
        out[static_cast<std::size_t>(j)] = sign_power(i + j) * cj;
    }
    return Poly(std::move(out));
}

Poly K_def(int p, int q, int r, int s, const Rational& alpha) {
    const long al = integer_alpha(alpha, "K_def");
    if (p < 0 || q < 0 || r < 0) throw std::domain_error("K_def: p, q, r must be nonnegative");
    const long jmax = al + p;
    const long imax = jmax + al + q;
    std::vector<Rational> out(static_cast<std::size_t>(jmax) + 1);
    for (long i = 0; i <= imax; ++i) {
        const Rational g = recip_gamma_int(i - s);
        if (g.is_zero()) continue;
        for (long j = 0; j <= std::min(i, jmax); ++j) {
            out[static_cast<std::size_t>(j)] += sign_power(i + j) * g * binomial_general(alpha + p, j) *
                                                binomial_general(alpha + q, i - j) * pochhammer(alpha + r, i - j);
        }
    }
    return Poly(std::move(out));
}

Poly K_closed(int p, int q, int r, int s, const Rational& alpha) {
    const long al = integer_alpha(alpha, "K_closed");
    if (p < 0 || q < 0 || r < 0) throw std::domain_error("K_closed: p, q, r must be nonnegative");
    const long jmax = al + p;
    std::vector<Rational> out(static_cast<std::size_t>(jmax) + 1);
    for (long j = 0; j <= jmax; ++j) {
        out[static_cast<std::size_t>(j)] = binomial_general(alpha + p, j) *
                                           pochhammer(Rational(j) - alpha - r - s, al + q) *
                                           recip_gamma_int(j + al + q - s);
    }
    return Poly(std::move(out));
}

}  // namespace soblag
