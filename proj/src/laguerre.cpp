#include "soblag/laguerre.hpp"

#include <stdexcept>
#include <string>

#include "soblag/combinatorics.hpp"

namespace soblag {

Poly laguerre(int n, const Rational& param) {
    if (n < 0) throw std::domain_error("laguerre: negative degree");
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] =
            sign_power(k) * pochhammer(param + k + 1, n - k) / (factorial(n - k) * factorial(k));
    }
    return Poly(std::move(c));
}

Poly laguerre_at_negx(int n, const Rational& param) { return laguerre(n, param).reflect(); }

Poly laguerre_derivative(int n, const Rational& param, int k) {
    if (k < 0) throw std::domain_error("laguerre_derivative: negative order");
    if (k > n) return {};
    return laguerre(n - k, param + k) * sign_power(k);
}

Poly inversion_sum(int i, int j, const Rational& alpha) {
    if (j < 0 || j > i) {
        throw std::domain_error("inversion_sum: need 0 <= j <= i, got i=" + std::to_string(i) +
                                ", j=" + std::to_string(j));
    }
    Poly sum;
    for (int k = j; k <= i; ++k) {
        sum += laguerre_at_negx(i - k, -alpha - i - 1) * laguerre(k - j, alpha + j);
    }
    return sum;
}

bool check_inversion_identity(int i, int j, const Rational& alpha) {
    return inversion_sum(i, j, alpha) == Poly(Rational(i == j ? 1 : 0));
}

std::map<int, Poly> inversion_solve(int k, const Rational& alpha, const std::map<int, Poly>& rhs) {
    std::map<int, Poly> out;
    if (rhs.empty()) return out;
    const int n_max = rhs.rbegin()->first;
    for (int n = k + 1; n <= n_max; ++n) {
        if (!rhs.contains(n)) throw std::domain_error("inversion_solve: missing right-hand side for n=" + std::to_string(n));
    }
    for (int i = 1; i <= n_max - k; ++i) {
        Poly a;
        for (int j = 1; j <= i; ++j) a += laguerre_at_negx(i - j, -alpha - i - k - 1) * rhs.at(j + k);
        out[i] = a * sign_power(i + k);
    }
    return out;
}

Poly inversion_apply(int k, const Rational& alpha, const std::map<int, Poly>& coeffs, int n) {
    Poly sum;
    for (const auto& [i, a] : coeffs) {
        if (i < 1 || i + k > n) continue;
        sum += a * laguerre_derivative(n, alpha, i + k);
    }
    return sum;
}

bool parameter_shift_checks(int n, const Rational& alpha, const Rational& p) {
    Poly shifted;
    for (int k = 0; k <= n; ++k) shifted += laguerre(n - k, alpha) * (sign_power(k) * binomial_general(p, k));
    if (shifted != laguerre(n, alpha - p)) return false;

    for (int i = 0; i <= n + 1; ++i) {
        const Poly di = laguerre_derivative(n, alpha, i);
        const Poly di1 = laguerre_derivative(n, alpha, i + 1);
        const Poly di1_next = laguerre_derivative(n + 1, alpha, i + 1);
        if (di != di1 - di1_next) return false;
        if (di1_next != di1 - di) return false;
    }
    return true;
}

Rational moment(const Rational& alpha, int k) {
    if (alpha <= Rational(-1)) throw std::domain_error("moment: need alpha > -1, got " + alpha.to_string());
    return pochhammer(alpha + 1, k);
}

Rational sobolev_inner_product(const Poly& f, const Poly& g, const Rational& alpha, const Rational& m,
                               const Rational& n) {
    if (alpha <= Rational(-1)) {
        throw std::domain_error("sobolev_inner_product: need alpha > -1, got " + alpha.to_string());
    }
    const Poly fg = f * g;
    Rational total;
    Rational mom(1);
    for (int j = 0; j <= fg.degree(); ++j) {
        total += fg.coeff(j) * mom;
        mom *= alpha + 1 + j;
    }
    total += m * f.coeff(0) * g.coeff(0);
    total += n * f.coeff(1) * g.coeff(1);
    return total;
}

}  // namespace soblag
