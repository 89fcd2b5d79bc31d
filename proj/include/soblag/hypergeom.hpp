#pragma once

#include <vector>

#include "soblag/poly.hpp"

namespace soblag {

/// Terminating hypergeometric-type sum
///   sum_k prod(upper)_k / (prod(lower)_k * prod Gamma(regularized_lower + k) * k!) * z^k.
/// Each 1/Gamma factor uses recip_gamma_normalized, so a non-integer regularized
/// parameter contributes the fixed unit 1/Gamma(frac + 1) (see combinatorics.hpp).
struct HypergeometricTerm {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    std::vector<Rational> regularized_lower;

    /// Number of terms before a nonpositive-integer upper parameter cuts the series off.
    /// Throws std::domain_error if no upper parameter is a nonpositive integer.
    [[nodiscard]] int terminating_length() const;
    /// Throws std::domain_error if the series does not terminate or a lower (c)_k vanishes.
    [[nodiscard]] Rational evaluate(const Rational& z = Rational(1)) const;
};

/// sum_{k=0}^n (a)_k (b)_k / ((c)_k k!). Throws std::domain_error if some (c)_k vanishes.
[[nodiscard]] Rational gauss_partial_sum(const Rational& a, const Rational& b, const Rational& c, int n);
/// ((a+1)_n / n!) 3F2(-n, a, c-b; a+1, c; 1). Throws std::domain_error if (a+1)_n (c)_n = 0.
[[nodiscard]] Rational gauss_partial_sum_closed(const Rational& a, const Rational& b, const Rational& c, int n);

/// Regularized 2F1(-n, b; c; 1), summed term by term.
[[nodiscard]] Rational vandermonde_sum(int n, const Rational& b, const Rational& c);
/// (c-b)_n / Gamma(c+n).
[[nodiscard]] Rational vandermonde_closed(int n, const Rational& b, const Rational& c);
/// vandermonde_sum after checking it against vandermonde_closed; throws std::logic_error on mismatch.
[[nodiscard]] Rational vandermonde_regularized(int n, const Rational& b, const Rational& c);

/// Regularized 3F2(-n, a, c+l; b, c; 1), summed term by term.
[[nodiscard]] Rational phi_3f2_regularized(int n, const Rational& a, const Rational& b, const Rational& c, int l);
/// (1/Gamma(n+b)) sum_{k=0}^{l} (-n)_k (-l)_k (a)_k (b-a-k)_n / ((a-b+1)_k Gamma(c+k) k!).
/// Throws std::domain_error if b - a is a positive integer.
[[nodiscard]] Rational phi_3f2_closed(int n, const Rational& a, const Rational& b, const Rational& c, int l);

/// sum_k (a)_k/Gamma(c+k) L_{i-k}^{(-a-i)}(-x) L_k^{(b)}(x).
[[nodiscard]] Poly F_def(int i, const Rational& a, const Rational& b, const Rational& c);
/// (1/Gamma(c+i)) sum_j (-1)^j C(a-c, j) C(b-c+1, i-j) (a)_{i-j} x^j.
[[nodiscard]] Poly F_closed(int i, const Rational& a, const Rational& b, const Rational& c);

/// sum_k (a)_k/Gamma(c+k) L_{i-k}^{(-b-i-1)}(-x) L_k^{(b)}(x).
[[nodiscard]] Poly G_def(int i, const Rational& a, const Rational& b, const Rational& c);
/// Closed form of G_def(i, a+2, a, c). Throws std::domain_error if (a+1)(a-c+2) = 0.
[[nodiscard]] Poly G_closed(int i, const Rational& a, const Rational& c);

/// sum_k (a)_k (b)_k / (Gamma(d+k) Gamma(e+k)) L_{i-k}^{(-a-i)}(-x) L_k^{(c)}(x).
[[nodiscard]] Poly H_def(int i, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                         const Rational& e);
/// Double sum over j, n with the regularized 3F2(-i+j, n+b, n+c+1; n+d, n+e; 1).
[[nodiscard]] Poly H_closed(int i, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                            const Rational& e);

/// sum_i sum_j (-1)^{i+j}/Gamma(i-s) C(alpha+p, j) C(alpha+q, i-j) (alpha+r)_{i-j} x^j for integer
/// alpha >= 0 (finite). Throws std::domain_error for non-integer or negative alpha, or negative p, q, r.
[[nodiscard]] Poly K_def(int p, int q, int r, int s, const Rational& alpha);
/// sum_j C(alpha+p, j) (j-alpha-r-s)_{alpha+q} / Gamma(j+alpha+q-s) x^j, same domain as K_def.
[[nodiscard]] Poly K_closed(int p, int q, int r, int s, const Rational& alpha);

}  // namespace soblag
