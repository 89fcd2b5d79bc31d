#pragma once

#include <map>

#include "soblag/poly.hpp"

namespace soblag {

/// L_n^{(param)}(x) for any rational parameter, from the explicit finite sum
/// sum_k (-1)^k (param+k+1)_{n-k} / ((n-k)! k!) x^k.
[[nodiscard]] Poly laguerre(int n, const Rational& param);

/// L_n^{(param)}(-x).
[[nodiscard]] Poly laguerre_at_negx(int n, const Rational& param);

/// D^k L_n^{(param)} = (-1)^k L_{n-k}^{(param+k)}, zero for k > n.
[[nodiscard]] Poly laguerre_derivative(int n, const Rational& param, int k);

/// sum_{k=j}^{i} L_{i-k}^{(-alpha-i-1)}(-x) L_{k-j}^{(alpha+j)}(x). Throws std::domain_error if j > i.
[[nodiscard]] Poly inversion_sum(int i, int j, const Rational& alpha);

/// True iff inversion_sum(i, j, alpha) equals the Kronecker delta.
[[nodiscard]] bool check_inversion_identity(int i, int j, const Rational& alpha);

/// Solves sum_{i>=1} A_i(x) D^{i+k} L_n^{(alpha)} = rhs(n) for n = k+1..n_max, where n_max
/// is the largest key of rhs. Returns A_1..A_{n_max-k}. Throws std::domain_error if
/// some n in k+1..n_max is missing from rhs.
[[nodiscard]] std::map<int, Poly> inversion_solve(int k, const Rational& alpha, const std::map<int, Poly>& rhs);

/// Forward operator sum_{i>=1} A_i(x) D^{i+k} L_n^{(alpha)}(x); terms with i+k > n vanish.
[[nodiscard]] Poly inversion_apply(int k, const Rational& alpha, const std::map<int, Poly>& coeffs, int n);

/// Checks the parameter shift L_n^{(alpha-p)} = sum_k (-1)^k C(p,k) L_{n-k}^{(alpha)}, and the
/// derivative recurrence D^i L_n = D^{i+1} L_n - D^{i+1} L_{n+1} with its rearrangement, for all i <= n+1.
[[nodiscard]] bool parameter_shift_checks(int n, const Rational& alpha, const Rational& p);

/// (1/Gamma(alpha+1)) int_0^inf x^{alpha+k} e^{-x} dx = (alpha+1)_k. Throws std::domain_error if alpha <= -1.
[[nodiscard]] Rational moment(const Rational& alpha, int k);

/// Normalized Laguerre integral of f*g plus M f(0) g(0) + N f'(0) g'(0).
[[nodiscard]] Rational sobolev_inner_product(const Poly& f, const Poly& g, const Rational& alpha, const Rational& m,
                                             const Rational& n);

}  // namespace soblag
