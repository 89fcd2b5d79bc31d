#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soblag/poly.hpp"

namespace soblag {

enum class Family {
    a,
    bstar,
    beta,
    cstar,
    gamma,
    beta1,
    beta2,
    beta3,
    beta4,
    gamma1,
    gamma2,
    gamma3,
    gamma4,
    gamma5,
};

/// All families in declaration order.
[[nodiscard]] const std::vector<Family>& all_families();
/// Throws std::invalid_argument for an unknown name.
[[nodiscard]] Family parse_family(std::string_view name);
[[nodiscard]] std::string family_name(Family f);

// ---- individual coefficients -------------------------------------------------

/// a_0(n) = C(n+alpha+1, n-1).
[[nodiscard]] Rational a0(int n, const Rational& alpha);
[[nodiscard]] Poly a_coeff(int i, const Rational& alpha);
[[nodiscard]] Poly bstar(int i, const Rational& alpha);
[[nodiscard]] Poly cstar(int i, const Rational& alpha);

/// [n(alpha+2)-alpha]/[(alpha+1)(alpha+4)] C(n+alpha+1, n-2); zero for n <= 1.
[[nodiscard]] Rational beta0(int n, const Rational& alpha);
/// Component p in 1..4 of beta_i, closed form. Zero for i = 1.
[[nodiscard]] Poly beta_component(int p, int i, const Rational& alpha);
/// Same component from its Laguerre-product sum.
[[nodiscard]] Poly beta_component_laguerre(int p, int i, const Rational& alpha);
[[nodiscard]] Poly beta_coeff(int i, const Rational& alpha);

/// gamma_0(n) as a partial sum of binomial products.
[[nodiscard]] Rational gamma0_by_sum(int n, const Rational& alpha);
/// gamma_0(n) through a terminating 3F2 at 1.
[[nodiscard]] Rational gamma0_by_hypergeometric(int n, const Rational& alpha);
/// gamma_0(n), zero at n = 0. Throws std::logic_error if the two routes disagree.
[[nodiscard]] Rational gamma0(int n, const Rational& alpha);

/// Component p in 1..5 of gamma_i from the closed single/double sums.
[[nodiscard]] Poly gamma_component_closed(int p, int i, const Rational& alpha);
/// Component p in 1..5 of gamma_i from the Laguerre-product sums.
[[nodiscard]] Poly gamma_component_laguerre(int p, int i, const Rational& alpha);
/// Memoized component; the first request per (p, i, alpha) evaluates both routes and
/// throws std::logic_error if they differ.
[[nodiscard]] Poly gamma_component(int p, int i, const Rational& alpha);
[[nodiscard]] Poly gamma_coeff(int i, const Rational& alpha);

// ---- families ----------------------------------------------------------------

/// Memoized entry i >= 1 of a family. Safe to call from several threads.
[[nodiscard]] Poly family_entry(Family f, int i, const Rational& alpha);

/// n-dependent constant term: a_0, beta_0, gamma_0 for a/beta/gamma, 1 (n >= 1) for the
/// starred families, nullopt for single components.
[[nodiscard]] std::optional<Rational> const_term(Family f, int n, const Rational& alpha);

struct CoefficientFamily {
    Family id;
    Rational alpha;
    std::map<int, Poly> table;  ///< i -> coefficient, i = 1..i_max
    std::function<std::optional<Rational>(int)> const_term;
};

[[nodiscard]] CoefficientFamily build_family(Family f, const Rational& alpha, int i_max);

/// Largest i <= scan_limit with a nonzero entry, 0 if none.
[[nodiscard]] int family_order(Family f, const Rational& alpha, int scan_limit);
/// 2 alpha + 4, 2 alpha + 8, 4 alpha + 10 for a, beta, gamma at integer alpha >= 0.
/// Throws std::domain_error for other families or alpha.
[[nodiscard]] int theoretical_order(Family f, const Rational& alpha);
/// Closed-form top entry table[theoretical_order]; same domain as theoretical_order.
[[nodiscard]] Poly expected_top_entry(Family f, const Rational& alpha);
/// sum_{i=1}^{order} table[i] for a, beta, gamma at integer alpha >= 0.
[[nodiscard]] Poly family_sum(Family f, const Rational& alpha);

/// Checks const_term(n) = -sum_{i=1}^n n!/(n-i)! [x^i] table[i] for 1 <= n <= n_max.
[[nodiscard]] bool trace_identity_holds(Family f, const Rational& alpha, int n_max);
/// The first-difference formulas of a_0, b_0 and c_0 for n <= n_max; b01 is the free
/// parameter b_0(1, alpha).
[[nodiscard]] bool difference_relations_hold(const Rational& alpha, const Rational& b01, int n_max);

/// Clears the memo tables (tests use this to exercise concurrent fills).
void clear_coefficient_cache();

}  // namespace soblag
