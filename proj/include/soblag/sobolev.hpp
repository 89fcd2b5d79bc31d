#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "soblag/mn_poly.hpp"

namespace soblag {

struct SobolevCoefficients {
    MNPoly A0;
    MNPoly A1;
    MNPoly A2;
};

struct VerificationConfig {
    Rational alpha;
    int n_max = 0;
    Rational b01;  ///< the free constant b_0(1, alpha)
    bool check_systems = false;
};

/// A0, A1, A2 of L_n^{alpha,M,N} = A0 L_n + A1 D L_n + A2 D^2 L_n. Throws
/// std::domain_error if alpha <= -1.
[[nodiscard]] SobolevCoefficients sobolev_coeffs(int n, const Rational& alpha);
[[nodiscard]] MNPoly sobolev_poly(int n, const Rational& alpha);

/// i-th coefficient of the M, N and MN operator parts acting on degree-n polynomials.
/// Index 0 is the n-dependent constant; b and c include the b01 multiples of b*, c*.
[[nodiscard]] Poly a_term(const VerificationConfig& cfg, int i, int n);
[[nodiscard]] Poly b_term(const VerificationConfig& cfg, int i, int n);
[[nodiscard]] Poly c_term(const VerificationConfig& cfg, int i, int n);

/// Full operator applied to sobolev_poly(n); zero when the equation holds.
[[nodiscard]] MNPoly ode_residual(const VerificationConfig& cfg, int n);

enum class System { S1, S2, S3, S4, S5, S6, S7, S8 };
enum class Reduced { a1, a2, b1, b2, c1, c2, c3 };

[[nodiscard]] const std::vector<System>& all_systems();
[[nodiscard]] const std::vector<Reduced>& all_reduced();
[[nodiscard]] std::string system_name(System s);
[[nodiscard]] std::string reduced_name(Reduced r);
/// Throws std::invalid_argument for unknown names.
[[nodiscard]] System parse_system(std::string_view name);
[[nodiscard]] Reduced parse_reduced(std::string_view name);
/// (degree in M, degree in N) of the residual cell the system equals.
[[nodiscard]] std::pair<int, int> system_cell(System s);

[[nodiscard]] Poly system_residual(const VerificationConfig& cfg, System which, int n);
/// LHS - RHS of a reduced equation; (b2) needs n >= 1 (std::domain_error otherwise).
[[nodiscard]] Poly reduced_system_residual(const VerificationConfig& cfg, Reduced which, int n);

/// (n-1) C(n+a+1,n-1) [C(n+a+1,n-1) S3 - n S4] + (a+1)(a+3) [C(n+a+1,n-1) S7 - n S8]
/// with the c coefficients taken from `c` (index 0 included). The c terms cancel, so
/// the result vanishes for any c once a and b are correct.
[[nodiscard]] Poly equivalence_residual(const VerificationConfig& cfg, int n, const std::function<Poly(int)>& c);
[[nodiscard]] Poly equivalence_residual(const VerificationConfig& cfg, int n);

struct OrthogonalityReport {
    std::vector<std::vector<Rational>> gram;
    std::vector<std::pair<int, int>> violations;  ///< nonzero off-diagonal or nonpositive diagonal
    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Gram matrix of L_0..L_{n_max} at numeric masses. Throws std::domain_error for
/// alpha <= -1 or negative M, N.
[[nodiscard]] OrthogonalityReport orthogonality_check(const Rational& alpha, const Rational& M, const Rational& N,
                                                      int n_max);

/// sum_{i=1}^n a_i D^{i+l} L_n against its terminating 3F2 expansion.
[[nodiscard]] Poly shifted_a_sum(int n, int l, const Rational& alpha);
[[nodiscard]] Poly shifted_a_closed(int n, int l, const Rational& alpha);
[[nodiscard]] bool shifted_a_identity_check(int n, int l, const Rational& alpha);

struct Failure {
    std::string check;  ///< "residual", "S3", "S3-cell", ...
    int n = 0;
    std::string detail;
    friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
    Rational alpha;
    Rational b01;
    int n_max = 0;
    bool residual_zero = true;
    std::map<std::string, bool> systems;  ///< filled only when systems are checked
    std::vector<Failure> failures;        ///< sorted by n, then check
    [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Runs the residual (and optionally S1..S8 with their cell match) for n = 0..n_max,
/// one task per n.
[[nodiscard]] VerificationReport verify(const VerificationConfig& cfg);

}  // namespace soblag
