#include "soblag/sobolev.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <stdexcept>
#include <tuple>

#include "soblag/coeffs.hpp"
#include "soblag/combinatorics.hpp"
#include "soblag/hypergeom.hpp"
#include "soblag/laguerre.hpp"

namespace soblag {

namespace {

void require_alpha(const Rational& alpha) {
    if (alpha <= Rational(-1)) throw std::domain_error("alpha must exceed -1, got " + alpha.to_string());
}

using Coef = std::function<Poly(int)>;

// sum_{i=0}^{n} coef(i) D^{i+shift} L_n
Poly dsum(const Coef& coef, int n, int shift, const Rational& alpha) {
    Poly s;
    for (int i = 0; i + shift <= n; ++i) {
        const Poly ci = coef(i);
        if (!ci.is_zero()) s += ci * laguerre_derivative(n, alpha, i + shift);
    }
    return s;
}

// Scalars of one n that recur across the systems.
struct Scalars {
    Rational a1, a2, a3;
    Rational q;  // [n(a+2)-(a+1)] / ((a+1)(a+3))
    int n;
    const Rational* alpha;

    Scalars(int n_, const Rational& alpha_)
        : a1(alpha_ + 1), a2(alpha_ + 2), a3(alpha_ + 3),
          q(((alpha_ + 2) * n_ - (alpha_ + 1)) / ((alpha_ + 1) * (alpha_ + 3))), n(n_), alpha(&alpha_) {}

    // C(n+a, n-j) and C(n+a+1, n-j)
    Rational bn(int j) const { return binomial_general(*alpha + n, n - j); }
    Rational bn1(int j) const { return binomial_general(*alpha + n + 1, n - j); }

    // coefficients of the M, N and MN parts of A0, A1, A2
    std::array<Rational, 3> m_part() const { return {bn(1), bn(0), Rational(0)}; }
    std::array<Rational, 3> n_part() const { return {q * bn(2), Rational(n - 1) / a1 * bn(1), bn(1) / a1}; }
    std::array<Rational, 3> mn_part() const {
        return {bn(1) * bn1(2) / (a1 * a2), bn(0) * bn1(2) * 2 / (a1 * a1), bn(0) * bn1(1) / (a1 * a1)};
    }
};

Poly combine(const std::array<Rational, 3>& w, const std::array<Poly, 3>& s) {
    return s[0] * w[0] + s[1] * w[1] + s[2] * w[2];
}

struct SystemInputs {
    std::array<Poly, 3> a, b, c;  // sums with D^{i}, D^{i+1}, D^{i+2}
    Poly d2, d3;                  // D^2 L_{n+1}, D^3 L_{n+1}
};

SystemInputs gather(const VerificationConfig& cfg, int n, const Coef& c) {
    const Rational& alpha = cfg.alpha;
    const Coef a = [&](int i) { return a_term(cfg, i, n); };
    const Coef b = [&](int i) { return b_term(cfg, i, n); };
    SystemInputs in;
    for (int k = 0; k < 3; ++k) {
        in.a[k] = dsum(a, n, k, alpha);
        in.b[k] = dsum(b, n, k, alpha);
        in.c[k] = dsum(c, n, k, alpha);
    }
    in.d2 = laguerre_derivative(n + 1, alpha, 2);
    in.d3 = laguerre_derivative(n + 1, alpha, 3);
    return in;
}

Poly evaluate_system(System which, const Scalars& s, const SystemInputs& in) {
    const Rational inv = Rational(1) / s.a1;
    switch (which) {
        case System::S1:
            return in.a[0] - in.d2 * s.bn(0);
        case System::S2:
            return combine(s.m_part(), in.a);
        case System::S3:
            return combine(s.n_part(), in.a) + combine(s.m_part(), in.b) + in.c[0] -
                   (in.d2 * s.bn1(2) + in.d3 * s.bn1(1)) * (s.bn(0) * 2 * inv * inv);
        case System::S4:
            return combine(s.mn_part(), in.a) + combine(s.m_part(), in.c);
        case System::S5:
            return in.b[0] - (in.d2 * Rational(s.n - 1) + in.d3 * 2) * (s.bn(1) * inv);
        case System::S6:
            return combine(s.n_part(), in.b);
        case System::S7:
            return combine(s.mn_part(), in.b) + combine(s.n_part(), in.c);
        case System::S8:
            return combine(s.mn_part(), in.c);
    }
    throw std::logic_error("unknown system");
}

constexpr std::array<std::pair<System, std::string_view>, 8> kSystems{{
    {System::S1, "S1"},
    {System::S2, "S2"},
    {System::S3, "S3"},
    {System::S4, "S4"},
    {System::S5, "S5"},
    {System::S6, "S6"},
    {System::S7, "S7"},
    {System::S8, "S8"},
}};

constexpr std::array<std::pair<Reduced, std::string_view>, 7> kReduced{{
    {Reduced::a1, "a1"},
    {Reduced::a2, "a2"},
    {Reduced::b1, "b1"},
    {Reduced::b2, "b2"},
    {Reduced::c1, "c1"},
    {Reduced::c2, "c2"},
    {Reduced::c3, "c3"},
}};

std::string describe(const MNCell& cell) {
    return "M^" + std::to_string(cell.deg_m) + " N^" + std::to_string(cell.deg_n) + " x^" +
           std::to_string(cell.power) + ": " + cell.value.to_string();
}

std::string describe(const Poly& p) { return "nonzero remainder " + p.to_string(); }

}  // namespace

SobolevCoefficients sobolev_coeffs(int n, const Rational& alpha) {
    require_alpha(alpha);
    if (n < 0) throw std::domain_error("sobolev_coeffs: n must be nonnegative");
    const Scalars s(n, alpha);
    const auto m = s.m_part(), nn = s.n_part(), mn = s.mn_part();
    SobolevCoefficients out;
    std::array<MNPoly*, 3> targets{&out.A0, &out.A1, &out.A2};
    for (std::size_t k = 0; k < 3; ++k) {
        *targets[k] = MNPoly::term(Poly(m[k]), 1, 0) + MNPoly::term(Poly(nn[k]), 0, 1) + MNPoly::term(Poly(mn[k]), 1, 1);
    }
    out.A0 += MNPoly(Poly(Rational(1)));
    return out;
}

MNPoly sobolev_poly(int n, const Rational& alpha) {
    const auto c = sobolev_coeffs(n, alpha);
    return c.A0.scale_by_poly(laguerre(n, alpha)) + c.A1.scale_by_poly(laguerre_derivative(n, alpha, 1)) +
           c.A2.scale_by_poly(laguerre_derivative(n, alpha, 2));
}

Poly a_term(const VerificationConfig& cfg, int i, int n) {
    if (i == 0) return Poly(a0(n, cfg.alpha));
    return family_entry(Family::a, i, cfg.alpha);
}

Poly b_term(const VerificationConfig& cfg, int i, int n) {
    if (i == 0) return n == 0 ? Poly() : Poly(cfg.b01 + beta0(n, cfg.alpha));
    return family_entry(Family::bstar, i, cfg.alpha) * cfg.b01 + family_entry(Family::beta, i, cfg.alpha);
}

Poly c_term(const VerificationConfig& cfg, int i, int n) {
    if (i == 0) return n == 0 ? Poly() : Poly(cfg.b01 + gamma0(n, cfg.alpha));
    return family_entry(Family::cstar, i, cfg.alpha) * cfg.b01 + family_entry(Family::gamma, i, cfg.alpha);
}

MNPoly ode_residual(const VerificationConfig& cfg, int n) {
    require_alpha(cfg.alpha);
    const MNPoly y = sobolev_poly(n, cfg.alpha);
    std::vector<MNPoly> dy;
    for (int i = 0; i <= n + 2; ++i) dy.push_back(y.derivative(i));

    auto part = [&](Poly (*term)(const VerificationConfig&, int, int)) {
        MNPoly s;
        for (int i = 0; i <= n; ++i) {
            const Poly t = term(cfg, i, n);
            if (!t.is_zero()) s += dy[static_cast<std::size_t>(i)].scale_by_poly(t);
        }
        return s;
    };

    MNPoly r = dy[2].scale_by_poly(Poly::x()) + dy[1].scale_by_poly(Poly(std::vector<Rational>{cfg.alpha + 1, -1})) +
               y * Rational(n);
    r += part(a_term).mul_by_monomial(1, 0);
    r += part(b_term).mul_by_monomial(0, 1);
    r += part(c_term).mul_by_monomial(1, 1);
    return r;
}

const std::vector<System>& all_systems() {
    static const std::vector<System> v{System::S1, System::S2, System::S3, System::S4,
                                       System::S5, System::S6, System::S7, System::S8};
    return v;
}

const std::vector<Reduced>& all_reduced() {
    static const std::vector<Reduced> v{Reduced::a1, Reduced::a2, Reduced::b1, Reduced::b2,
                                        Reduced::c1, Reduced::c2, Reduced::c3};
    return v;
}

std::string system_name(System s) {
    for (const auto& [k, name] : kSystems) {
        if (k == s) return std::string(name);
    }
    throw std::logic_error("unknown system");
}

std::string reduced_name(Reduced r) {
    for (const auto& [k, name] : kReduced) {
        if (k == r) return std::string(name);
    }
    throw std::logic_error("unknown reduced system");
}

System parse_system(std::string_view name) {
    for (const auto& [k, n] : kSystems) {
        if (n == name) return k;
    }
    throw std::invalid_argument("unknown system '" + std::string(name) + "'");
}

Reduced parse_reduced(std::string_view name) {
    for (const auto& [k, n] : kReduced) {
        if (n == name) return k;
    }
    throw std::invalid_argument("unknown reduced system '" + std::string(name) + "'");
}

std::pair<int, int> system_cell(System s) {
    switch (s) {
        case System::S1: return {1, 0};
        case System::S2: return {2, 0};
        case System::S3: return {1, 1};
        case System::S4: return {2, 1};
        case System::S5: return {0, 1};
        case System::S6: return {0, 2};
        case System::S7: return {1, 2};
        case System::S8: return {2, 2};
    }
    throw std::logic_error("unknown system");
}

Poly system_residual(const VerificationConfig& cfg, System which, int n) {
    require_alpha(cfg.alpha);
    const auto in = gather(cfg, n, [&](int i) { return c_term(cfg, i, n); });
    return evaluate_system(which, Scalars(n, cfg.alpha), in);
}

Poly reduced_system_residual(const VerificationConfig& cfg, Reduced which, int n) {
    require_alpha(cfg.alpha);
    if (which == Reduced::b2 && n < 1) throw std::domain_error("(b2) is stated for n >= 1");
    const Scalars s(n, cfg.alpha);
    const auto in = gather(cfg, n, [&](int i) { return c_term(cfg, i, n); });
    const Rational inv = Rational(1) / s.a1;
    const Poly b_bracket = in.d2 * Rational(n - 1) + in.d3 * 2;
    switch (which) {
        case Reduced::a1:
            return in.a[0] - in.d2 * s.bn(0);
        case Reduced::a2:
            return in.a[1] + in.d2 * s.bn(1);
        case Reduced::b1:
            return in.b[0] - b_bracket * (s.bn(1) * inv);
        case Reduced::b2:
            return in.b[1] * Rational(n - 1) + in.b[2] + b_bracket * (s.q * s.bn(2));
        case Reduced::c1: {
            const Rational lead = (*s.alpha * n - s.a1) * inv * inv;
            const Poly rhs = -(in.d2 * (lead * s.bn(2) * s.bn(0))) - in.d3 * (inv * 2 * s.bn(2) * s.bn(0)) -
                             in.a[2] * (inv * s.bn(1)) - in.b[1] * s.bn(0);
            return in.c[0] - rhs;
        }
        case Reduced::c2: {
            const Poly rhs = in.d2 * (s.bn(2) * s.bn(2)) + in.d3 * (inv * 2 * s.bn(2) * s.bn(1)) +
                             in.a[2] * (inv * s.bn(2)) + in.b[1] * s.bn(1);
            return in.c[1] - rhs;
        }
        case Reduced::c3: {
            const Poly rhs = -(in.d2 * (s.q * s.bn(2) * s.bn(2))) - in.d3 * (inv * 2 * s.bn(2) * s.bn(2)) -
                             in.a[2] * (inv * s.bn(3)) - in.b[1] * s.bn(2);
            return in.c[2] - rhs;
        }
    }
    throw std::logic_error("unknown reduced system");
}

Poly equivalence_residual(const VerificationConfig& cfg, int n, const std::function<Poly(int)>& c) {
    require_alpha(cfg.alpha);
    const Scalars s(n, cfg.alpha);
    const auto in = gather(cfg, n, c);
    auto S = [&](System which) { return evaluate_system(which, s, in); };
    const Rational w = s.bn1(1);
    return (S(System::S3) * w - S(System::S4) * Rational(n)) * (Rational(n - 1) * w) +
           (S(System::S7) * w - S(System::S8) * Rational(n)) * (s.a1 * s.a3);
}

Poly equivalence_residual(const VerificationConfig& cfg, int n) {
    return equivalence_residual(cfg, n, [&](int i) { return c_term(cfg, i, n); });
}

OrthogonalityReport orthogonality_check(const Rational& alpha, const Rational& M, const Rational& N, int n_max) {
    require_alpha(alpha);
    if (M.sign() < 0 || N.sign() < 0) throw std::domain_error("orthogonality_check: masses must be nonnegative");
    std::vector<Poly> polys;
    for (int n = 0; n <= n_max; ++n) polys.push_back(sobolev_poly(n, alpha).evaluate(M, N));
    OrthogonalityReport out;
    out.gram.assign(polys.size(), std::vector<Rational>(polys.size()));
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = i; j < polys.size(); ++j) {
            const Rational ip = sobolev_inner_product(polys[i], polys[j], alpha, M, N);
            out.gram[i][j] = ip;
            out.gram[j][i] = ip;
        }
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
        for (std::size_t j = 0; j < polys.size(); ++j) {
            const bool bad = i == j ? out.gram[i][j].sign() <= 0 : !out.gram[i][j].is_zero();
            if (bad) out.violations.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

Poly shifted_a_sum(int n, int l, const Rational& alpha) {
    require_alpha(alpha);
    Poly s;
    for (int i = 1; i + l <= n; ++i) s += family_entry(Family::a, i, alpha) * laguerre_derivative(n, alpha, i + l);
    return s;
}

Poly shifted_a_closed(int n, int l, const Rational& alpha) {
    require_alpha(alpha);
    std::vector<Rational> c(static_cast<std::size_t>(std::max(n - l, 0)) + 1);
    for (int k = 0; k + l + 1 <= n; ++k) {
        const Rational w = pochhammer(Rational(-n), k + l + 1) * pochhammer(alpha + 3, k) /
                           (pochhammer(Rational(2), k) * pochhammer(alpha + 1, k + l + 1) * factorial(k));
        const HypergeometricTerm f{{Rational(k + l + 1 - n), -alpha - 2, alpha + k + 3},
                                   {Rational(k + 2), alpha + k + l + 2},
                                   {}};
        c[static_cast<std::size_t>(k) + 1] = w * f.evaluate();
    }
    return Poly(std::move(c)) * -binomial_general(alpha + n, n);
}

bool shifted_a_identity_check(int n, int l, const Rational& alpha) {
    return shifted_a_sum(n, l, alpha) == shifted_a_closed(n, l, alpha);
}

VerificationReport verify(const VerificationConfig& cfg) {
    require_alpha(cfg.alpha);
    if (cfg.n_max < 0) throw std::domain_error("verify: n_max must be nonnegative");

    struct PerN {
        bool residual_zero = true;
        std::map<std::string, bool> systems;
        std::vector<Failure> failures;
    };

    auto check_n = [&cfg](int n) {
        PerN out;
        const MNPoly r = ode_residual(cfg, n);
        if (auto cell = r.first_nonzero()) {
            out.residual_zero = false;
            out.failures.push_back({"residual", n, describe(*cell)});
        }
        if (!cfg.check_systems) return out;
        const auto in = gather(cfg, n, [&](int i) { return c_term(cfg, i, n); });
        const Scalars s(n, cfg.alpha);
        for (System which : all_systems()) {
            const std::string name = system_name(which);
            const Poly value = evaluate_system(which, s, in);
            const auto [p, q] = system_cell(which);
            bool good = value.is_zero();
            if (!good) out.failures.push_back({name, n, describe(value)});
            if (value != r.cell(p, q)) {
                good = false;
                out.failures.push_back({name + "-cell", n, "differs from the residual cell"});
            }
            out.systems[name] = good;
        }
        return out;
    };

    std::vector<std::future<PerN>> jobs;
    for (int n = 0; n <= cfg.n_max; ++n) jobs.push_back(std::async(std::launch::async, check_n, n));

    VerificationReport report{cfg.alpha, cfg.b01, cfg.n_max, true, {}, {}};
    if (cfg.check_systems) {
        for (System which : all_systems()) report.systems[system_name(which)] = true;
    }
    for (auto& job : jobs) {
        PerN part = job.get();
        report.residual_zero = report.residual_zero && part.residual_zero;
        for (const auto& [name, good] : part.systems) report.systems[name] = report.systems[name] && good;
        for (auto& f : part.failures) report.failures.push_back(std::move(f));
    }
    std::sort(report.failures.begin(), report.failures.end(), [](const Failure& x, const Failure& y) {
        return std::tie(x.n, x.check, x.detail) < std::tie(y.n, y.check, y.detail);
    });
    return report;
}

}  // namespace soblag
