#include "soblag/coeffs.hpp"

#include <array>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "soblag/combinatorics.hpp"
#include "soblag/hypergeom.hpp"
#include "soblag/laguerre.hpp"

namespace soblag {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 14> kNames{{
    {Family::a, "a"},
    {Family::bstar, "bstar"},
    {Family::beta, "beta"},
    {Family::cstar, "cstar"},
    {Family::gamma, "gamma"},
    {Family::beta1, "beta1"},
    {Family::beta2, "beta2"},
    {Family::beta3, "beta3"},
    {Family::beta4, "beta4"},
    {Family::gamma1, "gamma1"},
    {Family::gamma2, "gamma2"},
    {Family::gamma3, "gamma3"},
    {Family::gamma4, "gamma4"},
    {Family::gamma5, "gamma5"},
}};

void require_index(int i, const char* who) {
    if (i < 1) throw std::domain_error(std::string(who) + ": index must be >= 1, got " + std::to_string(i));
}

void require_alpha(const Rational& alpha) {
    if (alpha <= Rational(-1)) throw std::domain_error("alpha must exceed -1, got " + alpha.to_string());
}

int beta_part(Family f) { return static_cast<int>(f) - static_cast<int>(Family::beta1) + 1; }
int gamma_part(Family f) { return static_cast<int>(f) - static_cast<int>(Family::gamma1) + 1; }

Family gamma_family(int p) { return static_cast<Family>(static_cast<int>(Family::gamma1) + p - 1); }

long integer_alpha(const Rational& alpha, const char* who) {
    if (!alpha.is_integer() || alpha.sign() < 0) {
        throw std::domain_error(std::string(who) + ": alpha must be a nonnegative integer, got " + alpha.to_string());
    }
    return alpha.to_long();
}

// Memo of family entries keyed by (family, i, alpha). Values are computed outside the
// lock; a concurrent duplicate fill produces the same Poly, so the first insert wins.
class EntryCache {
public:
    std::optional<Poly> find(Family f, int i, const Rational& alpha) {
        std::lock_guard lock(mutex_);
        auto it = table_.find(Key{f, i, alpha.to_string()});
        if (it == table_.end()) return std::nullopt;
        return it->second;
    }

    const Poly& insert(Family f, int i, const Rational& alpha, Poly value) {
        std::lock_guard lock(mutex_);
        return table_.try_emplace(Key{f, i, alpha.to_string()}, std::move(value)).first->second;
    }

    void clear() {
        std::lock_guard lock(mutex_);
        table_.clear();
    }

private:
    using Key = std::tuple<Family, int, std::string>;
    std::mutex mutex_;
    std::map<Key, Poly> table_;
};

EntryCache& cache() {
    static EntryCache instance;
    return instance;
}

Poly compute_entry(Family f, int i, const Rational& alpha) {
    switch (f) {
        case Family::a:
            return a_coeff(i, alpha);
        case Family::bstar:
            return bstar(i, alpha);
        case Family::cstar:
            return cstar(i, alpha);
        case Family::beta: {
            Poly sum;
            for (int p = 1; p <= 4; ++p) sum += beta_component(p, i, alpha);
            return sum;
        }
        case Family::beta1:
        case Family::beta2:
        case Family::beta3:
        case Family::beta4:
            return beta_component(beta_part(f), i, alpha);
        case Family::gamma: {
            Poly sum;
            for (int p = 1; p <= 5; ++p) sum += family_entry(gamma_family(p), i, alpha);
            return sum;
        }
        case Family::gamma1:
        case Family::gamma2:
        case Family::gamma3:
        case Family::gamma4:
        case Family::gamma5: {
            const int p = gamma_part(f);
            Poly closed = gamma_component_closed(p, i, alpha);
            if (closed != gamma_component_laguerre(p, i, alpha)) {
                throw std::logic_error("gamma component " + std::to_string(p) + " at i=" + std::to_string(i) +
                                       ", alpha=" + alpha.to_string() + ": closed form and Laguerre sum disagree");
            }
            return closed;
        }
    }
    throw std::logic_error("unknown family");
}

// L_{i-j}^{(shift - i)}(-x), the left factor of every inversion-type sum.
Poly left_factor(int i, int j, const Rational& shift) { return laguerre_at_negx(i - j, shift - i); }

}  // namespace

const std::vector<Family>& all_families() {
    static const std::vector<Family> out = [] {
        std::vector<Family> v;
        for (const auto& [f, name] : kNames) v.push_back(f);
        return v;
    }();
    return out;
}

Family parse_family(std::string_view name) {
    for (const auto& [f, n] : kNames) {
        if (n == name) return f;
    }
    throw std::invalid_argument("unknown coefficient family '" + std::string(name) + "'");
}

std::string family_name(Family f) {
    for (const auto& [g, n] : kNames) {
        if (g == f) return std::string(n);
    }
    throw std::logic_error("unknown family");
}

Rational a0(int n, const Rational& alpha) { return binomial_general(alpha + n + 1, n - 1); }

Poly a_coeff(int i, const Rational& alpha) {
    require_index(i, "a_coeff");
    std::vector<Rational> c(static_cast<std::size_t>(i) + 1);
    for (int j = 1; j <= i; ++j) {
        c[static_cast<std::size_t>(j)] = sign_power(i + j + 1) * binomial_general(alpha + 1, j - 1) *
                                         binomial_general(alpha + 2, i - j) * pochhammer(alpha + 3, i - j);
    }
    return Poly(std::move(c)) * (Rational(1) / factorial(i));
}

Poly bstar(int i, const Rational& alpha) {
    require_index(i, "bstar");
    std::vector<Rational> c(static_cast<std::size_t>(i) + 1);
    for (int j = 0; j <= i; ++j) {
        c[static_cast<std::size_t>(j)] = sign_power(j) * binomial_general(i, j) * pochhammer(alpha + 1, i - j);
    }
    return Poly(std::move(c)) * (Rational(1) / factorial(i));
}

Poly cstar(int i, const Rational& /*alpha*/) {
    require_index(i, "cstar");
    return Poly::monomial(sign_power(i) / factorial(i), i);
}

Rational beta0(int n, const Rational& alpha) {
    return ((alpha + 2) * n - alpha) / ((alpha + 1) * (alpha + 4)) * binomial_general(alpha + n + 1, n - 2);
}

Poly beta_component(int p, int i, const Rational& alpha) {
    require_index(i, "beta_component");
    if (p < 1 || p > 4) throw std::invalid_argument("beta_component: part must be 1..4");
    if (i == 1) return {};
    std::vector<Rational> c(static_cast<std::size_t>(i) + 1);
    Rational pre;
    switch (p) {
        case 1:
            pre = Rational(1) / ((alpha + 1) * factorial(i - 2));
            for (int j = 1; j <= i; ++j) {
                c[static_cast<std::size_t>(j - 1)] = sign_power(i + j + 1) * binomial_general(alpha + 2, j - 1) *
                                                     binomial_general(alpha + 3, i - j) * pochhammer(alpha + 2, i - j);
            }
            break;
        case 2:
            pre = (alpha + 2) * 2 / ((alpha + 1) * factorial(i - 1));
            for (int j = 2; j <= i; ++j) {
                c[static_cast<std::size_t>(j - 2)] = sign_power(i + j + 1) * binomial_general(alpha + 1, j - 2) *
                                                     binomial_general(alpha + 2, i - j) * pochhammer(alpha + 3, i - j);
            }
            break;
        case 3: {
            const Rational a1 = alpha + 1, a3 = alpha + 3;
            pre = Rational(1) / (a1 * a1 * (alpha + 2) * a3 * a3 * factorial(i - 2));
            for (int j = 0; j <= i; ++j) {
                c[static_cast<std::size_t>(j)] = sign_power(i + j + 1) * binomial_general(a3, j) *
                                                 binomial_general(a3, i - j) * pochhammer(a1, i - j) *
                                                 (a1 * a3 + Rational(j) * (i - j));
            }
            break;
        }
        default: {
            const Rational a1 = alpha + 1, a4 = alpha + 4;
            pre = Rational(i - 2) / (a1 * a1 * (alpha + 3) * a4 * a4 * factorial(i - 2));
            for (int j = 0; j <= i; ++j) {
                c[static_cast<std::size_t>(j)] = sign_power(i + j + 1) * binomial_general(a4, j) *
                                                 binomial_general(a4, i - j) * pochhammer(a1, i - j) *
                                                 (a1 * a4 + Rational(j) * (i - j));
            }
            break;
        }
    }
    return Poly(std::move(c)) * pre;
}

Poly beta_component_laguerre(int p, int i, const Rational& alpha) {
    require_index(i, "beta_component_laguerre");
    if (p < 1 || p > 4) throw std::invalid_argument("beta_component_laguerre: part must be 1..4");
    if (i == 1) return {};
    const Rational shift = -alpha - 1;
    Poly sum;
    for (int j = 2; j <= i; ++j) {
        const Poly left = left_factor(i, j, shift);
        switch (p) {
            case 1:
                sum += left * laguerre(j - 1, alpha + 2) * binomial_general(alpha + j, j - 2);
                break;
            case 2:
                sum += left * laguerre(j - 2, alpha + 3) * binomial_general(alpha + j, j - 1);
                break;
            case 3:
                sum += left * laguerre(j, alpha) * binomial_general(alpha + j + 1, j - 2);
                break;
            default:
                sum += left * laguerre(j, alpha) * binomial_general(alpha + j + 1, j - 3);
                break;
        }
    }
    switch (p) {
        case 1:
            return sum * (sign_power(i) * (alpha + 2) / (alpha + 1));
        case 2:
            return sum * (sign_power(i + 1) * 2 / (alpha + 1));
        case 3:
            return sum * (sign_power(i + 1) / (alpha + 1));
        default:
            return sum * (sign_power(i + 1) * (alpha + 2) / (alpha + 1));
    }
}

Poly beta_coeff(int i, const Rational& alpha) { return family_entry(Family::beta, i, alpha); }

Rational gamma0_by_sum(int n, const Rational& alpha) {
    Rational s;
    for (int k = 1; k <= n; ++k) s += binomial_general(alpha + k, k - 1) * binomial_general(alpha + k + 1, k - 2);
    return s / ((alpha + 1) * (alpha + 2));
}

Rational gamma0_by_hypergeometric(int n, const Rational& alpha) {
    const Rational pre = binomial_general(alpha + n + 1, n - 2);
    if (pre.is_zero()) return pre;
    const HypergeometricTerm f{{Rational(2 - n), -alpha - 2, alpha + 3}, {Rational(2), alpha + 4}, {}};
    return pre * f.evaluate() / (alpha + 1);
}

Rational gamma0(int n, const Rational& alpha) {
    if (n <= 0) return Rational(0);
    Rational s = gamma0_by_sum(n, alpha);
    if (s != gamma0_by_hypergeometric(n, alpha)) {
        throw std::logic_error("gamma_0(" + std::to_string(n) + ") routes disagree at alpha=" + alpha.to_string());
    }
    return s;
}

Poly gamma_component_closed(int p, int i, const Rational& alpha) {
    require_index(i, "gamma_component_closed");
    const Rational a1 = alpha + 1;
    std::vector<Rational> c(static_cast<std::size_t>(i) + 1);
    switch (p) {
        case 1:
        case 2: {
            // sum_k entry_k(x) * inner_k(x)
            Poly sum;
            for (int k = 1; k <= i; ++k) {
                const Poly ek = family_entry(p == 1 ? Family::a : Family::beta, k, alpha);
                if (ek.is_zero()) continue;
                std::vector<Rational> inner(static_cast<std::size_t>(i - k) + 1);
                for (int j = k; j <= i; ++j) {
                    inner[static_cast<std::size_t>(j - k)] =
                        p == 1 ? sign_power(j) * binomial_general(alpha + 3, j - k) *
                                     binomial_general(alpha + 3, i - j) * pochhammer(alpha + 4, i - j + k - 1)
                               : sign_power(j) * binomial_general(alpha + 1, j - k) *
                                     binomial_general(alpha + 1, i - j) * pochhammer(alpha + 3, i - j + k);
                }
                sum += ek * Poly(std::move(inner));
            }
            return p == 1 ? sum * (sign_power(i + 1) / (a1 * factorial(i - 1)))
                          : sum * (sign_power(i) / factorial(i + 1));
        }
        case 3:
        case 4: {
            const Rational lower_shift = p == 3 ? alpha + 3 : alpha + 4;
            for (int j = 0; j <= i; ++j) {
                Rational cj;
                for (int n = 0; n <= j; ++n) {
                    const Rational w =
                        pochhammer(Rational(-j), n) * pochhammer(alpha + 3, i - j + n) * pochhammer(lower_shift, n);
                    if (w.is_zero()) continue;
                    Rational inner;
                    for (int k = 0; k <= i - j; ++k) {
                        const Rational g = recip_gamma_int(n + k) * recip_gamma_int(n + k + 2);
                        if (g.is_zero()) continue;
                        inner += pochhammer(Rational(j - i), k) * pochhammer(alpha + n + 3, k) *
                                 pochhammer(alpha + n + 4, k) * g / factorial(k);
                    }
                    cj += w * inner / (factorial(j) * factorial(i - j) * factorial(n));
                }
                c[static_cast<std::size_t>(j)] = sign_power(j) * cj;
            }
            const Rational pre = p == 3 ? Rational(2) / (a1 * (alpha + 3)) : Rational(-2) / (a1 * (alpha + 4));
            return Poly(std::move(c)) * pre;
        }
        case 5: {
            for (int k = 0; k <= i - 1; ++k) {
                const Rational wk = sign_power(k) * pochhammer(-alpha - 2, k) * pochhammer(alpha + 3, k) *
                                    recip_gamma_int(i - k) /
                                    (pochhammer(Rational(2), k) * pochhammer(alpha + 4, k) * factorial(k));
                if (wk.is_zero()) continue;
                for (int j = 0; j <= i; ++j) {
                    c[static_cast<std::size_t>(j)] += wk * sign_power(j) * binomial_general(alpha + k + 3, j) *
                                                      binomial_general(alpha + k + 3, i - j) *
                                                      pochhammer(alpha + 3, i - j);
                }
            }
            return Poly(std::move(c)) * (sign_power(i + 1) / (a1 * (alpha + 3)));
        }
        default:
            throw std::invalid_argument("gamma component part must be 1..5");
    }
}

Poly gamma_component_laguerre(int p, int i, const Rational& alpha) {
    require_index(i, "gamma_component_laguerre");
    const Rational shift = -alpha - 3;
    const Rational a1 = alpha + 1, a2 = alpha + 2;
    Poly sum;
    switch (p) {
        case 1:
        case 2:
            for (int k = 1; k <= i; ++k) {
                const Poly ek = family_entry(p == 1 ? Family::a : Family::beta, k, alpha);
                if (ek.is_zero()) continue;
                Poly inner;
                for (int j = k; j <= i; ++j) {
                    const Rational w =
                        p == 1 ? binomial_general(alpha + j + 2, j - 1) : binomial_general(alpha + j + 2, j + 1);
                    inner += left_factor(i, j, shift) * laguerre(j - k, alpha + k + 2) * w;
                }
                sum += ek * inner * sign_power(k);
            }
            return p == 1 ? sum * (sign_power(i + 1) / a1) : sum * (sign_power(i) / a2);
        case 3:
            for (int j = 1; j <= i; ++j) {
                sum += left_factor(i, j, shift) * laguerre(j, alpha + 3) *
                       (binomial_general(alpha + j + 2, j - 1) * binomial_general(alpha + j + 2, j + 1));
            }
            return sum * (sign_power(i) * 2 / (a1 * a2));
        case 4:
            for (int j = 1; j <= i; ++j) {
                sum += left_factor(i, j, shift) * laguerre(j, alpha + 2) *
                       (binomial_general(alpha + j + 2, j + 1) * binomial_general(alpha + j + 3, j - 1));
            }
            return sum * (sign_power(i + 1) * 2 / (a1 * a2));
        case 5:
            for (int j = 1; j <= i; ++j) {
                sum += left_factor(i, j, shift) * laguerre(j, alpha + 2) * gamma0(j + 1, alpha);
            }
            return sum * sign_power(i + 1);
        default:
            throw std::invalid_argument("gamma component part must be 1..5");
    }
}

Poly gamma_component(int p, int i, const Rational& alpha) {
    if (p < 1 || p > 5) throw std::invalid_argument("gamma component part must be 1..5");
    return family_entry(gamma_family(p), i, alpha);
}

Poly gamma_coeff(int i, const Rational& alpha) { return family_entry(Family::gamma, i, alpha); }

Poly family_entry(Family f, int i, const Rational& alpha) {
    require_index(i, "family_entry");
    require_alpha(alpha);
    if (auto hit = cache().find(f, i, alpha)) return *hit;
    return cache().insert(f, i, alpha, compute_entry(f, i, alpha));
}

std::optional<Rational> const_term(Family f, int n, const Rational& alpha) {
    switch (f) {
        case Family::a:
            return a0(n, alpha);
        case Family::beta:
            return beta0(n, alpha);
        case Family::gamma:
            return gamma0(n, alpha);
        case Family::bstar:
        case Family::cstar:
            return Rational(n >= 1 ? 1 : 0);
        default:
            return std::nullopt;
    }
}

CoefficientFamily build_family(Family f, const Rational& alpha, int i_max) {
    require_alpha(alpha);
    CoefficientFamily out{f, alpha, {}, [f, alpha](int n) { return const_term(f, n, alpha); }};
    for (int i = 1; i <= i_max; ++i) out.table.emplace(i, family_entry(f, i, alpha));
    return out;
}

int family_order(Family f, const Rational& alpha, int scan_limit) {
    for (int i = scan_limit; i >= 1; --i) {
        if (!family_entry(f, i, alpha).is_zero()) return i;
    }
    return 0;
}

int theoretical_order(Family f, const Rational& alpha) {
    const long al = integer_alpha(alpha, "theoretical_order");
    switch (f) {
        case Family::a:
            return static_cast<int>(2 * al + 4);
        case Family::beta:
            return static_cast<int>(2 * al + 8);
        case Family::gamma:
            return static_cast<int>(4 * al + 10);
        default:
            throw std::domain_error("theoretical_order: only a, beta and gamma have a finite order");
    }
}

Poly expected_top_entry(Family f, const Rational& alpha) {
    const long al = integer_alpha(alpha, "expected_top_entry");
    switch (f) {
        case Family::a:
            return Poly::monomial(sign_power(al + 1) / factorial(al + 2), static_cast<int>(al + 2));
        case Family::beta:
            return Poly::monomial(sign_power(al + 1) * (alpha + 2) / ((alpha + 1) * factorial(al + 4)),
                                  static_cast<int>(al + 4));
        case Family::gamma:
            return Poly::monomial(
                Rational(1) / ((alpha + 1) * (alpha * 2 + 5) * factorial(al + 2) * factorial(al + 3)),
                static_cast<int>(2 * al + 5));
        default:
            throw std::domain_error("expected_top_entry: only a, beta and gamma have a finite order");
    }
}

Poly family_sum(Family f, const Rational& alpha) {
    const int order = theoretical_order(f, alpha);
    Poly sum;
    for (int i = 1; i <= order; ++i) sum += family_entry(f, i, alpha);
    return sum;
}

bool trace_identity_holds(Family f, const Rational& alpha, int n_max) {
    for (int n = 1; n <= n_max; ++n) {
        const auto c = const_term(f, n, alpha);
        if (!c) throw std::invalid_argument("trace identity needs a family with a constant term");
        Rational s;
        for (int i = 1; i <= n; ++i) {
            s += pochhammer(Rational(n - i + 1), i) * family_entry(f, i, alpha).coeff(i);
        }
        if (*c != -s) return false;
    }
    return true;
}

bool difference_relations_hold(const Rational& alpha, const Rational& b01, int n_max) {
    auto b0 = [&](int n) { return n == 0 ? Rational(0) : b01 + beta0(n, alpha); };
    auto c0 = [&](int n) { return n == 0 ? Rational(0) : b01 + gamma0(n, alpha); };
    for (int n = 0; n <= n_max; ++n) {
        if (a0(n + 1, alpha) - a0(n, alpha) != binomial_general(alpha + n + 1, n)) return false;
        if (n < 1) continue;
        const Rational db = ((alpha + 2) * n + 1) / ((alpha + 1) * (alpha + 3)) * binomial_general(alpha + n + 1, n - 1);
        if (b0(n + 1) - b0(n) != db) return false;
        const Rational dc = binomial_general(alpha + n + 1, n) * binomial_general(alpha + n + 2, n - 1) /
                            ((alpha + 1) * (alpha + 2));
        if (c0(n + 1) - c0(n) != dc) return false;
    }
    return true;
}

void clear_coefficient_cache() { cache().clear(); }

}  // namespace soblag
