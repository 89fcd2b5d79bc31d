// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "soblag/coeffs.hpp"
#include "soblag/combinatorics.hpp"
#include "soblag/hypergeom.hpp"
#include "soblag/laguerre.hpp"
#include "soblag/numeric_sum.hpp"
#include "soblag/sobolev.hpp"

using namespace soblag;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

// Collects the first few failure descriptions.
class Tally {
public:
    void require(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failed_;
        if (failed_ <= 3) notes_ << (failed_ > 1 ? "; " : "") << what;
    }
    Outcome outcome(const std::string& extra = "") const {
        std::ostringstream os;
        os << checks_ << " checks";
        if (!extra.empty()) os << ", " << extra;
        if (failed_ > 0) os << ", " << failed_ << " failed: " << notes_.str();
        return {failed_ == 0, os.str()};
    }

private:
    long checks_ = 0;
    long failed_ = 0;
    std::ostringstream notes_;
};

std::string str(const Rational& r) { return r.to_string(); }

Outcome annihilation(const std::vector<Rational>& alphas, int n_max, const std::vector<Rational>& b01s) {
    Tally t;
    for (const Rational& a : alphas) {
        for (const Rational& b01 : b01s) {
            const auto report = verify({a, n_max, b01, false});
            t.require(report.ok(), "alpha=" + str(a) + " b01=" + str(b01) +
                                       (report.failures.empty() ? "" : " n=" + std::to_string(report.failures[0].n)));
        }
    }
    return t.outcome("each a full sweep n=0.." + std::to_string(n_max));
}

Outcome criterion1() { return annihilation({0, 1, 2}, 12, {0, Rational(3, 7)}); }
Outcome criterion2() { return annihilation({Rational(1, 2), Rational(-1, 2), Rational(7, 3)}, 10, {0, Rational(3, 7)}); }

Outcome criterion3() {
    Tally t;
    for (long al = 0; al <= 2; ++al) {
        const Rational alpha(al);
        const long expected[] = {2 * al + 4, 2 * al + 8, 4 * al + 10};
        const Poly leading[] = {
            Poly::monomial(sign_power(al + 1) / factorial(al + 2), static_cast<int>(al + 2)),
            Poly::monomial(sign_power(al + 1) * (alpha + 2) / ((alpha + 1) * factorial(al + 4)), static_cast<int>(al + 4)),
            Poly::monomial(Rational(1) / ((alpha + 1) * (alpha * 2 + 5) * factorial(al + 2) * factorial(al + 3)),
                           static_cast<int>(2 * al + 5)),
        };
        const Family fams[] = {Family::a, Family::beta, Family::gamma};
        for (int k = 0; k < 3; ++k) {
            const int order = family_order(fams[k], alpha, static_cast<int>(expected[k]) + 6);
            const std::string tag = family_name(fams[k]) + " alpha=" + str(alpha);
            t.require(order == expected[k], tag + " order " + std::to_string(order));
            t.require(family_entry(fams[k], order, alpha) == leading[k], tag + " leading term");
        }
    }
    return t.outcome();
}

Outcome criterion4() {
    Tally t;
    for (long al = 0; al <= 2; ++al) {
        for (Family f : {Family::a, Family::beta, Family::gamma}) {
            t.require(family_sum(f, Rational(al)).is_zero(), family_name(f) + " alpha=" + std::to_string(al));
        }
    }
    const Float tol(pow(Rational(10), -20), 256);
    std::ostringstream diffs;
    for (Family f : {Family::a, Family::beta}) {
        for (int x : {1, 2}) {
            const auto r = family_sum_numeric(f, Rational(1, 2), x, 400, 256);
            const std::string tag = family_name(f) + " x=" + std::to_string(x);
            t.require(r.difference < tol, tag + " |limit - closed form| = " + r.difference.to_string(3));
            t.require(r.truncation_bound < tol, tag + " truncation bound " + r.truncation_bound.to_string(3));
            diffs << " " << tag << ": " << r.difference.to_string(2) << " (raw partial sum " << r.raw_difference.to_string(2)
                  << ")";
        }
    }
    return t.outcome("extrapolated vs closed form at alpha=1/2, 256 bits, i_max=400:" + diffs.str());
}

Outcome criterion5() {
    Tally t;
    for (const Rational a : {Rational(0), Rational(1, 2)}) {
        const auto report = verify({a, 10, 0, true});
        for (const auto& [name, good] : report.systems) t.require(good, name + " alpha=" + str(a));
        t.require(report.ok(), "alpha=" + str(a) + " report has failures");
    }
    return t.outcome("n=0..10, each system also compared with its residual cell");
}

Outcome criterion6() {
    Tally t;
    testing::Gen g(20240611);

    int tested = 0;
    while (tested < 200) {
        const Rational a = g.rational(15, 6), b = g.rational(15, 6), c = g.rational(15, 6);
        const int n = g.integer(0, 20);
        if (pochhammer(a + 1, n).is_zero() || pochhammer(c, n).is_zero()) continue;
        t.require(gauss_partial_sum(a, b, c, n) == gauss_partial_sum_closed(a, b, c, n), "partial sum closed form");
        ++tested;
    }

    for (int s = 0; s < 20; ++s) {
        const Rational a = g.rational(20, 9);
        Rational sum;
        for (int n = 0; n <= 25; ++n) {
            sum += binomial_general(a + n, n);
            t.require(sum == binomial_general(a + n + 1, n), "binomial partial sum");
        }
    }

    for (const Rational a : {Rational(0), Rational(1), Rational(1, 2), Rational(-1, 2), Rational(7, 3)}) {
        for (int i = 0; i <= 10; ++i) {
            for (int j = 0; j <= i; ++j) t.require(check_inversion_identity(i, j, a), "inversion identity");
        }
    }

    for (int s = 0; s < 12; ++s) {
        Rational alpha = g.rational(9, 4);
        if (alpha <= Rational(-1)) alpha = -alpha;
        const int k = g.integer(0, 2);
        const int n_max = k + g.integer(1, 6);
        std::map<int, Poly> coeffs, rhs;
        for (int i = 1; i <= n_max - k; ++i) coeffs[i] = g.poly(i);
        for (int n = k + 1; n <= n_max; ++n) rhs[n] = inversion_apply(k, alpha, coeffs, n);
        t.require(inversion_solve(k, alpha, rhs) == coeffs, "inversion round trip");
    }

    for (int i = 0; i <= 12; ++i) {
        for (int s = 0; s < 4; ++s) {
            const Rational a = g.rational(), b = g.rational();
            const Rational c = s % 2 == 0 ? Rational(g.integer(-4, 4)) : g.rational();
            t.require(F_def(i, a, b, c) == F_closed(i, a, b, c), "F");
            if (!((a + 1) * (a - c + 2)).is_zero()) t.require(G_def(i, a + 2, a, c) == G_closed(i, a, c), "G");
        }
    }
    for (int i = 0; i <= 12; ++i) {
        for (int s = 0; s < 4; ++s) {
            const Rational a = g.rational(), b = g.rational(), c = g.rational();
            const Rational d = s % 2 == 0 ? Rational(g.integer(-3, 3)) : g.rational();
            const Rational e = s < 2 ? Rational(g.integer(-3, 3)) : g.rational();
            t.require(H_def(i, a, b, c, d, e) == H_closed(i, a, b, c, d, e), "H");
        }
    }

    tested = 0;
    while (tested < 60) {
        const Rational a = g.rational(), b = g.rational();
        const Rational c = tested % 3 == 0 ? Rational(g.integer(-5, 5)) : g.rational();
        if ((b - a).is_integer() && (b - a).sign() > 0) continue;
        for (int n = 0; n <= 10; ++n) {
            for (int l = 0; l <= 5; ++l) {
                t.require(phi_3f2_closed(n, a, b, c, l) == phi_3f2_regularized(n, a, b, c, l), "regularized 3F2");
            }
        }
        ++tested;
    }

    for (long alpha = 0; alpha <= 3; ++alpha) {
        for (int p = 0; p <= 6; ++p) {
            for (int q = 0; q <= 6; ++q) {
                for (int r = 0; r <= 6; ++r) {
                    for (int s = -6; s <= 6; ++s) {
                        t.require(K_def(p, q, r, s, alpha) == K_closed(p, q, r, s, alpha), "K def vs closed");
                    }
                }
            }
        }
        for (int r = 1; r <= 4; ++r) {
            for (int s = -r; s <= 4; ++s) {
                const Poly expected(sign_power(alpha + r + s) * pochhammer(Rational(alpha + 1), r + s) /
                                    pochhammer(Rational(alpha + 1), r - 1));
                t.require(K_def(r + s, r + s, r, s, alpha) == expected, "K special value");
            }
        }
    }
    return t.outcome();
}

Outcome criterion7() {
    Tally t;
    const Rational cases[][3] = {{0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {Rational(1, 2), Rational(2, 3), 5}, {2, 0, 3}};
    for (const auto& c : cases) {
        const auto r = orthogonality_check(c[0], c[1], c[2], 8);
        t.require(r.ok(), "(alpha, M, N) = (" + str(c[0]) + ", " + str(c[1]) + ", " + str(c[2]) + ")");
    }
    return t.outcome();
}

Outcome criterion8() {
    Tally t;
    const Rational alphas[] = {0, 1, 2, Rational(1, 2), Rational(-1, 2), Rational(7, 3)};
    for (const Rational& a : alphas) {
        for (int n = 1; n <= 12; ++n) {
            t.require(gamma0_by_sum(n, a) == gamma0_by_hypergeometric(n, a), "gamma_0 routes");
        }
        for (int i = 2; i <= 12; ++i) {
            t.require(Poly::x() * beta_component(2, i, a) == a_coeff(i - 1, a) * ((a + 2) * 2 / (a + 1)), "x beta^(2)");
        }
        t.require(difference_relations_hold(a, 0, 12) && difference_relations_hold(a, Rational(3, 7), 12),
                  "difference relations alpha=" + str(a));
        for (int n = 0; n <= 6; ++n) {
            for (int l = 0; l <= 3; ++l) t.require(shifted_a_identity_check(n, l, a), "shifted identity");
        }
    }
    for (const Rational a : {Rational(0), Rational(1, 2)}) {
        for (int i = 1; i <= 12; ++i) {
            for (int p = 1; p <= 5; ++p) {
                t.require(gamma_component_closed(p, i, a) == gamma_component_laguerre(p, i, a),
                          "gamma^(" + std::to_string(p) + ")_" + std::to_string(i) + " alpha=" + str(a));
            }
        }
    }
    return t.outcome();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 annihilation, integer alpha", criterion1},
        {"2 annihilation, non-integer alpha", criterion2},
        {"3 orders and leading terms", criterion3},
        {"4 coefficient sums", criterion4},
        {"5 eight component systems", criterion5},
        {"6 hypergeometric and combinatorial identities", criterion6},
        {"7 orthogonality", criterion7},
        {"8 internal cross-checks", criterion8},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << " (" << o.note << "; " << secs << " s)"
                  << std::endl;
    }
    return all ? 0 : 1;
}
