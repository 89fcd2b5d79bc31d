#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "soblag/combinatorics.hpp"
#include "soblag/laguerre.hpp"
#include "soblag/sobolev.hpp"

using namespace soblag;

namespace {

const Rational kAlphas[] = {Rational(0), Rational(1), Rational(2), Rational(1, 2), Rational(-1, 2), Rational(7, 3)};

MNPoly constant(int c, int m, int n) { return MNPoly::term(Poly(Rational(c)), m, n); }

}  // namespace

TEST_CASE("sobolev coefficients") {
    const auto c0 = sobolev_coeffs(0, Rational(3, 5));
    CHECK(c0.A0 == MNPoly(Poly(Rational(1))));
    CHECK(c0.A1 == constant(1, 1, 0));
    CHECK(c0.A2.is_zero());

    const auto c1 = sobolev_coeffs(1, 0);
    CHECK(c1.A0 == constant(1, 0, 0) + constant(1, 1, 0));
    CHECK(c1.A1 == constant(1, 1, 0));
    // the N/(a+1) C(n+a,n-1) and MN terms survive at n = 1
    CHECK(c1.A2 == constant(1, 0, 1) + constant(1, 1, 1));

    for (const Rational& a : kAlphas) {
        for (int n = 0; n <= 6; ++n) {
            const auto c = sobolev_coeffs(n, a);
            CHECK(c.A0.evaluate(0, 0) == Poly(Rational(1)));
            CHECK(c.A1.evaluate(0, 0).is_zero());
            CHECK(c.A2.evaluate(0, 0).is_zero());
            CHECK(c.A2.evaluate(Rational(5, 2), 0).is_zero());
        }
    }
    CHECK_THROWS_AS((void)sobolev_coeffs(2, -1), std::domain_error);
}

TEST_CASE("sobolev polynomials") {
    CHECK(sobolev_poly(0, Rational(1, 2)) == MNPoly(Poly(Rational(1))));
    CHECK(sobolev_poly(1, 0).evaluate(1, 0) == Poly(std::vector<Rational>{1, -2}));
    for (const Rational& a : kAlphas) {
        for (int n = 0; n <= 10; ++n) CHECK(sobolev_poly(n, a).evaluate(0, 0) == laguerre(n, a));
    }
}

TEST_CASE("residual examples") {
    CHECK(ode_residual({Rational(5, 3), 0, Rational(2), false}, 0).is_zero());
    CHECK(ode_residual({0, 5, 0, false}, 5).is_zero());
    CHECK(ode_residual({Rational(1, 2), 4, Rational(3, 7), false}, 4).is_zero());
}

TEST_CASE("property: residual vanishes on the grid") {
    for (const Rational& a : kAlphas) {
        for (const Rational b01 : {Rational(0), Rational(3, 7)}) {
            const VerificationConfig cfg{a, 9, b01, false};
            for (int n = 0; n <= cfg.n_max; ++n) {
                const MNPoly r = ode_residual(cfg, n);
                CHECK_MESSAGE(r.is_zero(), "alpha=", a, " b01=", b01, " n=", n, " ", r.to_string());
            }
        }
    }
}

TEST_CASE("property: b01 changes coefficients but not the residual") {
    testing::Gen g(73);
    for (int t = 0; t < 6; ++t) {
        const Rational b01 = g.rational();
        if (b01.is_zero()) continue;
        const VerificationConfig cfg{Rational(1, 2), 6, b01, false};
        const VerificationConfig base{Rational(1, 2), 6, 0, false};
        CHECK(b_term(cfg, 2, 4) != b_term(base, 2, 4));
        CHECK(c_term(cfg, 3, 4) != c_term(base, 3, 4));
        for (int n = 0; n <= cfg.n_max; ++n) CHECK(ode_residual(cfg, n).is_zero());
    }
}

TEST_CASE("system examples") {
    const VerificationConfig cfg{0, 6, 0, false};
    CHECK(system_residual(cfg, System::S1, 0).is_zero());
    CHECK(system_residual(cfg, System::S5, 0).is_zero());
    CHECK(system_residual(cfg, System::S8, 6).is_zero());
    CHECK(parse_system("S4") == System::S4);
    CHECK_THROWS_AS((void)parse_system("S9"), std::invalid_argument);
    CHECK(system_cell(System::S7) == std::pair{1, 2});
}

TEST_CASE("property: systems vanish and equal residual cells") {
    for (const Rational a : {Rational(0), Rational(1, 2), Rational(7, 3)}) {
        for (const Rational b01 : {Rational(0), Rational(3, 7)}) {
            const VerificationConfig cfg{a, 8, b01, true};
            for (int n = 0; n <= cfg.n_max; ++n) {
                const MNPoly r = ode_residual(cfg, n);
                for (System s : all_systems()) {
                    const Poly v = system_residual(cfg, s, n);
                    const auto [p, q] = system_cell(s);
                    CHECK(v.is_zero());
                    CHECK(v == r.cell(p, q));
                }
            }
        }
    }
}

TEST_CASE("reduced systems") {
    const VerificationConfig cfg0{0, 4, 0, false};
    CHECK(reduced_system_residual(cfg0, Reduced::a2, 0).is_zero());
    CHECK(reduced_system_residual(cfg0, Reduced::a2, 1).is_zero());
    CHECK(reduced_system_residual({0, 4, Rational(1, 3), false}, Reduced::c3, 2).is_zero());
    CHECK(reduced_system_residual({Rational(1, 2), 7, 0, false}, Reduced::b1, 7).is_zero());
    CHECK_THROWS_AS((void)reduced_system_residual(cfg0, Reduced::b2, 0), std::domain_error);
    CHECK(parse_reduced(reduced_name(Reduced::c2)) == Reduced::c2);

    for (const Rational& a : kAlphas) {
        for (const Rational b01 : {Rational(0), Rational(3, 7)}) {
            const VerificationConfig cfg{a, 8, b01, false};
            for (int n = 0; n <= cfg.n_max; ++n) {
                for (Reduced r : all_reduced()) {
                    if (r == Reduced::b2 && n == 0) continue;
                    CHECK_MESSAGE(reduced_system_residual(cfg, r, n).is_zero(), reduced_name(r), " n=", n);
                }
            }
        }
    }
}

TEST_CASE("reduced (c3) at n = 2 is the solvability condition c_0(2) = b_0(2)") {
    for (const Rational b01 : {Rational(0), Rational(1, 3), Rational(-4)}) {
        const VerificationConfig cfg{0, 2, b01, false};
        CHECK(c_term(cfg, 0, 2) == b_term(cfg, 0, 2));
    }
}

TEST_CASE("property: equivalence combination") {
    testing::Gen g(79);
    for (const Rational a : {Rational(0), Rational(1), Rational(1, 2)}) {
        const VerificationConfig cfg{a, 10, 0, false};
        for (int n = 0; n <= 10; ++n) {
            CHECK(equivalence_residual(cfg, n).is_zero());
            std::vector<Poly> random_c;
            for (int i = 0; i <= n; ++i) random_c.push_back(g.poly(i));
            CHECK(equivalence_residual(cfg, n, [&](int i) { return random_c[static_cast<std::size_t>(i)]; }).is_zero());
        }
    }
}

TEST_CASE("orthogonality") {
    const auto r1 = orthogonality_check(0, 1, 0, 1);
    CHECK(r1.gram[0][1].is_zero());
    CHECK(r1.ok());

    const auto classical = orthogonality_check(0, 0, 0, 5);
    for (int n = 0; n <= 5; ++n) CHECK(classical.gram[n][n] == Rational(1));
    CHECK(classical.ok());

    CHECK(orthogonality_check(Rational(1, 2), Rational(2, 3), 5, 8).ok());
    CHECK_THROWS_AS((void)orthogonality_check(0, -1, 0, 2), std::domain_error);

    // classical Laguerre polynomials are not orthogonal once a mass is added
    const Poly l1 = laguerre(1, 0), l0 = laguerre(0, 0);
    CHECK(!sobolev_inner_product(l1, l0, 0, 1, 0).is_zero());
}

TEST_CASE("property: orthogonality over masses") {
    testing::Gen g(83);
    for (int t = 0; t < 6; ++t) {
        Rational a = g.rational(9, 4);
        if (a <= Rational(-1)) a = -a;
        const Rational M = abs(g.rational()), N = abs(g.rational());
        CHECK(orthogonality_check(a, M, N, 6).ok());
    }
}

TEST_CASE("shifted identity") {
    CHECK(shifted_a_identity_check(0, 2, Rational(1, 2)));
    CHECK(shifted_a_closed(0, 1, 0).is_zero());
    CHECK(shifted_a_identity_check(3, 0, 0));
    CHECK(shifted_a_identity_check(5, 2, Rational(1, 2)));
    for (const Rational& a : kAlphas) {
        for (int n = 0; n <= 7; ++n) {
            for (int l = 0; l <= 3; ++l) CHECK(shifted_a_identity_check(n, l, a));
        }
    }
}

TEST_CASE("verify report") {
    const auto r = verify({0, 8, 0, true});
    CHECK(r.ok());
    CHECK(r.residual_zero);
    CHECK(r.systems.size() == 8);
    for (const auto& [name, good] : r.systems) CHECK(good);

    const auto quiet = verify({Rational(1, 2), 4, Rational(3, 7), false});
    CHECK(quiet.ok());
    CHECK(quiet.systems.empty());
    CHECK_THROWS_AS((void)verify({-2, 3, 0, false}), std::domain_error);
}
