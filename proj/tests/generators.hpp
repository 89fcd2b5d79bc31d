#pragma once

#include <random>
#include <vector>

#include "soblag/poly.hpp"

namespace soblag::testing {

/// Seeded source of random exact values for property tests.
class Gen {
public:
    explicit Gen(std::uint32_t seed = 20261015U) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(int max_num = 12, int max_den = 7) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    /// Rational that is not an integer.
    Rational non_integer(int max_num = 12, int max_den = 7) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (!r.is_integer()) return r;
        }
    }

    Poly poly(int max_degree, int max_num = 9, int max_den = 5) {
        std::vector<Rational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
        for (auto& v : c) v = rational(max_num, max_den);
        return Poly(std::move(c));
    }

    Poly nonzero_poly(int max_degree) {
        for (;;) {
            Poly p = poly(max_degree);
            if (!p.is_zero()) return p;
        }
    }

private:
    std::mt19937 rng_;
};

}  // namespace soblag::testing
