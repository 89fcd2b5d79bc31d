#include "soblag/numeric_sum.hpp"

#include <algorithm>
#include <stdexcept>

namespace soblag {

namespace {

constexpr long kGuardBits = 64;

class Rows {
public:
    Rows(int n, long prec) : n_(n), prec_(prec) {}

    Float num(const Rational& r) const { return Float(r, prec_); }

    // C(a, k), k = 0..n
    std::vector<Float> binomials(const Rational& a) const {
        std::vector<Float> out(static_cast<std::size_t>(n_) + 1, num(1));
        for (int k = 0; k < n_; ++k) out[k + 1] = out[k] * num(a - k) / num(k + 1);
        return out;
    }

    // (a)_k, k = 0..n
    std::vector<Float> pochhammers(const Rational& a) const {
        std::vector<Float> out(static_cast<std::size_t>(n_) + 1, num(1));
        for (int k = 0; k < n_; ++k) out[k + 1] = out[k] * num(a + k);
        return out;
    }

    // v^k, k = 0..n
    std::vector<Float> powers(const Rational& v) const {
        std::vector<Float> out(static_cast<std::size_t>(n_) + 1, num(1));
        for (int k = 0; k < n_; ++k) out[k + 1] = out[k] * num(v);
        return out;
    }

    // 1/k!, k = 0..n
    std::vector<Float> inverse_factorials() const {
        std::vector<Float> out(static_cast<std::size_t>(n_) + 1, num(1));
        for (int k = 0; k < n_; ++k) out[k + 1] = out[k] / num(k + 1);
        return out;
    }

private:
    int n_;
    long prec_;
};

std::vector<Float> product(const std::vector<Float>& u, const std::vector<Float>& v) {
    std::vector<Float> out(u);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] *= v[k];
    return out;
}

std::vector<Float> a_values(const Rational& alpha, const Rational& x, int i_max, long prec) {
    const Rows rows(i_max, prec);
    const auto c1 = rows.binomials(alpha + 1);
    const auto w = product(rows.binomials(alpha + 2), rows.pochhammers(alpha + 3));
    const auto xp = rows.powers(x);
    const auto inv_fact = rows.inverse_factorials();
    std::vector<Float> out(static_cast<std::size_t>(i_max) + 1, Float(prec));
    for (int i = 1; i <= i_max; ++i) {
        Float s(prec);
        for (int j = 1; j <= i; ++j) {
            const Float term = c1[j - 1] * w[i - j] * xp[j];
            if ((i + j + 1) % 2 == 0) s += term; else s -= term;
        }
        out[i] = s * inv_fact[i];
    }
    return out;
}

std::vector<Float> beta_values(const Rational& alpha, const Rational& x, int i_max, long prec) {
    const Rows rows(i_max, prec);
    const Rational a1 = alpha + 1, a3 = alpha + 3, a4 = alpha + 4;
    const auto c2 = rows.binomials(alpha + 2);
    const auto w1 = product(rows.binomials(a3), rows.pochhammers(alpha + 2));
    const auto c1 = rows.binomials(a1);
    const auto w2 = product(rows.binomials(alpha + 2), rows.pochhammers(a3));
    const auto c3 = rows.binomials(a3);
    const auto w3 = product(c3, rows.pochhammers(a1));
    const auto c4 = rows.binomials(a4);
    const auto w4 = product(c4, rows.pochhammers(a1));
    const auto xp = rows.powers(x);
    const auto inv_fact = rows.inverse_factorials();

    const Float k1 = rows.num(Rational(1) / a1);
    const Float k2 = rows.num((alpha + 2) * 2 / a1);
    const Float k3 = rows.num(Rational(1) / (a1 * a1 * (alpha + 2) * a3 * a3));
    const Float k4 = rows.num(Rational(1) / (a1 * a1 * a3 * a4 * a4));
    const Rational base3 = a1 * a3, base4 = a1 * a4;

    std::vector<Float> out(static_cast<std::size_t>(i_max) + 1, Float(prec));
    for (int i = 2; i <= i_max; ++i) {
        Float s1(prec), s2(prec), s3(prec), s4(prec);
        for (int j = 0; j <= i; ++j) {
            const bool plus = (i + j + 1) % 2 == 0;
            auto acc = [plus](Float& s, const Float& t) {
                if (plus) s += t; else s -= t;
            };
            if (j >= 1) acc(s1, c2[j - 1] * w1[i - j] * xp[j - 1]);
            if (j >= 2) acc(s2, c1[j - 2] * w2[i - j] * xp[j - 2]);
            const Rational jm = Rational(j) * (i - j);
            acc(s3, c3[j] * w3[i - j] * rows.num(base3 + jm) * xp[j]);
            acc(s4, c4[j] * w4[i - j] * rows.num(base4 + jm) * xp[j]);
        }
        out[i] = (k1 * s1 + k3 * s3 + k4 * rows.num(i - 2) * s4) * inv_fact[i - 2] + k2 * s2 * inv_fact[i - 1];
    }
    return out;
}

// Terminating-by-tolerance hypergeometric series sum_k t_k with t_{k+1} = t_k * ratio(k).
// The ratio magnitude must eventually decrease below 1; `ratio_bound(k)` bounds
// |t_{k+1}/t_k| for all indices >= k.
template <class Ratio, class Bound>
Float series(long prec, Ratio ratio, Bound ratio_bound, Float& tail) {
    const Float eps(pow(Rational(2), -prec), prec);
    Float sum(prec), term(Rational(1), prec);
    for (int k = 0;; ++k) {
        const Float r = ratio_bound(k);
        if (r < Float(Rational(1, 2), prec) && abs(term) < eps) {
            tail = abs(term) / (Float(Rational(1), prec) - r);
            return sum;
        }
        sum += term;
        term *= ratio(k);
    }
}

Float extrapolate(const std::vector<int>& nodes, const std::vector<Float>& partial, long prec) {
    std::vector<Float> p;
    std::vector<Float> h;
    for (int n : nodes) {
        p.push_back(partial[n]);
        h.push_back(Float(Rational(1, n), prec));
    }
    const std::size_t m = p.size();
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t k = 0; k + level < m; ++k) {
            p[k] = (h[k] * p[k + 1] - h[k + level] * p[k]) / (h[k] - h[k + level]);
        }
    }
    return p[0];
}

}  // namespace

std::vector<Float> family_values_numeric(Family family, const Rational& alpha, const Rational& x, int i_max,
                                         long precision_bits) {
    if (alpha <= Rational(-1)) throw std::domain_error("alpha must exceed -1, got " + alpha.to_string());
    if (i_max < 1) throw std::invalid_argument("i_max must be positive");
    switch (family) {
        case Family::a:
            return a_values(alpha, x, i_max, precision_bits);
        case Family::beta:
            return beta_values(alpha, x, i_max, precision_bits);
        default:
            throw std::invalid_argument("numeric sums are available for families a and beta only");
    }
}

Float family_sum_closed_form(Family family, const Rational& alpha, const Rational& x, long precision_bits,
                             Float& bound) {
    if (alpha <= Rational(-1)) throw std::domain_error("alpha must exceed -1, got " + alpha.to_string());
    const long prec = precision_bits;
    auto num = [prec](const Rational& r) { return Float(r, prec); };
    const Float pi = Float::pi(prec);
    const Float sin_ratio = sin(pi * num(alpha)) / pi;
    const Rational ax = x.sign() < 0 ? -x : x;
    Float tail(prec);
    switch (family) {
        case Family::a: {
            // 1F1(1; alpha+4; -x)
            const Rational c = alpha + 4;
            const Float s = series(
                prec, [&](int k) { return num(-x / (c + k)); }, [&](int k) { return num(ax / (c + k)); }, tail);
            const Float pre = sin_ratio * num(x / ((alpha + 2) * (alpha + 3)));
            bound = abs(pre) * tail;
            return -(pre * s);
        }
        case Family::beta: {
            // 2F2(1, alpha+3; alpha+2, alpha+5; -x)
            auto r = [&](int k) { return (alpha + 3 + k) / ((alpha + 2 + k) * (alpha + 5 + k)); };
            const Float s = series(
                prec, [&](int k) { return num(-x * r(k)); }, [&](int k) { return num(ax * r(k)); }, tail);
            const Float pre = sin_ratio * num((alpha + 2) / ((alpha + 1) * (alpha + 3) * (alpha + 4)));
            bound = abs(pre * num(x)) * tail;
            return pre * (num(1) - num(x) * s);
        }
        default:
            throw std::invalid_argument("closed-form sums are available for families a and beta only");
    }
}

NumericSumReport family_sum_numeric(Family family, const Rational& alpha, const Rational& x, int i_max,
                                    long precision_bits) {
    if (i_max < 2) throw std::invalid_argument("i_max must be at least 2");
    const long wp = precision_bits + kGuardBits;
    const auto values = family_values_numeric(family, alpha, x, i_max, wp);

    std::vector<Float> partial(values.size(), Float(wp));
    for (std::size_t i = 1; i < values.size(); ++i) partial[i] = partial[i - 1] + values[i];

    const int step = std::max(1, i_max / 40);
    std::vector<int> nodes;
    for (int n = i_max; n >= 1 && nodes.size() < 20; n -= step) nodes.push_back(n);
    const Float limit = extrapolate(nodes, partial, wp);
    nodes.pop_back();
    const Float coarser = nodes.empty() ? limit : extrapolate(nodes, partial, wp);

    Float bound(wp);
    const Float target = family_sum_closed_form(family, alpha, x, wp, bound);

    return NumericSumReport{
        family,
        alpha,
        x,
        i_max,
        precision_bits,
        partial[static_cast<std::size_t>(i_max)],
        limit,
        abs(limit - coarser),
        target,
        bound,
        abs(partial[static_cast<std::size_t>(i_max)] - target),
        abs(limit - target),
    };
}

}  // namespace soblag
