#include "soblag/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "soblag/combinatorics.hpp"

namespace soblag {

Poly::Poly(Rational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly Poly::monomial(Rational coefficient, int power) {
    if (power < 0) throw std::domain_error("Poly::monomial: negative power");
    if (coefficient.is_zero()) return {};
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
    c.back() = std::move(coefficient);
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const Rational& Poly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Poly::coeff(int j) const {
    if (j < 0 || j > degree()) return Rational(0);
    return coeffs_[static_cast<std::size_t>(j)];
}

Poly Poly::derivative(int k) const {
    if (k < 0) throw std::domain_error("Poly::derivative: negative order");
    if (k == 0) return *this;
    if (k > degree()) return {};
    std::vector<Rational> out(coeffs_.size() - static_cast<std::size_t>(k));
    for (std::size_t j = 0; j < out.size(); ++j) {
        // x^(j+k) -> (j+k)!/j! x^j
        out[j] = coeffs_[j + static_cast<std::size_t>(k)] * pochhammer(Rational(static_cast<long>(j) + 1), k);
    }
    return Poly(std::move(out));
}

Poly Poly::reflect() const {
    Poly out = *this;
    for (std::size_t j = 1; j < out.coeffs_.size(); j += 2) out.coeffs_[j] = -out.coeffs_[j];
    return out;
}

Rational Poly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

std::string Poly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int j = 0; j <= degree(); ++j) {
        const Rational& c = coeffs_[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (j == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1)) out += mag.to_string() + "*";
        out += var;
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

}  // namespace soblag
