#include "soblag/mn_poly.hpp"

#include <stdexcept>

namespace soblag {

namespace {

void check_range(int deg_m, int deg_n) {
    if (deg_m < 0 || deg_n < 0 || deg_m > MNPoly::kMaxDegree || deg_n > MNPoly::kMaxDegree) {
        throw std::logic_error("MNPoly: degree (" + std::to_string(deg_m) + "," + std::to_string(deg_n) +
                               ") exceeds the (2,2) cap");
    }
}

std::string mass_monomial(int p, int q) {
    std::string s;
    if (p >= 1) s += "M";
    if (p == 2) s += "^2";
    if (q >= 1) s += (s.empty() ? "" : "*") + std::string("N");
    if (q == 2) s += "^2";
    return s;
}

}  // namespace

MNPoly::MNPoly(Poly constant) { grid_[index(0, 0)] = std::move(constant); }

MNPoly MNPoly::term(Poly coefficient, int deg_m, int deg_n) {
    check_range(deg_m, deg_n);
    MNPoly out;
    out.grid_[index(deg_m, deg_n)] = std::move(coefficient);
    return out;
}

const Poly& MNPoly::cell(int deg_m, int deg_n) const {
    check_range(deg_m, deg_n);
    return grid_[index(deg_m, deg_n)];
}

bool MNPoly::is_zero() const {
    for (const auto& p : grid_) {
        if (!p.is_zero()) return false;
    }
    return true;
}

std::optional<MNCell> MNPoly::first_nonzero() const {
    for (int p = 0; p <= kMaxDegree; ++p) {
        for (int q = 0; q <= kMaxDegree; ++q) {
            const Poly& c = grid_[index(p, q)];
            for (int j = 0; j <= c.degree(); ++j) {
                if (!c.coeff(j).is_zero()) return MNCell{p, q, j, c.coeff(j)};
            }
        }
    }
    return std::nullopt;
}

int MNPoly::degree_m() const {
    int d = -1;
    for (int p = 0; p <= kMaxDegree; ++p)
        for (int q = 0; q <= kMaxDegree; ++q)
            if (!grid_[index(p, q)].is_zero()) d = std::max(d, p);
    return d;
}

int MNPoly::degree_n() const {
    int d = -1;
    for (int p = 0; p <= kMaxDegree; ++p)
        for (int q = 0; q <= kMaxDegree; ++q)
            if (!grid_[index(p, q)].is_zero()) d = std::max(d, q);
    return d;
}

MNPoly MNPoly::mul_by_monomial(int deg_m, int deg_n) const {
    if (deg_m < 0 || deg_n < 0) throw std::logic_error("MNPoly: negative monomial degree");
    MNPoly out;
    for (int p = 0; p <= kMaxDegree; ++p) {
        for (int q = 0; q <= kMaxDegree; ++q) {
            const Poly& c = grid_[index(p, q)];
            if (c.is_zero()) continue;
            check_range(p + deg_m, q + deg_n);
            out.grid_[index(p + deg_m, q + deg_n)] = c;
        }
    }
    return out;
}

MNPoly MNPoly::scale_by_poly(const Poly& poly) const {
    MNPoly out;
    for (std::size_t k = 0; k < grid_.size(); ++k) out.grid_[k] = grid_[k] * poly;
    return out;
}

MNPoly MNPoly::derivative(int k) const {
    MNPoly out;
    for (std::size_t i = 0; i < grid_.size(); ++i) out.grid_[i] = grid_[i].derivative(k);
    return out;
}

Poly MNPoly::evaluate(const Rational& m, const Rational& n) const {
    Poly out;
    Rational mp(1);
    for (int p = 0; p <= kMaxDegree; ++p) {
        Rational np(1);
        for (int q = 0; q <= kMaxDegree; ++q) {
            out += grid_[index(p, q)] * (mp * np);
            np *= n;
        }
        mp *= m;
    }
    return out;
}

std::string MNPoly::to_string() const {
    std::string out;
    for (int p = 0; p <= kMaxDegree; ++p) {
        for (int q = 0; q <= kMaxDegree; ++q) {
            const Poly& c = grid_[index(p, q)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (p == 0 && q == 0) {
                out += c.to_string();
            } else {
                out += "(" + c.to_string() + ")*" + mass_monomial(p, q);
            }
        }
    }
    return out.empty() ? "0" : out;
}

MNPoly& MNPoly::operator+=(const MNPoly& rhs) {
    for (std::size_t k = 0; k < grid_.size(); ++k) grid_[k] += rhs.grid_[k];
    return *this;
}

MNPoly& MNPoly::operator-=(const MNPoly& rhs) {
    for (std::size_t k = 0; k < grid_.size(); ++k) grid_[k] -= rhs.grid_[k];
    return *this;
}

MNPoly& MNPoly::operator*=(const Rational& s) {
    for (auto& c : grid_) c *= s;
    return *this;
}

MNPoly operator*(const MNPoly& lhs, const MNPoly& rhs) {
    MNPoly out;
    for (int p = 0; p <= MNPoly::kMaxDegree; ++p) {
        for (int q = 0; q <= MNPoly::kMaxDegree; ++q) {
            const Poly& a = lhs.grid_[MNPoly::index(p, q)];
            if (a.is_zero()) continue;
            out += rhs.scale_by_poly(a).mul_by_monomial(p, q);
        }
    }
    return out;
}

}  // namespace soblag
