#include "soblag/io.hpp"

#include <sstream>
#include <stdexcept>

namespace soblag {

using nlohmann::json;

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const Rational& c : p.coefficients()) out.push_back(c.to_string());
    return out;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
    std::vector<Rational> c;
    for (const auto& e : j) {
        if (!e.is_string()) throw std::invalid_argument("polynomial coefficients must be strings");
        c.push_back(Rational::parse(e.get<std::string>()));
    }
    return Poly(std::move(c));
}

json family_to_json(const CoefficientFamily& family) {
    json entries = json::array();
    for (const auto& [i, p] : family.table) entries.push_back({{"i", i}, {"coeffs", poly_to_json(p)}});
    json consts = json::array();
    const int n_max = family.table.empty() ? 0 : family.table.rbegin()->first;
    for (int n = 0; n <= n_max; ++n) {
        if (auto v = family.const_term(n)) consts.push_back({{"n", n}, {"value", v->to_string()}});
    }
    return {{"family", family_name(family.id)},
            {"alpha", family.alpha.to_string()},
            {"entries", std::move(entries)},
            {"const_term", std::move(consts)}};
}

std::string family_to_csv(const CoefficientFamily& family) {
    std::ostringstream os;
    os << "family,alpha,i,j,value\n";
    const std::string prefix = family_name(family.id) + "," + family.alpha.to_string() + ",";
    for (const auto& [i, p] : family.table) {
        for (int j = 0; j <= p.degree(); ++j) os << prefix << i << "," << j << "," << p.coeff(j) << "\n";
    }
    return os.str();
}

std::string family_to_pretty(const CoefficientFamily& family) {
    std::ostringstream os;
    os << family_name(family.id) << " (alpha = " << family.alpha << ")\n";
    for (const auto& [i, p] : family.table) os << "  " << i << ": " << p.to_string() << "\n";
    const int n_max = family.table.empty() ? 0 : family.table.rbegin()->first;
    bool header = false;
    for (int n = 0; n <= n_max; ++n) {
        if (auto v = family.const_term(n)) {
            if (!header) os << "constant terms\n";
            header = true;
            os << "  n=" << n << ": " << *v << "\n";
        }
    }
    return os.str();
}

json failure_to_json(const Failure& f) { return {{"check", f.check}, {"n", f.n}, {"detail", f.detail}}; }

json report_to_json(const VerificationReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back(failure_to_json(f));
    json systems = json::object();
    for (const auto& [name, good] : r.systems) systems[name] = good;
    return {{"alpha", r.alpha.to_string()}, {"b01", r.b01.to_string()},     {"n_max", r.n_max},
            {"residual_zero", r.residual_zero}, {"systems", std::move(systems)}, {"failures", std::move(failures)}};
}

json numeric_report_to_json(const NumericSumReport& r, int digits) {
    return {{"family", family_name(r.family)},
            {"alpha", r.alpha.to_string()},
            {"x", r.x.to_string()},
            {"i_max", r.i_max},
            {"precision_bits", r.precision_bits},
            {"partial_sum", r.partial_sum.to_string(digits)},
            {"extrapolated", r.extrapolated.to_string(digits)},
            {"extrapolation_error", r.extrapolation_error.to_string(6)},
            {"closed_form", r.closed_form.to_string(digits)},
            {"truncation_bound", r.truncation_bound.to_string(6)},
            {"raw_difference", r.raw_difference.to_string(6)},
            {"difference", r.difference.to_string(6)}};
}

}  // namespace soblag
