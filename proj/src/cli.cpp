#include "soblag/cli.hpp"

#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "soblag/io.hpp"

namespace soblag {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": expected an integer or p/q, got '" + text + "'");
    }
}

Rational parse_alpha(const std::string& text) {
    Rational a = parse_rational("--alpha", text);
    if (a <= Rational(-1)) throw UsageError("--alpha must exceed -1, got " + a.to_string());
    return a;
}

// Accepts p/q or a decimal/scientific literal such as 1e-20.
Rational parse_tolerance(const std::string& text) {
    if (text.find_first_of(".eE") == std::string::npos) return parse_rational("--tol", text);
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return Rational(mpq_class(v));
    } catch (const std::exception&) {
        throw UsageError("--tol: cannot parse '" + text + "'");
    }
}

int report_failures(std::ostream& out, const json& failures) {
    out << json{{"failures", failures}}.dump(2) << "\n";
    return kExitCheckFailed;
}

// Substitutes whichever masses are given; the others stay symbolic.
MNPoly substitute(const MNPoly& p, const std::optional<Rational>& m, const std::optional<Rational>& n) {
    MNPoly out;
    for (int dm = 0; dm <= MNPoly::kMaxDegree; ++dm) {
        for (int dn = 0; dn <= MNPoly::kMaxDegree; ++dn) {
            Poly cell = p.cell(dm, dn);
            if (cell.is_zero()) continue;
            if (m) cell *= pow(*m, dm);
            if (n) cell *= pow(*n, dn);
            out += MNPoly::term(std::move(cell), m ? 0 : dm, n ? 0 : dn);
        }
    }
    return out;
}

int cmd_coeffs(const std::string& family, const std::string& alpha_text, int imax, const std::string& format,
               std::ostream& out) {
    Family f;
    try {
        f = parse_family(family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto fam = build_family(f, parse_alpha(alpha_text), imax);
    if (format == "csv") {
        out << family_to_csv(fam);
    } else if (format == "pretty") {
        out << family_to_pretty(fam);
    } else {
        out << family_to_json(fam).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& alpha_text, int nmax, const std::string& b01_text, bool systems, std::ostream& out) {
    const VerificationConfig cfg{parse_alpha(alpha_text), nmax, parse_rational("--b01", b01_text), systems};
    const auto report = verify(cfg);
    out << report_to_json(report).dump(2) << "\n";
    return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_orders(const std::string& alpha_text, std::ostream& out) {
    const Rational alpha = parse_alpha(alpha_text);
    if (!alpha.is_integer()) throw UsageError("orders: --alpha must be a nonnegative integer");
    json failures = json::array();
    for (Family f : {Family::a, Family::beta, Family::gamma}) {
        const int expected = theoretical_order(f, alpha);
        const int detected = family_order(f, alpha, expected + 4);
        const Poly leading = detected > 0 ? family_entry(f, detected, alpha) : Poly();
        const Poly closed = expected_top_entry(f, alpha);
        const bool ok = detected == expected && leading == closed;
        out << family_name(f) << ":" << detected << " (theoretical " << expected << ") leading " << leading.to_string()
            << " (closed form " << closed.to_string() << ") " << (ok ? "ok" : "FAIL") << "\n";
        if (!ok) {
            failures.push_back({{"check", "order"},
                                {"family", family_name(f)},
                                {"detected", detected},
                                {"expected", expected},
                                {"leading", poly_to_json(leading)},
                                {"expected_leading", poly_to_json(closed)}});
        }
    }
    return failures.empty() ? kExitOk : report_failures(out, failures);
}

int cmd_sums(const std::string& alpha_text, bool numeric, int imax, long prec, const std::string& x_text,
             const std::string& tol_text, std::ostream& out) {
    const Rational alpha = parse_alpha(alpha_text);
    json failures = json::array();
    if (alpha.is_integer() && !numeric) {
        for (Family f : {Family::a, Family::beta, Family::gamma}) {
            const Poly s = family_sum(f, alpha);
            out << family_name(f) << ": sum of " << theoretical_order(f, alpha) << " entries = " << s.to_string()
                << (s.is_zero() ? " ok" : " FAIL") << "\n";
            if (!s.is_zero()) failures.push_back({{"check", "sum"}, {"family", family_name(f)}, {"sum", poly_to_json(s)}});
        }
        return failures.empty() ? kExitOk : report_failures(out, failures);
    }
    if (imax < 2) throw UsageError("--imax must be at least 2");
    if (prec < 32) throw UsageError("--prec must be at least 32 bits");
    const Rational x = parse_rational("--x", x_text);
    const Float tol(parse_tolerance(tol_text), prec);
    json results = json::array();
    for (Family f : {Family::a, Family::beta}) {
        const auto r = family_sum_numeric(f, alpha, x, imax, prec);
        const bool ok = r.difference < tol && r.truncation_bound < tol;
        json j = numeric_report_to_json(r);
        j["pass"] = ok;
        if (!ok) failures.push_back({{"check", "numeric sum"}, {"family", family_name(f)}, {"difference", j["difference"]}});
        results.push_back(std::move(j));
    }
    const bool ok = failures.empty();
    out << json{{"results", std::move(results)}, {"failures", std::move(failures)}}.dump(2) << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_ortho(const std::string& alpha_text, const std::string& m_text, const std::string& n_text, int nmax,
              std::ostream& out) {
    const Rational alpha = parse_alpha(alpha_text);
    const Rational m = parse_rational("--M", m_text), n = parse_rational("--N", n_text);
    if (m.sign() < 0 || n.sign() < 0) throw UsageError("--M and --N must be nonnegative");
    const auto r = orthogonality_check(alpha, m, n, nmax);
    for (const auto& row : r.gram) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
        out << "\n";
    }
    out << (r.ok() ? "pass" : "fail") << "\n";
    if (r.ok()) return kExitOk;
    json failures = json::array();
    for (const auto& [i, j] : r.violations) {
        failures.push_back({{"check", "gram"}, {"m", i}, {"n", j}, {"value", r.gram[i][j].to_string()}});
    }
    return report_failures(out, failures);
}

int cmd_poly(int n, const std::string& alpha_text, const std::string& m_text, const std::string& n_text,
             std::ostream& out) {
    const Rational alpha = parse_alpha(alpha_text);
    std::optional<Rational> m, nn;
    if (!m_text.empty()) m = parse_rational("--M", m_text);
    if (!n_text.empty()) nn = parse_rational("--N", n_text);
    out << substitute(sobolev_poly(n, alpha), m, nn).to_string() << "\n";
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sobolev-type Laguerre polynomials: coefficient tables and exact verification", "soblag"};
    app.require_subcommand(1);

    std::string alpha = "0", family, format = "json", b01 = "0", x = "1", tol = "1e-20", m_mass, n_mass;
    int imax = 10, nmax = 8, n = 0;
    long prec = 256;
    bool systems = false, numeric = false;
    int numeric_imax = 400;

    auto* coeffs = app.add_subcommand("coeffs", "emit a coefficient table");
    coeffs->add_option("--family", family, "a|bstar|beta|cstar|gamma|beta1..beta4|gamma1..gamma5")->required();
    coeffs->add_option("--alpha", alpha)->required();
    coeffs->add_option("--imax", imax)->required()->check(CLI::PositiveNumber);
    coeffs->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* verify_cmd = app.add_subcommand("verify", "check the differential equation for n = 0..nmax");
    verify_cmd->add_option("--alpha", alpha)->required();
    verify_cmd->add_option("--nmax", nmax)->required()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--b01", b01, "free constant b_0(1, alpha)");
    verify_cmd->add_flag("--systems", systems, "also check the eight component systems");

    auto* orders = app.add_subcommand("orders", "detected and theoretical orders with leading entries");
    orders->add_option("--alpha", alpha)->required();

    auto* sums = app.add_subcommand("sums", "coefficient sums: exact at integer alpha, numeric otherwise");
    sums->add_option("--alpha", alpha)->required();
    sums->add_flag("--numeric", numeric, "force the numeric comparison");
    sums->add_option("--imax", numeric_imax);
    sums->add_option("--prec", prec, "bits");
    sums->add_option("--x", x);
    sums->add_option("--tol", tol);

    auto* ortho = app.add_subcommand("ortho", "Gram matrix of the Sobolev-type polynomials");
    ortho->add_option("--alpha", alpha)->required();
    ortho->add_option("--M", m_mass)->required();
    ortho->add_option("--N", n_mass)->required();
    ortho->add_option("--nmax", nmax)->required()->check(CLI::NonNegativeNumber);

    auto* poly = app.add_subcommand("poly", "print L_n^{alpha,M,N}");
    poly->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    poly->add_option("--alpha", alpha)->required();
    poly->add_option("--M", m_mass);
    poly->add_option("--N", n_mass);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(family, alpha, imax, format, out);
        if (verify_cmd->parsed()) return cmd_verify(alpha, nmax, b01, systems, out);
        if (orders->parsed()) return cmd_orders(alpha, out);
        if (sums->parsed()) return cmd_sums(alpha, numeric, numeric_imax, prec, x, tol, out);
        if (ortho->parsed()) return cmd_ortho(alpha, m_mass, n_mass, nmax, out);
        if (poly->parsed()) return cmd_poly(n, alpha, m_mass, n_mass, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        // internal cross-check disagreement
        err << "internal check failed: " << e.what() << "\n";
        return report_failures(out, json::array({{{"check", "internal"}, {"detail", e.what()}}}));
    }
    return kExitUsage;
}

}  // namespace soblag
