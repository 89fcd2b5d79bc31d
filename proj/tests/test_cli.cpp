#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "soblag/cli.hpp"
#include "soblag/io.hpp"

using namespace soblag;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("poly json round-trip") {
    const Poly p(std::vector<Rational>{Rational(1, 2), 0, Rational(-3)});
    const json j = poly_to_json(p);
    CHECK(j.dump() == R"(["1/2","0","-3"])");
    CHECK(poly_from_json(j) == p);
    CHECK(poly_from_json(json::array()).is_zero());
    CHECK_THROWS_AS((void)poly_from_json(json::parse(R"([1, 2])")), std::invalid_argument);
    CHECK_THROWS_AS((void)poly_from_json(json::parse(R"({"a": 1})")), std::invalid_argument);
}

TEST_CASE("coefficient table json schema") {
    const auto fam = build_family(Family::a, Rational(1, 2), 3);
    const json j = family_to_json(fam);
    CHECK(j["family"] == "a");
    CHECK(j["alpha"] == "1/2");
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0]["i"] == 1);
    CHECK(poly_from_json(j["entries"][1]["coeffs"]) == fam.table.at(2));
    REQUIRE(j["const_term"].size() == 4);
    CHECK(j["const_term"][3]["n"] == 3);
    CHECK(j["const_term"][3]["value"] == "63/8");

    const json component = family_to_json(build_family(Family::beta2, 0, 2));
    CHECK(component["const_term"].empty());
}

TEST_CASE("coefficient table csv") {
    const std::string csv = family_to_csv(build_family(Family::a, 0, 2));
    CHECK(csv == "family,alpha,i,j,value\na,0,1,0,0\na,0,1,1,-1\na,0,2,0,0\na,0,2,1,3\na,0,2,2,-1/2\n");
}

TEST_CASE("verify report json schema") {
    VerificationReport r{Rational(1, 2), Rational(3, 7), 4, false, {{"S1", true}}, {{"residual", 3, "cell"}}};
    const json j = report_to_json(r);
    CHECK(j["alpha"] == "1/2");
    CHECK(j["b01"] == "3/7");
    CHECK(j["n_max"] == 4);
    CHECK(j["residual_zero"] == false);
    CHECK(j["systems"]["S1"] == true);
    CHECK(j["failures"][0]["n"] == 3);
}

TEST_CASE("cli examples") {
    const auto v = run({"verify", "--alpha", "0", "--nmax", "8"});
    CHECK(v.code == 0);
    const json report = json::parse(v.out);
    CHECK(report["residual_zero"] == true);
    CHECK(report["failures"].empty());

    const auto o = run({"orders", "--alpha", "1"});
    CHECK(o.code == 0);
    CHECK(o.out.find("a:6 ") != std::string::npos);
    CHECK(o.out.find("beta:10 ") != std::string::npos);
    CHECK(o.out.find("gamma:14 ") != std::string::npos);

    const auto p = run({"poly", "--n", "0", "--alpha", "1/2"});
    CHECK(p.code == 0);
    CHECK(p.out == "1\n");
}

TEST_CASE("cli subcommands") {
    const auto s = run({"verify", "--alpha", "1/2", "--nmax", "5", "--b01", "3/7", "--systems"});
    CHECK(s.code == 0);
    const json sj = json::parse(s.out);
    CHECK(sj["systems"].size() == 8);
    CHECK(sj["b01"] == "3/7");

    const auto c = run({"coeffs", "--family", "gamma", "--alpha", "0", "--imax", "10"});
    CHECK(c.code == 0);
    const json cj = json::parse(c.out);
    CHECK(poly_from_json(cj["entries"][9]["coeffs"]) == Poly::monomial(Rational(1, 60), 5));

    const auto csv = run({"coeffs", "--family", "bstar", "--alpha", "0", "--imax", "1", "--format", "csv"});
    CHECK(csv.out == "family,alpha,i,j,value\nbstar,0,1,0,1\nbstar,0,1,1,-1\n");

    CHECK(run({"coeffs", "--family", "beta3", "--alpha", "2", "--imax", "4", "--format", "pretty"}).code == 0);

    const auto exact = run({"sums", "--alpha", "1"});
    CHECK(exact.code == 0);
    CHECK(exact.out.find("gamma: sum of 14 entries = 0 ok") != std::string::npos);

    const auto numeric = run({"sums", "--alpha", "1/2", "--imax", "200", "--x", "2"});
    CHECK(numeric.code == 0);
    const json nj = json::parse(numeric.out);
    CHECK(nj["results"].size() == 2);
    CHECK(nj["results"][0]["pass"] == true);

    const auto ortho = run({"ortho", "--alpha", "1/2", "--M", "2/3", "--N", "5", "--nmax", "4"});
    CHECK(ortho.code == 0);
    CHECK(ortho.out.substr(ortho.out.size() - 5) == "pass\n");

    CHECK(run({"poly", "--n", "1", "--alpha", "0", "--M", "1", "--N", "0"}).out == "1 - 2*x\n");
    CHECK(run({"poly", "--n", "1", "--alpha", "0", "--N", "7"}).out == "1 - x + (-x)*M\n");
}

TEST_CASE("cli output is byte-stable") {
    const std::vector<std::string> args{"verify", "--alpha", "7/3", "--nmax", "6", "--systems"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> table{"coeffs", "--family", "beta", "--alpha", "1/2", "--imax", "6", "--format", "csv"};
    CHECK(run(table).out == run(table).out);
}

TEST_CASE("cli failures and usage errors") {
    const auto failed = run({"sums", "--alpha", "1/2", "--imax", "100", "--tol", "0"});
    CHECK(failed.code == 1);
    CHECK(json::parse(failed.out)["failures"].size() == 2);

    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"verify", "--alpha", "-1", "--nmax", "3"}).code == 2);
    CHECK(run({"verify", "--alpha", "x", "--nmax", "3"}).code == 2);
    CHECK(run({"verify", "--alpha", "0"}).code == 2);
    CHECK(run({"orders", "--alpha", "1/2"}).code == 2);
    CHECK(run({"coeffs", "--family", "delta", "--alpha", "0", "--imax", "3"}).code == 2);
    CHECK(run({"coeffs", "--family", "a", "--alpha", "0", "--imax", "3", "--format", "xml"}).code == 2);
    CHECK(run({"ortho", "--alpha", "0", "--M", "-1", "--N", "0", "--nmax", "2"}).code == 2);
    CHECK(run({"sums", "--alpha", "1/2", "--tol", "abc"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
