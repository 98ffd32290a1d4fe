#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdcalc/verify.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using fdcalc::binomial_poly_x_plus_y;
using fdcalc::binomial_sum_poly;
using fdcalc::BivariatePolynomial;
using fdcalc::convolution_sum_bivariate;
using fdcalc::eval2;
using fdcalc::Identity;
using fdcalc::identity_name;
using fdcalc::Integer;
using fdcalc::numeric_grid_check;
using fdcalc::one_plus_x_pow;
using fdcalc::Polynomial;
using fdcalc::Rational;
using fdcalc::VerificationReport;
using fdcalc::verify_binomial_direct;
using fdcalc::verify_binomial_via_differences;
using fdcalc::verify_chu_vandermonde_direct;
using fdcalc::verify_chu_vandermonde_proof;
using fdcalc::Var;

namespace {

// Pascal triangle row by repeated addition; independent of binom_int.
std::vector<Integer> pascal_row(unsigned n) {
    std::vector<Integer> row{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<Integer> next(row.size() + 1, Integer(0));
        for (std::size_t j = 0; j < row.size(); ++j) {
            next[j] += row[j];
            next[j + 1] += row[j];
        }
        row = std::move(next);
    }
    return row;
}

// Generalized binomial coefficient C(t, k) by the falling-factorial
// product; works at negative and fractional arguments.
Rational gen_binom(const Rational& top, unsigned k) {
    Rational result(1);
    for (unsigned j = 0; j < k; ++j) {
        result *= (top - Rational(j)) / Rational(j + 1);
    }
    return result;
}

bool has_step(const VerificationReport& report, const std::string& id) {
    for (const auto& step : report.steps()) {
        if (step.id == id) {
            return true;
        }
    }
    return false;
}

}  // namespace

TEST_CASE("identity names") {
    CHECK(std::string(identity_name(Identity::binomial)) == "binomial");
    CHECK(std::string(identity_name(Identity::chu_vandermonde)) == "chu-vandermonde");
}

TEST_CASE("binomial expansion helpers match a Pascal-row oracle") {
    CHECK(binomial_sum_poly(2) == Polynomial(Var::x, {1, 2, 1}));
    CHECK(one_plus_x_pow(2) == Polynomial(Var::x, {1, 2, 1}));
    CHECK(one_plus_x_pow(0) == Polynomial::constant(Var::x, 1));

    const std::vector<Integer> row = pascal_row(30);
    const Polynomial sum = binomial_sum_poly(30);
    const Polynomial power = one_plus_x_pow(30);
    REQUIRE(sum.degree() == 30);
    REQUIRE(power.degree() == 30);
    for (unsigned k = 0; k <= 30; ++k) {
        CHECK(sum.coeff(k) == Rational(row[k]));
        CHECK(power.coeff(k) == Rational(row[k]));
    }
}

TEST_CASE("binomial theorem: direct route") {
    for (unsigned n : {0u, 2u, 30u}) {
        const VerificationReport report = verify_binomial_direct(n);
        CHECK(report.identity() == "binomial");
        CHECK(report.n() == n);
        REQUIRE(report.steps().size() == 1);
        CHECK(report.steps().front().id == "expansion-equality");
        CHECK(report.overall());
        CHECK_FALSE(report.theta().has_value());
    }
}

TEST_CASE("binomial theorem: difference route") {
    for (unsigned n : {0u, 1u, 25u}) {
        const VerificationReport report = verify_binomial_via_differences(n);
        CHECK(report.identity() == "binomial");
        REQUIRE(report.steps().size() == 4);
        CHECK(report.steps()[0].id == "newton-gregory-sum");
        CHECK(report.steps()[1].id == "closed-form");
        CHECK(report.steps()[2].id == "operator-equality");
        CHECK(report.steps()[3].id == "division-bridge");
        CHECK(report.overall());
        CHECK_FALSE(report.theta().has_value());
    }
}

TEST_CASE("binomial theorem: both routes agree across orders") {
    for (unsigned n = 0; n <= 16; ++n) {
        CHECK(verify_binomial_direct(n).overall());
        CHECK(verify_binomial_via_differences(n).overall());
    }
}

TEST_CASE("convolution expansion helpers") {
    // n = 1: C(x,0)C(y,1) + C(x,1)C(y,0) = y + x = C(x+y, 1).
    const BivariatePolynomial conv = convolution_sum_bivariate(1);
    const BivariatePolynomial target = binomial_poly_x_plus_y(1);
    CHECK(conv == target);
    CHECK(eval2(conv, Rational(5), Rational(-2)) == Rational(3));

    // Independent arithmetic oracle on a small integer grid, n = 4.
    const BivariatePolynomial conv4 = convolution_sum_bivariate(4);
    const BivariatePolynomial target4 = binomial_poly_x_plus_y(4);
    for (long long x0 = -3; x0 <= 3; ++x0) {
        for (long long y0 = -3; y0 <= 3; ++y0) {
            Rational expected;
            for (unsigned k = 0; k <= 4; ++k) {
                expected += gen_binom(Rational(x0), k) * gen_binom(Rational(y0), 4 - k);
            }
            CHECK(eval2(conv4, Rational(x0), Rational(y0)) == expected);
            CHECK(eval2(target4, Rational(x0), Rational(y0)) ==
                  gen_binom(Rational(x0 + y0), 4));
        }
    }
}

TEST_CASE("convolution identity: direct route") {
    for (unsigned n : {0u, 1u, 12u}) {
        const VerificationReport report = verify_chu_vandermonde_direct(n);
        CHECK(report.identity() == "chu-vandermonde");
        REQUIRE(report.steps().size() == 1);
        CHECK(report.steps().front().id == "expansion-equality");
        CHECK(report.overall());
    }
}

TEST_CASE("convolution identity: proof route base case") {
    const VerificationReport report = verify_chu_vandermonde_proof(0);
    REQUIRE(report.steps().size() == 1);
    CHECK(report.steps().front().id == "base-case-direct");
    CHECK(report.overall());
    REQUIRE(report.theta().has_value());
    CHECK(*report.theta() == Rational(1));
}

TEST_CASE("convolution identity: proof route step layout") {
    const VerificationReport report = verify_chu_vandermonde_proof(1);
    REQUIRE(report.steps().size() == 6);
    CHECK(report.steps()[0].id == "vanishing-difference[i=1]");
    CHECK(report.steps()[1].id == "root-substitution[i=1]");
    CHECK(report.steps()[2].id == "scaled-bridge[i=1]");
    CHECK(report.steps()[3].id == "same-zeros[i=1]");
    CHECK(report.steps()[4].id == "theta-determination");
    CHECK(report.steps()[5].id == "proportionality");
    CHECK(report.overall());
    REQUIRE(report.theta().has_value());
    CHECK(*report.theta() == Rational(1));

    // Four steps per root plus the two closing steps.
    const VerificationReport deeper = verify_chu_vandermonde_proof(3);
    CHECK(deeper.steps().size() == 4 * 3 + 2);
    CHECK(has_step(deeper, "scaled-bridge[i=2]"));
    CHECK(has_step(deeper, "same-zeros[i=3]"));
    CHECK(deeper.overall());
}

TEST_CASE("convolution identity: both routes agree across orders") {
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(verify_chu_vandermonde_direct(n).overall());
        const VerificationReport proof = verify_chu_vandermonde_proof(n);
        CHECK(proof.overall());
        REQUIRE(proof.theta().has_value());
        CHECK(*proof.theta() == Rational(1));
    }
}

TEST_CASE("numeric grid check: binomial") {
    // Spot value first: at n = 3, x = 2 both sides are 27.
    Rational lhs;
    Rational power(1);
    for (unsigned k = 0; k <= 3; ++k) {
        lhs += Rational(fdcalc::binom_int(3, k)) * power;
        power *= Rational(2);
    }
    CHECK(lhs == Rational(27));

    const VerificationReport report = numeric_grid_check(Identity::binomial, 3, 4);
    CHECK(report.identity() == "binomial");
    REQUIRE(report.steps().size() == 1);
    CHECK(report.steps().front().id == "grid-agreement");
    CHECK(report.overall());
}

TEST_CASE("numeric grid check: convolution") {
    // Spot value: n = 2 at x = y = -1 gives 1 + 1 + 1 = 3 = C(-2,2).
    Rational spot;
    for (unsigned k = 0; k <= 2; ++k) {
        spot += gen_binom(Rational(-1), k) * gen_binom(Rational(-1), 2 - k);
    }
    CHECK(spot == Rational(3));
    CHECK(gen_binom(Rational(-2), 2) == Rational(3));

    const VerificationReport report = numeric_grid_check(Identity::chu_vandermonde, 2, 3);
    CHECK(report.identity() == "chu-vandermonde");
    CHECK(report.overall());
}

TEST_CASE("numeric grid check rejects an empty grid") {
    CHECK_THROWS_AS(numeric_grid_check(Identity::binomial, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(numeric_grid_check(Identity::chu_vandermonde, 2, 0), std::invalid_argument);
}

TEST_CASE("report mechanics") {
    VerificationReport report("binomial", 5);
    CHECK(report.overall());  // vacuous conjunction

    report.add_step("a", "first", true);
    CHECK(report.overall());
    report.add_step("b", "second", false);
    CHECK_FALSE(report.overall());
    report.add_step("c", "third", true);
    CHECK_FALSE(report.overall());

    bool conjunction = true;
    for (const auto& step : report.steps()) {
        conjunction = conjunction && step.passed;
    }
    CHECK(report.overall() == conjunction);
}

TEST_CASE("absorb prefixes step ids and carries theta") {
    VerificationReport inner("chu-vandermonde", 2);
    inner.add_step("theta-determination", "...", true);
    inner.set_theta(Rational(1));

    VerificationReport merged("chu-vandermonde", 2);
    merged.add_step("expansion-equality", "...", true);
    merged.absorb(inner, "proof/");

    REQUIRE(merged.steps().size() == 2);
    CHECK(merged.steps()[1].id == "proof/theta-determination");
    REQUIRE(merged.theta().has_value());
    CHECK(*merged.theta() == Rational(1));
    CHECK(merged.overall());

    VerificationReport failing("binomial", 1);
    failing.add_step("x", "...", false);
    merged.absorb(failing, "grid/");
    CHECK_FALSE(merged.overall());
    CHECK(merged.steps().back().id == "grid/x");
}
