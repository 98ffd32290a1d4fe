#include "fdcalc/verify.hpp"

#include <stdexcept>
#include <utility>

namespace fdcalc {

namespace {

Rational sign_pow(unsigned n) {
    return n % 2 == 0 ? Rational(1) : Rational(-1);
}

std::string istep(const char* name, unsigned i) {
    return std::string(name) + "[i=" + std::to_string(i) + "]";
}

/// theta with a = theta * b, when such a constant exists.
std::optional<Rational> proportionality_constant(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        return std::nullopt;
    }
    if (a.is_zero()) {
        return Rational(0);
    }
    if (a.degree() != b.degree()) {
        return std::nullopt;
    }
    Rational theta = a.leading_coefficient() / b.leading_coefficient();
    if (a == theta * b) {
        return theta;
    }
    return std::nullopt;
}

}  // namespace

void VerificationReport::add_step(std::string id, std::string description, bool passed) {
    steps_.push_back({std::move(id), std::move(description), passed});
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& id_prefix) {
    for (const auto& step : other.steps()) {
        steps_.push_back({id_prefix + step.id, step.description, step.passed});
    }
    if (other.theta()) {
        theta_ = other.theta();
    }
}

bool VerificationReport::overall() const {
    for (const auto& step : steps_) {
        if (!step.passed) {
            return false;
        }
    }
    return true;
}

const char* identity_name(Identity identity) {
    return identity == Identity::binomial ? "binomial" : "chu-vandermonde";
}

Polynomial binomial_sum_poly(unsigned n) {
    std::vector<Rational> coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        coeffs[k] = Rational(binom_int(n, k));
    }
    return Polynomial(Var::x, std::move(coeffs));
}

Polynomial one_plus_x_pow(unsigned n) {
    return poly_pow(Polynomial(Var::x, {1, 1}), n);
}

BivariatePolynomial convolution_sum_bivariate(unsigned n) {
    BivariatePolynomial sum;
    for (unsigned k = 0; k <= n; ++k) {
        sum = sum + BivariatePolynomial::separable(binomial_poly(Var::x, k),
                                                   binomial_poly(Var::y, n - k));
    }
    return sum;
}

BivariatePolynomial binomial_poly_x_plus_y(unsigned n) {
    return compose_x_plus_y(binomial_poly(Var::x, n));
}

VerificationReport verify_binomial_direct(unsigned n) {
    VerificationReport report("binomial", n);
    const Polynomial lhs = binomial_sum_poly(n);
    const Polynomial rhs = one_plus_x_pow(n);
    report.add_step("expansion-equality",
                    "sum_{k=0..n} C(n,k) x^k equals the full expansion of (1+x)^n",
                    lhs == rhs);
    return report;
}

VerificationReport verify_binomial_via_differences(unsigned n) {
    VerificationReport report("binomial", n);
    const GeometricTerm base(Polynomial::constant(Var::x, 1), Polynomial(Var::x, {0, -1}));

    const GeometricTerm ng = newton_gregory_geometric(base, n);
    report.add_step("newton-gregory-sum",
                    "n-th difference of (-x)^tau via the alternating Newton-Gregory sum: "
                    "ratio -x preserved, coefficient of degree n",
                    ng.ratio() == base.ratio() && ng.coefficient().degree() == n);

    const GeometricTerm closed = delta_geometric(base, n);
    report.add_step("closed-form",
                    "closed form of the n-th difference: coefficient (-x-1)^n of degree n "
                    "with leading coefficient (-1)^n",
                    closed.coefficient().degree() == n &&
                        closed.coefficient().leading_coefficient() == sign_pow(n));

    report.add_step("operator-equality",
                    "Newton-Gregory sum coefficient equals the closed form (-x-1)^n",
                    ng == closed);

    const Polynomial lhs = binomial_sum_poly(n);
    const Polynomial rhs = one_plus_x_pow(n);
    const Rational sign = sign_pow(n);
    report.add_step("division-bridge",
                    "dividing by (-1)^n (-x)^tau: the sum coefficient is (-1)^n times the "
                    "binomial sum and the closed form is (-1)^n times (1+x)^n",
                    ng.coefficient() == sign * lhs && closed.coefficient() == sign * rhs);
    return report;
}

VerificationReport verify_chu_vandermonde_direct(unsigned n) {
    VerificationReport report("chu-vandermonde", n);
    const BivariatePolynomial lhs = convolution_sum_bivariate(n);
    const BivariatePolynomial rhs = binomial_poly_x_plus_y(n);
    report.add_step("expansion-equality",
                    "sum_{k=0..n} C(x,k) C(y,n-k) equals the bivariate expansion of C(x+y,n)",
                    lhs == rhs);
    return report;
}

VerificationReport verify_chu_vandermonde_proof(unsigned n) {
    VerificationReport report("chu-vandermonde", n);
    if (n == 0) {
        // Both sides are the constant 1; the difference argument starts at n = 1.
        const bool equal = convolution_sum_bivariate(0) == binomial_poly_x_plus_y(0);
        report.add_step("base-case-direct",
                        "n = 0 base case: both sides expand to the constant 1", equal);
        if (equal) {
            report.set_theta(1);
        }
        return report;
    }

    const BivariatePolynomial conv = convolution_sum_bivariate(n);
    const BivariatePolynomial target = binomial_poly_x_plus_y(n);

    for (unsigned i = 1; i <= n; ++i) {
        // f(y) = C(y-i, n-i), a polynomial of degree n-i < n.
        const Polynomial f = poly_shift(binomial_poly(Var::y, n - i), Rational(-static_cast<long long>(i)));

        const Polynomial via_sum = delta_n_newton_gregory(f, n);
        const Polynomial via_repeat = delta_n_repeated(f, n);
        report.add_step(istep("vanishing-difference", i),
                        "n-th difference of C(y-i, n-i) vanishes (degree n-i < n): "
                        "Newton-Gregory sum and repeated-difference routes are both zero",
                        via_sum.is_zero() && via_repeat.is_zero());

        // x := i - y - 1.
        const Polynomial root(Var::y, {Rational(static_cast<long long>(i) - 1), Rational(-1)});
        const Polynomial conv_at_root = eval_at_x(conv, root);
        report.add_step(istep("root-substitution", i),
                        "substituting x := i-y-1 annihilates the convolution sum",
                        conv_at_root.is_zero());

        Polynomial bridge_sum(Var::y);
        for (unsigned k = 0; k <= n; ++k) {
            Rational weight(binom_int(n, k));
            if (k % 2 != 0) {
                weight = -weight;
            }
            bridge_sum = bridge_sum +
                         weight * poly_shift(binomial_poly(Var::y, n - i),
                                             Rational(static_cast<long long>(k) - static_cast<long long>(i)));
        }
        const Polynomial bridge_lhs = Rational(binom_int(n, i)) * conv_at_root;
        const Polynomial bridge_rhs = binomial_poly(Var::y, i) * bridge_sum;
        report.add_step(istep("scaled-bridge", i),
                        "C(n,i) * F(i-y-1) equals C(y,i) * sum_k (-1)^k C(n,k) C(y+k-i, n-i)",
                        bridge_lhs == bridge_rhs);

        report.add_step(istep("same-zeros", i),
                        "substituting x := i-y-1 annihilates C(x+y, n)",
                        eval_at_x(target, root).is_zero());
    }

    // theta from x = 0: both restrictions must reduce to C(y, n).
    const Polynomial zero_sub(Var::y);
    const Polynomial conv_at_zero = eval_at_x(conv, zero_sub);
    const Polynomial target_at_zero = eval_at_x(target, zero_sub);
    const Polynomial expected = binomial_poly(Var::y, n);
    const std::optional<Rational> theta = proportionality_constant(conv_at_zero, target_at_zero);
    if (theta) {
        report.set_theta(*theta);
    }
    report.add_step("theta-determination",
                    "at x = 0 both sides reduce to C(y,n), so the proportionality "
                    "constant theta equals 1",
                    conv_at_zero == expected && target_at_zero == expected &&
                        theta.has_value() && *theta == Rational(1));

    report.add_step("proportionality",
                    "the convolution sum equals theta * C(x+y, n) as bivariate polynomials",
                    theta.has_value() && conv == *theta * target);
    return report;
}

VerificationReport numeric_grid_check(Identity identity, unsigned n, unsigned bound) {
    if (bound == 0) {
        throw std::invalid_argument("numeric_grid_check: bound must be >= 1");
    }
    VerificationReport report(identity_name(identity), n);
    const long long b = static_cast<long long>(bound);

    if (identity == Identity::binomial) {
        bool all_equal = true;
        std::string failure;
        for (long long x0 = -b; x0 <= b; ++x0) {
            Rational lhs;
            Rational power = 1;
            for (unsigned k = 0; k <= n; ++k) {
                lhs += Rational(binom_int(n, k)) * power;
                power *= Rational(x0);
            }
            const Rational rhs = rational_pow(Rational(1 + x0), n);
            if (lhs != rhs) {
                all_equal = false;
                failure = " (first mismatch at x=" + std::to_string(x0) + ")";
                break;
            }
        }
        report.add_step("grid-agreement",
                        "sum_k C(n,k) x^k equals (1+x)^n at every integer x in [-" +
                            std::to_string(bound) + "," + std::to_string(bound) + "]" + failure,
                        all_equal);
        return report;
    }

    bool all_equal = true;
    std::string failure;
    const Polynomial rhs_poly = binomial_poly(Var::x, n);
    for (long long x0 = -b; x0 <= b && all_equal; ++x0) {
        for (long long y0 = -b; y0 <= b; ++y0) {
            Rational lhs;
            for (unsigned k = 0; k <= n; ++k) {
                lhs += eval(binomial_poly(Var::x, k), Rational(x0)) *
                       eval(binomial_poly(Var::y, n - k), Rational(y0));
            }
            const Rational rhs = eval(rhs_poly, Rational(x0 + y0));
            if (lhs != rhs) {
                all_equal = false;
                failure = " (first mismatch at x=" + std::to_string(x0) +
                          ", y=" + std::to_string(y0) + ")";
                break;
            }
        }
    }
    report.add_step("grid-agreement",
                    "sum_k C(x,k) C(y,n-k) equals C(x+y,n) at every integer pair in [-" +
                        std::to_string(bound) + "," + std::to_string(bound) + "]^2" + failure,
                    all_equal);
    return report;
}

}  // namespace fdcalc
