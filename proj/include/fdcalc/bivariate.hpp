#pragma once

#include "fdcalc/polynomial.hpp"

#include <optional>
#include <vector>

namespace fdcalc {

/// Polynomial in x whose coefficients are Polynomials in y, ascending in
/// x-degree. x is always the outer variable, so equality is structural.
///
/// Invariant: the top x-coefficient is a nonzero Polynomial and every
/// entry is normalized; the zero value is the empty vector.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;
    /// Entries must carry Var::y; throws std::invalid_argument otherwise.
    explicit BivariatePolynomial(std::vector<Polynomial> coeffs_in_x);

    static BivariatePolynomial constant(Rational value);
    /// px(x) * py(y) as a bivariate value.
    static BivariatePolynomial separable(const Polynomial& px, const Polynomial& py);
    /// The bivariate x + y.
    static BivariatePolynomial x_plus_y();

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<unsigned> degree_in_x() const;

    /// y-polynomial coefficient of x^j; the zero polynomial beyond the degree.
    const Polynomial& coeff(unsigned j) const;
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

private:
    void normalize();

    std::vector<Polynomial> coeffs_;
};

BivariatePolynomial operator+(const BivariatePolynomial& f, const BivariatePolynomial& g);
BivariatePolynomial operator*(const BivariatePolynomial& f, const BivariatePolynomial& g);
BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& f);
BivariatePolynomial operator-(const BivariatePolynomial& f);

/// p(x + y) for univariate p in x, expanded to canonical bivariate form.
BivariatePolynomial compose_x_plus_y(const Polynomial& p);

/// Substitute x := s(y); Horner over y-polynomials. s must carry Var::y.
Polynomial eval_at_x(const BivariatePolynomial& f, const Polynomial& s);

/// Exact evaluation at x = a, y = b.
Rational eval2(const BivariatePolynomial& f, const Rational& a, const Rational& b);

}  // namespace fdcalc
