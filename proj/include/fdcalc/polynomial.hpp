#pragma once

#include "fdcalc/exact.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdcalc {

/// Indeterminate tag. Univariate arithmetic refuses to mix tags.
enum class Var { x, y };

const char* var_name(Var v);

/// Dense univariate polynomial over Rational, coefficients in ascending
/// degree order.
///
/// Invariant: no trailing zero coefficient. The zero polynomial is the
/// empty coefficient vector; it has no degree and no leading coefficient.
class Polynomial {
public:
    explicit Polynomial(Var var = Var::x) : var_(var) {}
    Polynomial(Var var, std::vector<Rational> coeffs);

    static Polynomial constant(Var var, Rational value);
    static Polynomial monomial(Var var, unsigned degree, Rational coeff = 1);

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Degree, or nullopt for the zero polynomial.
    std::optional<unsigned> degree() const;

    /// Throws std::logic_error when queried on the zero polynomial.
    const Rational& leading_coefficient() const;

    /// Coefficient of var^k; zero beyond the degree.
    const Rational& coeff(unsigned k) const;

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void normalize();

    Var var_;
    std::vector<Rational> coeffs_;
};

/// Coefficient-wise sum/difference; throws std::invalid_argument on
/// mismatched variable tags.
Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);

/// Exact convolution product; throws std::invalid_argument on mismatched
/// variable tags.
Polynomial operator*(const Polynomial& p, const Polynomial& q);

Polynomial operator*(const Rational& s, const Polynomial& p);
Polynomial operator-(const Polynomial& p);

Polynomial poly_pow(const Polynomial& p, unsigned exponent);

/// q with q(v) = p(v + c), computed exactly.
Polynomial poly_shift(const Polynomial& p, const Rational& c);

/// Generalized binomial polynomial C(var, k) = var(var-1)...(var-k+1)/k!,
/// degree k with leading coefficient 1/k!.
Polynomial binomial_poly(Var var, unsigned k);

/// Exact Horner evaluation.
Rational eval(const Polynomial& p, const Rational& a);

/// Composition p(b(.)) for affine b (degree <= 1); the result lives in
/// b's variable. Throws std::invalid_argument when deg b > 1.
Polynomial substitute_affine(const Polynomial& p, const Polynomial& b);

/// Coefficients c with p = sum_k c_k C(var, k); c_k is the k-th forward
/// difference of p at 0. Empty for the zero polynomial.
std::vector<Rational> to_binomial_basis(const Polynomial& p);

/// Inverse of to_binomial_basis: sum_k c_k C(var, k).
Polynomial from_binomial_basis(Var var, const std::vector<Rational>& c);

/// Text literal: comma-separated coefficients ascending in degree, each
/// an optionally signed integer or p/q fraction ("1,-3/2" is 1 - (3/2)x).
/// Whitespace around tokens is ignored; the empty string is the zero
/// polynomial. Throws std::invalid_argument on malformed input.
Polynomial parse_poly_literal(std::string_view text, Var var = Var::x);

/// Inverse rendering; the zero polynomial prints as "0".
std::string poly_literal(const Polynomial& p);

}  // namespace fdcalc
