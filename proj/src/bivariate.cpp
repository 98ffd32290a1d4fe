#include "fdcalc/bivariate.hpp"

#include <stdexcept>
#include <utility>

namespace fdcalc {

namespace {

const Polynomial kZeroY{Var::y};

}  // namespace

BivariatePolynomial::BivariatePolynomial(std::vector<Polynomial> coeffs_in_x)
    : coeffs_(std::move(coeffs_in_x)) {
    for (const auto& c : coeffs_) {
        if (c.var() != Var::y) {
            throw std::invalid_argument("BivariatePolynomial: x-coefficients must be polynomials in y");
        }
    }
    normalize();
}

void BivariatePolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

BivariatePolynomial BivariatePolynomial::constant(Rational value) {
    return BivariatePolynomial({Polynomial::constant(Var::y, std::move(value))});
}

BivariatePolynomial BivariatePolynomial::separable(const Polynomial& px, const Polynomial& py) {
    if (px.var() != Var::x || py.var() != Var::y) {
        throw std::invalid_argument("separable: expected an x-polynomial and a y-polynomial");
    }
    std::vector<Polynomial> c;
    c.reserve(px.coeffs().size());
    for (const auto& a : px.coeffs()) {
        c.push_back(a * py);
    }
    return BivariatePolynomial(std::move(c));
}

BivariatePolynomial BivariatePolynomial::x_plus_y() {
    return BivariatePolynomial({Polynomial(Var::y, {0, 1}), Polynomial::constant(Var::y, 1)});
}

std::optional<unsigned> BivariatePolynomial::degree_in_x() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return static_cast<unsigned>(coeffs_.size() - 1);
}

const Polynomial& BivariatePolynomial::coeff(unsigned j) const {
    if (j >= coeffs_.size()) {
        return kZeroY;
    }
    return coeffs_[j];
}

BivariatePolynomial operator+(const BivariatePolynomial& f, const BivariatePolynomial& g) {
    std::vector<Polynomial> c(std::max(f.coeffs().size(), g.coeffs().size()), Polynomial(Var::y));
    for (std::size_t j = 0; j < c.size(); ++j) {
        c[j] = f.coeff(static_cast<unsigned>(j)) + g.coeff(static_cast<unsigned>(j));
    }
    return BivariatePolynomial(std::move(c));
}

BivariatePolynomial operator*(const BivariatePolynomial& f, const BivariatePolynomial& g) {
    if (f.is_zero() || g.is_zero()) {
        return {};
    }
    std::vector<Polynomial> c(f.coeffs().size() + g.coeffs().size() - 1, Polynomial(Var::y));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
            c[i + j] = c[i + j] + f.coeffs()[i] * g.coeffs()[j];
        }
    }
    return BivariatePolynomial(std::move(c));
}

BivariatePolynomial operator*(const Rational& s, const BivariatePolynomial& f) {
    std::vector<Polynomial> c;
    c.reserve(f.coeffs().size());
    for (const auto& p : f.coeffs()) {
        c.push_back(s * p);
    }
    return BivariatePolynomial(std::move(c));
}

BivariatePolynomial operator-(const BivariatePolynomial& f) {
    return Rational(-1) * f;
}

BivariatePolynomial compose_x_plus_y(const Polynomial& p) {
    if (p.var() != Var::x) {
        throw std::invalid_argument("compose_x_plus_y: expected a polynomial in x");
    }
    const BivariatePolynomial sum = BivariatePolynomial::x_plus_y();
    BivariatePolynomial result;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        result = result * sum + BivariatePolynomial::constant(p.coeffs()[i]);
    }
    return result;
}

Polynomial eval_at_x(const BivariatePolynomial& f, const Polynomial& s) {
    if (s.var() != Var::y) {
        throw std::invalid_argument("eval_at_x: substitution value must be a polynomial in y");
    }
    Polynomial result(Var::y);
    for (std::size_t j = f.coeffs().size(); j-- > 0;) {
        result = result * s + f.coeffs()[j];
    }
    return result;
}

Rational eval2(const BivariatePolynomial& f, const Rational& a, const Rational& b) {
    Rational result;
    for (std::size_t j = f.coeffs().size(); j-- > 0;) {
        result = result * a + eval(f.coeffs()[j], b);
    }
    return result;
}

}  // namespace fdcalc
