#include "fdcalc/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace fdcalc {

namespace {

const Rational kZero{};

void require_same_var(const Polynomial& p, const Polynomial& q, const char* op) {
    if (p.var() != q.var()) {
        throw std::invalid_argument(std::string(op) + ": mismatched variable tags " +
                                    var_name(p.var()) + " and " + var_name(q.var()));
    }
}

}  // namespace

const char* var_name(Var v) {
    return v == Var::x ? "x" : "y";
}

Polynomial::Polynomial(Var var, std::vector<Rational> coeffs)
    : var_(var), coeffs_(std::move(coeffs)) {
    normalize();
}

Polynomial Polynomial::constant(Var var, Rational value) {
    return Polynomial(var, {std::move(value)});
}

Polynomial Polynomial::monomial(Var var, unsigned degree, Rational coeff) {
    std::vector<Rational> c(degree + 1);
    c[degree] = std::move(coeff);
    return Polynomial(var, std::move(c));
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

std::optional<unsigned> Polynomial::degree() const {
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return static_cast<unsigned>(coeffs_.size() - 1);
}

const Rational& Polynomial::leading_coefficient() const {
    if (coeffs_.empty()) {
        throw std::logic_error("leading_coefficient: zero polynomial has none");
    }
    return coeffs_.back();
}

const Rational& Polynomial::coeff(unsigned k) const {
    if (k >= coeffs_.size()) {
        return kZero;
    }
    return coeffs_[k];
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    require_same_var(p, q, "poly_add");
    std::vector<Rational> c(std::max(p.coeffs().size(), q.coeffs().size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = p.coeff(static_cast<unsigned>(i)) + q.coeff(static_cast<unsigned>(i));
    }
    return Polynomial(p.var(), std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    return p + (-q);
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    require_same_var(p, q, "poly_mul");
    if (p.is_zero() || q.is_zero()) {
        return Polynomial(p.var());
    }
    std::vector<Rational> c(p.coeffs().size() + q.coeffs().size() - 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) {
            c[i + j] += p.coeffs()[i] * q.coeffs()[j];
        }
    }
    return Polynomial(p.var(), std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> c(p.coeffs());
    for (auto& v : c) {
        v *= s;
    }
    return Polynomial(p.var(), std::move(c));
}

Polynomial operator-(const Polynomial& p) {
    return Rational(-1) * p;
}

Polynomial poly_pow(const Polynomial& p, unsigned exponent) {
    Polynomial result = Polynomial::constant(p.var(), 1);
    for (unsigned i = 0; i < exponent; ++i) {
        result = result * p;
    }
    return result;
}

Polynomial poly_shift(const Polynomial& p, const Rational& c) {
    // Horner over the linear factor (v + c); exact and O(deg^2).
    const Polynomial linear(p.var(), {c, Rational(1)});
    Polynomial result(p.var());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        result = result * linear + Polynomial::constant(p.var(), p.coeffs()[i]);
    }
    return result;
}

Polynomial binomial_poly(Var var, unsigned k) {
    Polynomial product = Polynomial::constant(var, 1);
    for (unsigned t = 0; t < k; ++t) {
        product = product * Polynomial(var, {Rational(-static_cast<long long>(t)), Rational(1)});
    }
    return Rational(Integer(1), factorial(k)) * product;
}

Rational eval(const Polynomial& p, const Rational& a) {
    Rational result;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        result = result * a + p.coeffs()[i];
    }
    return result;
}

Polynomial substitute_affine(const Polynomial& p, const Polynomial& b) {
    if (b.degree().value_or(0) > 1) {
        throw std::invalid_argument("substitute_affine: substitution must be affine (degree <= 1)");
    }
    Polynomial result(b.var());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        result = result * b + Polynomial::constant(b.var(), p.coeffs()[i]);
    }
    return result;
}

std::vector<Rational> to_binomial_basis(const Polynomial& p) {
    if (p.is_zero()) {
        return {};
    }
    const unsigned d = *p.degree();
    std::vector<Rational> values(d + 1);
    for (unsigned j = 0; j <= d; ++j) {
        values[j] = eval(p, Rational(j));
    }
    // c_k = sum_{j<=k} (-1)^(k-j) C(k,j) p(j), the k-th forward difference at 0.
    std::vector<Rational> c(d + 1);
    for (unsigned k = 0; k <= d; ++k) {
        Rational sum;
        for (unsigned j = 0; j <= k; ++j) {
            Rational term = Rational(binom_int(k, j)) * values[j];
            sum += ((k - j) % 2 == 0) ? term : -term;
        }
        c[k] = sum;
    }
    return c;
}

Polynomial from_binomial_basis(Var var, const std::vector<Rational>& c) {
    Polynomial result(var);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c[k].is_zero()) {
            result = result + c[k] * binomial_poly(var, static_cast<unsigned>(k));
        }
    }
    return result;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

Integer parse_integer_token(std::string_view token, bool allow_sign, const char* what) {
    bool negative = false;
    if (allow_sign && !token.empty() && (token.front() == '+' || token.front() == '-')) {
        negative = token.front() == '-';
        token.remove_prefix(1);
    }
    if (token.empty()) {
        throw std::invalid_argument(std::string("polynomial literal: missing digits in ") + what);
    }
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument(std::string("polynomial literal: non-numeric ") + what +
                                        " '" + std::string(token) + "'");
        }
    }
    Integer value{std::string(token)};
    return negative ? Integer(-value) : value;
}

Rational parse_coefficient(std::string_view token) {
    token = trim(token);
    if (token.empty()) {
        throw std::invalid_argument("polynomial literal: empty coefficient token");
    }
    const auto slash = token.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer_token(token, true, "coefficient"));
    }
    Integer num = parse_integer_token(trim(token.substr(0, slash)), true, "numerator");
    Integer den = parse_integer_token(trim(token.substr(slash + 1)), false, "denominator");
    if (den.is_zero()) {
        throw std::invalid_argument("polynomial literal: zero denominator");
    }
    return Rational(std::move(num), std::move(den));
}

}  // namespace

Polynomial parse_poly_literal(std::string_view text, Var var) {
    if (trim(text).empty()) {
        return Polynomial(var);
    }
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = text.substr(start, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - start);
        coeffs.push_back(parse_coefficient(token));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return Polynomial(var, std::move(coeffs));
}

std::string poly_literal(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += p.coeffs()[i].to_string();
    }
    return out;
}

}  // namespace fdcalc
