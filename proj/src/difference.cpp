#include "fdcalc/difference.hpp"

#include <stdexcept>
#include <utility>

namespace fdcalc {

Polynomial delta(const Polynomial& p) {
    return poly_shift(p, 1) - p;
}

Polynomial delta_n_repeated(const Polynomial& p, unsigned n) {
    Polynomial result = p;
    for (unsigned i = 0; i < n; ++i) {
        result = delta(result);
    }
    return result;
}

Polynomial delta_n_newton_gregory(const Polynomial& p, unsigned n) {
    Polynomial sum(p.var());
    for (unsigned k = 0; k <= n; ++k) {
        Rational weight(binom_int(n, k));
        if ((n + k) % 2 != 0) {
            weight = -weight;
        }
        sum = sum + weight * poly_shift(p, Rational(k));
    }
    return sum;
}

GeometricTerm::GeometricTerm(Polynomial coefficient, Polynomial ratio)
    : coeff_(std::move(coefficient)), ratio_(std::move(ratio)) {
    if (coeff_.var() != ratio_.var()) {
        throw std::invalid_argument("GeometricTerm: coefficient and ratio must share a variable");
    }
    if (coeff_.is_zero()) {
        ratio_ = Polynomial(ratio_.var());
    }
}

GeometricTerm delta_geometric(const GeometricTerm& g, unsigned n) {
    if (g.is_zero()) {
        return g;
    }
    const Polynomial one = Polynomial::constant(g.var(), 1);
    return GeometricTerm(g.coefficient() * poly_pow(g.ratio() - one, n), g.ratio());
}

GeometricTerm newton_gregory_geometric(const GeometricTerm& g, unsigned n) {
    if (g.is_zero()) {
        return g;
    }
    Polynomial sum(g.var());
    Polynomial ratio_power = Polynomial::constant(g.var(), 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational weight(binom_int(n, k));
        if ((n + k) % 2 != 0) {
            weight = -weight;
        }
        sum = sum + weight * ratio_power;
        ratio_power = ratio_power * g.ratio();
    }
    return GeometricTerm(g.coefficient() * sum, g.ratio());
}

Rational eval_geometric(const GeometricTerm& g, const Rational& x0, unsigned t) {
    if (g.is_zero()) {
        return 0;
    }
    const Rational r0 = eval(g.ratio(), x0);
    if (r0.is_zero()) {
        throw std::domain_error("eval_geometric: ratio vanishes at the evaluation point");
    }
    return eval(g.coefficient(), x0) * rational_pow(r0, t);
}

DifferenceTable::DifferenceTable(const std::vector<Rational>& values) {
    if (values.empty()) {
        throw std::invalid_argument("DifferenceTable: empty value sequence");
    }
    rows_.push_back(values);
    while (rows_.back().size() > 1) {
        const auto& prev = rows_.back();
        std::vector<Rational> next(prev.size() - 1);
        for (std::size_t t = 0; t + 1 < prev.size(); ++t) {
            next[t] = prev[t + 1] - prev[t];
        }
        rows_.push_back(std::move(next));
    }
}

DifferenceTable difference_table(const std::vector<Rational>& values) {
    return DifferenceTable(values);
}

Polynomial newton_series(const Polynomial& p) {
    if (p.is_zero()) {
        return p;
    }
    const unsigned d = *p.degree();
    std::vector<Rational> samples(d + 1);
    for (unsigned j = 0; j <= d; ++j) {
        samples[j] = eval(p, Rational(j));
    }
    const DifferenceTable table(samples);
    std::vector<Rational> diagonal(d + 1);
    for (unsigned k = 0; k <= d; ++k) {
        diagonal[k] = table.row(k).front();
    }
    return from_binomial_basis(p.var(), diagonal);
}

}  // namespace fdcalc
