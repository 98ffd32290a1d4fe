#pragma once

#include "fdcalc/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace fdcalc {

/// Forward difference with unit increment: p(v + 1) - p(v). Drops the
/// degree by exactly one on nonconstant input.
Polynomial delta(const Polynomial& p);

/// n-fold application of delta; n = 0 is the identity.
Polynomial delta_n_repeated(const Polynomial& p, unsigned n);

/// The same operator through the alternating Newton-Gregory sum
/// sum_{k=0..n} (-1)^(n+k) C(n,k) p(v + k). Each shift is computed
/// independently; n is small everywhere this is used.
Polynomial delta_n_newton_gregory(const Polynomial& p, unsigned n);

/// Closed form c(v) * r(v)^tau with polynomial coefficient and ratio.
/// tau is a formal exponent, never materialized as an algebraic
/// variable; the difference operator acts on the (c, r) pair.
///
/// Normalized: c = 0 forces the canonical zero term (c = 0, r = 0).
class GeometricTerm {
public:
    GeometricTerm() : coeff_(Var::x), ratio_(Var::x) {}
    /// c and r must share a variable tag; throws std::invalid_argument.
    GeometricTerm(Polynomial coefficient, Polynomial ratio);

    const Polynomial& coefficient() const { return coeff_; }
    const Polynomial& ratio() const { return ratio_; }
    Var var() const { return coeff_.var(); }
    bool is_zero() const { return coeff_.is_zero(); }

    friend bool operator==(const GeometricTerm&, const GeometricTerm&) = default;

private:
    Polynomial coeff_;
    Polynomial ratio_;
};

/// delta^n [c r^tau] = c (r - 1)^n r^tau.
GeometricTerm delta_geometric(const GeometricTerm& g, unsigned n);

/// The Newton-Gregory sum with r^tau factored out: coefficient becomes
/// c * sum_{k=0..n} (-1)^(n+k) C(n,k) r^k, ratio unchanged. Agrees with
/// delta_geometric on every input.
GeometricTerm newton_gregory_geometric(const GeometricTerm& g, unsigned n);

/// Pointwise value c(x0) * r(x0)^t. Throws std::domain_error when
/// r(x0) = 0 (the sequence 0^t has no value at t = 0).
Rational eval_geometric(const GeometricTerm& g, const Rational& x0, unsigned t);

/// Forward-difference triangle. Row 0 holds the samples; row j the
/// differences of row j-1, so row j of an (m+1)-sample table has
/// length m+1-j.
class DifferenceTable {
public:
    /// Throws std::invalid_argument on empty input.
    explicit DifferenceTable(const std::vector<Rational>& values);

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }
    const std::vector<Rational>& row(std::size_t j) const { return rows_.at(j); }

private:
    std::vector<std::vector<Rational>> rows_;
};

DifferenceTable difference_table(const std::vector<Rational>& values);

/// Reconstructs p from the diagonal of its difference table at 0:
/// p = sum_k delta^k p(0) * C(var, k). Structurally equal to p.
Polynomial newton_series(const Polynomial& p);

}  // namespace fdcalc
