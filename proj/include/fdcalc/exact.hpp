#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace fdcalc {

/// Arbitrary-precision signed integer. Holds every index and
/// combinatorial value exactly; zero has a single representation.
using Integer = boost::multiprecision::cpp_int;

/// m! by iterated product.
Integer factorial(unsigned m);

/// Binomial coefficient C(n, k). Returns 0 when k > n so callers can
/// iterate k over 0..n without boundary guards.
Integer binom_int(unsigned n, unsigned k);

/// Exact rational number over Integer.
///
/// Normalized eagerly on construction and after every operation:
/// denominator > 0, gcd(|numerator|, denominator) = 1, and zero is 0/1.
/// Equality is therefore plain structural comparison.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}
    Rational(Integer value) : num_(std::move(value)) {}
    /// Throws std::domain_error when denominator is zero.
    Rational(Integer numerator, Integer denominator);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    Rational operator-() const;

    friend bool operator==(const Rational&, const Rational&) = default;

    /// Representation invariant check, used by the test suites.
    bool is_normalized() const;

private:
    void normalize();

    Integer num_{0};
    Integer den_{1};
};

/// base^exponent by repeated multiplication; exact.
Rational rational_pow(const Rational& base, unsigned exponent);

}  // namespace fdcalc
