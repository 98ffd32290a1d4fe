#include "fdcalc/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace fdcalc {

Integer factorial(unsigned m) {
    Integer result = 1;
    for (unsigned i = 2; i <= m; ++i) {
        result *= i;
    }
    return result;
}

Integer binom_int(unsigned n, unsigned k) {
    if (k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    // Running product C(n-k+j, j) stays integral at every step.
    Integer result = 1;
    for (unsigned j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;
    }
    return result;
}

Rational::Rational(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) {
        throw std::domain_error("Rational: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string Rational::to_string() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

Rational Rational::operator-() const {
    Rational result;
    result.num_ = -num_;
    result.den_ = den_;
    return result;
}

bool Rational::is_normalized() const {
    if (den_ <= 0) {
        return false;
    }
    if (num_.is_zero()) {
        return den_ == 1;
    }
    return boost::multiprecision::gcd(num_, den_) == 1;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
    Rational result = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

}  // namespace fdcalc
