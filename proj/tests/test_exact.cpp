#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdcalc/exact.hpp"

#include <random>
#include <vector>

using fdcalc::binom_int;
using fdcalc::factorial;
using fdcalc::Integer;
using fdcalc::Rational;

namespace {

// Pascal-recurrence oracle: row n of the triangle built from
// C(n,k) = C(n-1,k-1) + C(n-1,k).
std::vector<Integer> pascal_row(unsigned n) {
    std::vector<Integer> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Integer> next(i + 1);
        next[0] = 1;
        next[i] = 1;
        for (unsigned k = 1; k < i; ++k) {
            next[k] = row[k - 1] + row[k];
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

TEST_CASE("binom_int small values") {
    CHECK(binom_int(4, 2) == 6);
    CHECK(binom_int(0, 0) == 1);
    for (unsigned n : {0u, 1u, 7u, 30u, 64u}) {
        CHECK(binom_int(n, 0) == 1);
    }
}

TEST_CASE("binom_int is zero above the diagonal") {
    CHECK(binom_int(3, 4) == 0);
    CHECK(binom_int(0, 1) == 0);
    CHECK(binom_int(12, 24) == 0);
}

TEST_CASE("binom_int agrees with the Pascal-recurrence oracle at (30,15)") {
    const auto row = pascal_row(30);
    CHECK(binom_int(30, 15) == row[15]);
    // Frozen from the oracle.
    CHECK(binom_int(30, 15) == Integer("155117520"));
}

TEST_CASE("binom_int matches Pascal rows up to 30") {
    for (unsigned n = 0; n <= 30; ++n) {
        const auto row = pascal_row(n);
        for (unsigned k = 0; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(binom_int(n, k) == row[k]);
        }
    }
}

TEST_CASE("binomial symmetry and addition identities") {
    for (unsigned n = 1; n <= 40; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(binom_int(n, k) == binom_int(n, n - k));
        }
        for (unsigned k = 1; k < n; ++k) {
            CHECK(binom_int(n, k) == binom_int(n - 1, k - 1) + binom_int(n - 1, k));
        }
    }
}

TEST_CASE("binomial row sums are powers of two") {
    for (unsigned n = 0; n <= 30; ++n) {
        Integer sum = 0;
        for (unsigned k = 0; k <= n; ++k) {
            sum += binom_int(n, k);
        }
        // Oracle: 2^n by repeated doubling.
        Integer power = 1;
        for (unsigned i = 0; i < n; ++i) {
            power *= 2;
        }
        CHECK(sum == power);
    }
}

TEST_CASE("factorial small values and iterated-product oracle") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);

    Integer product = 1;
    for (unsigned i = 1; i <= 20; ++i) {
        product *= i;
    }
    CHECK(factorial(20) == product);
    CHECK(factorial(20) == Integer("2432902008176640000"));
}

TEST_CASE("rational construction normalizes eagerly") {
    const Rational half(Integer(2), Integer(4));
    CHECK(half.num() == 1);
    CHECK(half.den() == 2);

    const Rational negative(Integer(3), Integer(-6));
    CHECK(negative.num() == -1);
    CHECK(negative.den() == 2);

    const Rational zero(Integer(0), Integer(-7));
    CHECK(zero.num() == 0);
    CHECK(zero.den() == 1);
    CHECK(zero == Rational(0));

    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST_CASE("rational arithmetic stays normalized") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> num_dist(-99, 99);
    std::uniform_int_distribution<long long> den_dist(1, 99);

    for (int trial = 0; trial < 500; ++trial) {
        const Rational a(Integer(num_dist(rng)), Integer(den_dist(rng)));
        const Rational b(Integer(num_dist(rng)), Integer(den_dist(rng)));
        CHECK(a.is_normalized());
        CHECK((a + b).is_normalized());
        CHECK((a - b).is_normalized());
        CHECK((a * b).is_normalized());
        if (!b.is_zero()) {
            CHECK((a / b).is_normalized());
        }
        CHECK((-a).is_normalized());
    }
}

TEST_CASE("rational field identities") {
    const Rational a(Integer(3), Integer(7));
    const Rational b(Integer(-5), Integer(2));
    CHECK(a + b == Rational(Integer(-29), Integer(14)));
    CHECK(a * b == Rational(Integer(-15), Integer(14)));
    CHECK(a - a == Rational(0));
    CHECK(a / a == Rational(1));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational rendering") {
    CHECK(Rational(1).to_string() == "1");
    CHECK(Rational(Integer(-3), Integer(2)).to_string() == "-3/2");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(Integer(10), Integer(-4)).to_string() == "-5/2");
}

TEST_CASE("rational_pow") {
    CHECK(fdcalc::rational_pow(Rational(2), 10) == Rational(1024));
    CHECK(fdcalc::rational_pow(Rational(Integer(-1), Integer(2)), 3) ==
          Rational(Integer(-1), Integer(8)));
    CHECK(fdcalc::rational_pow(Rational(0), 0) == Rational(1));
}
