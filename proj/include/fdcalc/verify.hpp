#pragma once

#include "fdcalc/bivariate.hpp"
#include "fdcalc/difference.hpp"
#include "fdcalc/exact.hpp"
#include "fdcalc/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fdcalc {

struct VerificationStep {
    std::string id;
    std::string description;
    bool passed = false;
};

/// Structured record of one verification run. The overall flag is always
/// the conjunction of the step flags; theta is set only by the
/// Chu-Vandermonde routes and equals 1 whenever the proof succeeds.
class VerificationReport {
public:
    VerificationReport(std::string identity, unsigned n)
        : identity_(std::move(identity)), n_(n) {}

    void add_step(std::string id, std::string description, bool passed);
    void set_theta(Rational theta) { theta_ = std::move(theta); }

    /// Appends another report's steps under an id prefix, carrying over
    /// theta when present. Used to combine verification routes.
    void absorb(const VerificationReport& other, const std::string& id_prefix);

    const std::string& identity() const { return identity_; }
    unsigned n() const { return n_; }
    const std::vector<VerificationStep>& steps() const { return steps_; }
    const std::optional<Rational>& theta() const { return theta_; }

    /// Conjunction of all step flags.
    bool overall() const;

private:
    std::string identity_;
    unsigned n_;
    std::vector<VerificationStep> steps_;
    std::optional<Rational> theta_;
};

enum class Identity { binomial, chu_vandermonde };

const char* identity_name(Identity identity);

/// sum_{k=0..n} C(n,k) x^k, the binomial-theorem left side.
Polynomial binomial_sum_poly(unsigned n);

/// (1 + x)^n by repeated multiplication.
Polynomial one_plus_x_pow(unsigned n);

/// F(x, y) = sum_{k=0..n} C(x,k) C(y,n-k), the convolution left side.
BivariatePolynomial convolution_sum_bivariate(unsigned n);

/// C(x+y, n) in canonical bivariate form.
BivariatePolynomial binomial_poly_x_plus_y(unsigned n);

/// Binomial theorem by structural comparison of both expansions.
VerificationReport verify_binomial_direct(unsigned n);

/// Binomial theorem by differencing (-x)^tau: the Newton-Gregory sum
/// against the closed form, then the division bridge back to the
/// identity itself.
VerificationReport verify_binomial_via_differences(unsigned n);

/// Chu-Vandermonde convolution by structural comparison of both
/// bivariate expansions.
VerificationReport verify_chu_vandermonde_direct(unsigned n);

/// Chu-Vandermonde convolution replaying the finite-difference proof:
/// vanishing n-th differences, the root substitutions x := i-y-1, the
/// scaled bridge identity, and the determination of theta at x = 0.
/// n = 0 falls back to the direct expansion check.
VerificationReport verify_chu_vandermonde_proof(unsigned n);

/// Brute-force oracle: evaluates both sides of the chosen identity at
/// every integer point of [-bound, bound] (squared grid for the
/// convolution) and demands exact equality. Throws std::invalid_argument
/// when bound = 0.
VerificationReport numeric_grid_check(Identity identity, unsigned n, unsigned bound);

}  // namespace fdcalc
