#pragma once

#include <optional>

#include "json.hpp"
#include "quatdom/closed_forms.hpp"
#include "quatdom/quadrature.hpp"
#include "quatdom/quaternion.hpp"

namespace quatdom {

/// A quadrature oracle value next to the closed form it checks.
struct OracleCheck {
    QuadResult quad;
    double target = 0.0;

    double rel_error() const;
};

/// Integral of (1 - r^2)^(mu-1) over the unit 4m-ball, by radial quadrature
/// with the exact surface factor; target pi^(2m) Gamma(mu) / Gamma(mu + 2m).
OracleCheck ball_integral_oracle(long m, double mu, double abs_tol = 1e-12);

/// Integral of (a x^2 + 2 b x + c)^(-alpha) over the real line; requires
/// a > 0, ac - b^2 > 0, alpha > 1/2.
OracleCheck line_quadratic_decay_oracle(double a, double b, double c, double alpha,
                          double abs_tol = 1e-12);

/// 4-D integral of (c + b conj(q) + q conj(b) + a q conj(q))^lambda over its
/// positivity region (a 4-ball around -b/a when a < 0), via the radial
/// reduction; requires a < 0, |b|^2 - ac > 0, lambda > -1.
OracleCheck quaternion_quadratic_ball_oracle(double a, const Quaternion& b, double c, double lambda,
                          double abs_tol = 1e-12);

/// 2-D integral of (a^2 - x^2 - y^2)^b x^(2b+1) y^(2b+1) over the quarter
/// disk, plus the constant it fits against the closed-form bracket that the
/// printed formula leaves with an unresolved power-of-two denominator.
struct QuarterDiskResult {
    QuadResult quad;
    double bracket = 0.0;          // a^(6b+4) sqrt(pi) G(b+1)^2 G(2b+2) / (G(b+3/2) G(3b+3))
    double fitted_constant = 0.0;  // quad / bracket
};

QuarterDiskResult quarter_disk_power_oracle(double a, double b, double abs_tol = 1e-11);

/// Radial quadrature of (1 - r^2)^lambda 4 pi r^2 over the unit 3-ball, the
/// n = 1 instance of the anti-Hermitian domain (|q| < 1 with zero real part).
QuadResult anti_hermitian_n1_oracle(double lambda, double abs_tol = 1e-12);

/// The n = 2 Hermitian decay integral det(I + Q^2)^(-alpha) over the plain
/// product measure (dx dh d^4v for Q = [[x, conj(v)], [v, h]]), reduced to a
/// 3-D iterated quadrature through the eigenvalues of Q. Deterministic
/// arbiter for the closed form's leading power-of-two factor.
QuadResult hermitian_decay_n2_oracle(double alpha, double rel_tol = 1e-6);

/// The fourth-domain closed form recomputed independently of the terminating
/// hypergeometric algebra: 2-D quadrature of the reduced two-variable
/// integrand, scaled by the derivation's exact prefactor chain. Target is
/// eval_L_four. n >= 2.
OracleCheck fourth_domain_reduction_oracle(long n, const Rational& alpha, const Rational& beta,
                              double abs_tol = 1e-11);

/// Exact-arithmetic check that a printed closed form satisfies its own
/// recursion: value(n, param) == coeff(n, param) * value(n-1, shifted param).
struct RecursionCheckReport {
    FamilyTag family;
    long n;
    Rational param;
    struct RouteCheck {
        FormulaSource source;
        bool exact_match;
        ExactValue lhs;    // value at (n, param)
        ExactValue rhs;    // coeff * value at (n-1, shifted)
        ExactValue ratio;  // lhs / rhs; the exact mismatch factor
    };
    std::vector<RouteCheck> routes;

    /// The printed route(s) that satisfy the recursion, comma separated.
    std::string matching_sources() const;
};

RecursionCheckReport recursion_check(FamilyTag family, long n, const Rational& param);

/// Optional Monte Carlo results folded into the discrepancy report when the
/// caller has spent the samples (the acceptance suite does; the CLI only on
/// request).
struct DiscrepancyMCInputs {
    std::optional<double> riv2_volume_mean;  // fourth domain, n = 2
    std::optional<double> riv2_volume_std_error;
    std::optional<double> riv3_volume_mean;  // fourth domain, n = 3 adjudication
    std::optional<double> riv3_volume_std_error;
    std::optional<double> h2_mean;  // Hermitian decay integral, n = 2, alpha = 6
    std::optional<double> h2_std_error;
};

/// The machine-readable adjudication of every flagged internal inconsistency:
/// array of {claim_id, paper_location, variant_values, oracle_value, ratio,
/// verdict}. Deterministic given the inputs.
nlohmann::ordered_json build_discrepancy_report(const DiscrepancyMCInputs& mc = {});

void write_discrepancy_report(const std::string& path, const DiscrepancyMCInputs& mc = {});

}  // namespace quatdom
