#pragma once

#include <functional>

namespace quatdom {

/// Result of an adaptive quadrature: the value, a conservative bound on the
/// absolute error (difference of the last two refinement levels), and the
/// number of integrand evaluations spent.
struct QuadResult {
    double value = 0.0;
    double abs_error_bound = 0.0;
    long evaluations = 0;
};

/// Integral over the finite interval (a, b) by tanh-sinh (double-exponential)
/// refinement. Endpoint algebraic singularities with exponent > -1 are
/// handled without special casing.
QuadResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                            double abs_tol);

/// Integral over the whole real line: the tangent substitution x = tan(theta)
/// folds the line onto (-pi/2, pi/2), then tanh-sinh handles the endpoint
/// behavior of slowly decaying integrands.
QuadResult integrate_real_line(const std::function<double(double)>& f, double abs_tol);

/// Iterated 2-D integral of f(x, y) over a <= x <= b, y_lo(x) <= y <= y_hi(x);
/// the inner integrals run at a tighter tolerance than the outer one.
QuadResult integrate_2d(const std::function<double(double, double)>& f, double a, double b,
                        const std::function<double(double)>& y_lo,
                        const std::function<double(double)>& y_hi, double abs_tol);

}  // namespace quatdom
