#pragma once

#include <functional>

namespace cclab {

/// Lower regularized incomplete gamma P(a, x) via the classic series /
/// continued-fraction split.
double regularized_gamma_p(double a, double x);

/// Quantile of the chi-square distribution with `dof` degrees of freedom:
/// the x with P(dof/2, x/2) = prob. Bisection; good to ~1e-10 relative.
double chi2_quantile(double prob, double dof);

/// Adaptive Simpson quadrature of f on [a, b] to absolute tolerance tol.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double tol);

} // namespace cclab
