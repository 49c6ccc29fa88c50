#pragma once

namespace fockbench {

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in [0,1].
/// Continued fraction (modified Lentz), switched to the symmetric form
/// I_x(a,b) = 1 - I_{1-x}(b,a) where it converges faster.
double incomplete_beta(double a, double b, double x);

/// Student t cumulative distribution with df > 0 degrees of freedom.
double student_t_cdf(double t, double df);

/// Two-sided tail probability P(|T| >= |t|). Computed from the incomplete
/// beta directly, so small p-values keep their relative precision.
double student_t_two_sided(double t, double df);

/// Inverse of student_t_cdf for p in (0,1).
double student_t_quantile(double p, double df);

}  // namespace fockbench
