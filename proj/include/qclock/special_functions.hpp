// special_functions.hpp -- the scalar special functions the clock module needs.
#pragma once

namespace qclock {

/// Upper incomplete gamma function of order zero,
///   Gamma(0, x) = E1(x) = int_x^inf z^-1 e^-z dz,   x > 0.
/// Power series below x = 1, modified Lentz continued fraction above.
double upper_gamma_zero(double x);

/// Trigamma psi'(x) for x > 0: upward recurrence until x >= 10, then the
/// Bernoulli asymptotic series. Relative error stays below 1e-10.
double trigamma(double x);

}  // namespace qclock
