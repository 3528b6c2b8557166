#include "qclock/special_functions.hpp"

#include <cmath>
#include <limits>

#include "qclock/errors.hpp"

namespace qclock {

namespace {
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr int kMaxIterations = 400;
}  // namespace

double upper_gamma_zero(double x) {
  if (!(x > 0.0)) {
    throw InvalidParameter("upper_gamma_zero: argument must be positive");
  }
  const double eps = std::numeric_limits<double>::epsilon();
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    double sum = 0.0;
    double power = 1.0;  // (-x)^k / k!
    for (int k = 1; k <= kMaxIterations; ++k) {
      power *= -x / k;
      const double term = -power / k;
      sum += term;
      if (std::abs(term) < eps * (std::abs(sum) + 1.0)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // Continued fraction e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...))),
  // evaluated with the modified Lentz scheme.
  const double tiny = std::numeric_limits<double>::min() / eps;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = a * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) <= eps) break;
  }
  return std::exp(-x) * h;
}

double trigamma(double x) {
  if (!(x > 0.0)) {
    throw InvalidParameter("trigamma: argument must be positive");
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  // psi'(x) ~ 1/x + 1/(2x^2) + sum_k B_{2k} / x^{2k+1}
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double bernoulli =
      1.0 / 6.0 +
      inv2 * (-1.0 / 30.0 +
              inv2 * (1.0 / 42.0 +
                      inv2 * (-1.0 / 30.0 +
                              inv2 * (5.0 / 66.0 + inv2 * (-691.0 / 2730.0)))));
  return acc + inv + 0.5 * inv2 + inv * inv2 * bernoulli;
}

}  // namespace qclock
