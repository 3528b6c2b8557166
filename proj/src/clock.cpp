#include "qclock/clock.hpp"

#include <cmath>
#include <limits>

#include "qclock/special_functions.hpp"

namespace qclock {

namespace {

// Marsaglia-Tsang (2000). Requires shape >= 1; callers boost smaller shapes.
double sample_gamma_shape_ge_one(double shape, RandomStream& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// Unit-rate gamma variate for any shape > 0.
double sample_gamma(double shape, RandomStream& rng) {
  if (shape >= 1.0) return sample_gamma_shape_ge_one(shape, rng);
  // Boosting transform: X(a) = X(a+1) * U^(1/a). The exponential form keeps
  // the graceful underflow to zero that tiny shapes genuinely produce.
  const double boosted = sample_gamma_shape_ge_one(shape + 1.0, rng);
  return boosted * std::exp(std::log(rng.uniform()) / shape);
}

// Michael-Schucany-Haas transform for IG(mean mu, shape lam).
double sample_inverse_gaussian(double mu, double lam, RandomStream& rng) {
  const double n = rng.normal();
  const double v = n * n;
  const double w =
      mu + (mu * mu * v) / (2.0 * lam) -
      (mu / (2.0 * lam)) * std::sqrt(4.0 * mu * lam * v + mu * mu * v * v);
  const double root = (w > 0.0) ? w : 0.0;  // w can round below zero for v ~ 0
  if (rng.uniform() <= mu / (mu + root)) return root;
  return (root > 0.0) ? mu * mu / root : std::numeric_limits<double>::infinity();
}

}  // namespace

ClockModel::ClockModel(ClockKind kind, double kappa)
    : kind_(kind), kappa_(kappa), lambda_(1.0 / kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw InvalidParameter("ClockModel: kappa must be positive and finite");
  }
}

ClockModel ClockModel::gamma(double kappa) {
  return ClockModel(ClockKind::Gamma, kappa);
}

ClockModel ClockModel::inverse_gaussian(double kappa) {
  return ClockModel(ClockKind::InverseGaussian, kappa);
}

ClockModel ClockModel::from_lambda(ClockKind kind, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw InvalidParameter("ClockModel: lambda must be positive and finite");
  }
  return ClockModel(kind, 1.0 / lambda);
}

double sample_increment(const ClockModel& model, double dt, RandomStream& rng) {
  if (!(dt > 0.0)) {
    throw InvalidDuration("sample_increment: dt must be positive");
  }
  switch (model.kind()) {
    case ClockKind::Gamma:
      return sample_gamma(model.kappa() * dt, rng) / model.kappa();
    case ClockKind::InverseGaussian:
      return sample_inverse_gaussian(dt, model.kappa() * dt * dt, rng);
  }
  throw InvalidParameter("sample_increment: unknown clock kind");
}

ClockPath sample_path(const ClockModel& model, const RealVector& grid,
                      RandomStream& rng) {
  const auto n = grid.size();
  if (n < 1 || grid[0] != 0.0) {
    throw InvalidGrid("sample_path: grid must start at 0");
  }
  for (Eigen::Index i = 1; i < n; ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw InvalidGrid("sample_path: grid must be strictly ascending");
    }
  }
  ClockPath path;
  path.grid = grid;
  path.values = RealVector::Zero(n);
  for (Eigen::Index i = 1; i < n; ++i) {
    path.values[i] =
        path.values[i - 1] + sample_increment(model, grid[i] - grid[i - 1], rng);
  }
  return path;
}

Complex mgf(const ClockModel& model, Complex alpha, double t) {
  if (!(t >= 0.0)) {
    throw InvalidDuration("mgf: t must be >= 0");
  }
  const double kappa = model.kappa();
  switch (model.kind()) {
    case ClockKind::Gamma: {
      if (!(alpha.real() < kappa)) {
        throw BranchDomain("mgf: gamma clock requires Re(alpha) < kappa");
      }
      return std::exp(-kappa * t * std::log(1.0 - alpha / kappa));
    }
    case ClockKind::InverseGaussian: {
      if (!(alpha.real() <= 0.25 * kappa)) {
        throw BranchDomain("mgf: inverse-Gaussian clock requires Re(alpha) <= kappa/4");
      }
      const Complex root = std::sqrt(1.0 - 4.0 * alpha / kappa);
      return std::exp(0.5 * kappa * (1.0 - root) * t);
    }
  }
  throw InvalidParameter("mgf: unknown clock kind");
}

double cn_coefficient(const ClockModel& model, int n) {
  if (n < 2) {
    throw InvalidOrder("cn_coefficient: order must be >= 2");
  }
  const double log_lambda = std::log(model.lambda());
  double log_value = 0.0;
  switch (model.kind()) {
    case ClockKind::Gamma:
      log_value = std::lgamma(static_cast<double>(n)) + (n - 1) * log_lambda;
      break;
    case ClockKind::InverseGaussian:
      log_value = std::log(2.0) + std::lgamma(2.0 * n - 2.0) -
                  std::lgamma(static_cast<double>(n) - 1.0) +
                  (n - 1) * log_lambda;
      break;
  }
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw OverflowSaturation("cn_coefficient: value exceeds the double range");
  }
  return std::exp(log_value);
}

double gamma_raw_moment(double kappa, int n, double dt) {
  if (n < 1) {
    throw InvalidOrder("gamma_raw_moment: order must be >= 1");
  }
  if (!(dt > 0.0)) {
    throw InvalidDuration("gamma_raw_moment: dt must be positive");
  }
  double product = dt;
  for (int k = 1; k < n; ++k) {
    product *= dt + static_cast<double>(k) / kappa;
  }
  return product;
}

double levy_tail_rate(double kappa, double delta) {
  if (!(delta > 0.0)) {
    throw InvalidThreshold("levy_tail_rate: delta must be positive (the tail integral diverges at 0)");
  }
  if (!(kappa > 0.0)) {
    throw InvalidParameter("levy_tail_rate: kappa must be positive");
  }
  return kappa * upper_gamma_zero(delta * kappa);
}

double poisson_tick_probability(int n, double kappa, double delta, double tau) {
  if (n < 0) {
    throw InvalidOrder("poisson_tick_probability: count must be >= 0");
  }
  if (!(tau > 0.0)) {
    throw InvalidDuration("poisson_tick_probability: tau must be positive");
  }
  const double mean = levy_tail_rate(kappa, delta) * tau;
  if (mean == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(n * std::log(mean) - mean - std::lgamma(n + 1.0));
}

double poisson_tick_at_least_one(double kappa, double delta, double tau) {
  if (!(tau > 0.0)) {
    throw InvalidDuration("poisson_tick_at_least_one: tau must be positive");
  }
  return -std::expm1(-levy_tail_rate(kappa, delta) * tau);
}

double fisher_information(double kappa, double t) {
  if (!(t > 0.0)) {
    throw InvalidTime("fisher_information: t must be positive");
  }
  if (!(kappa > 0.0)) {
    throw InvalidParameter("fisher_information: kappa must be positive");
  }
  return kappa * kappa * trigamma(kappa * t);
}

}  // namespace qclock
