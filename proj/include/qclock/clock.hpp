// clock.hpp -- random clock processes: gamma and inverse-Gaussian subordinator
// sampling, moments, moment generating functions, c_n coefficient rates, Levy
// tail rates, Poisson tick statistics, and Fisher information.
#pragma once

#include <complex>

#include "qclock/qstate.hpp"
#include "qclock/rng.hpp"

namespace qclock {

enum class ClockKind { Gamma, InverseGaussian };

/// A subordinator clock model with rate parameter kappa > 0 (units 1/time).
/// The derived field lambda = 1/kappa is the mean tick scale; the Newtonian
/// limit is kappa -> infinity.
class ClockModel {
 public:
  static ClockModel gamma(double kappa);
  static ClockModel inverse_gaussian(double kappa);
  /// Build from lambda = 1/kappa instead, as used by the orbit presets.
  static ClockModel from_lambda(ClockKind kind, double lambda);

  ClockKind kind() const { return kind_; }
  double kappa() const { return kappa_; }
  double lambda() const { return lambda_; }

 private:
  ClockModel(ClockKind kind, double kappa);

  ClockKind kind_;
  double kappa_;
  double lambda_;
};

/// A sampled clock trajectory on a Newtonian time grid. values[0] = 0 and
/// the readings are nondecreasing.
struct ClockPath {
  RealVector grid;    // Newtonian times, ascending from 0
  RealVector values;  // clock readings Gamma_t
};

/// Draw one clock increment over a Newtonian interval of length dt > 0.
///
/// Gamma clock: Gamma(shape kappa*dt, rate kappa), sampled with the
/// Marsaglia-Tsang method plus the small-shape boosting transform.
/// Inverse-Gaussian clock: mean dt, shape kappa*dt^2 (variance dt/kappa),
/// sampled with the Michael-Schucany-Haas root-selection transform.
/// Both are exact in distribution and nonnegative.
double sample_increment(const ClockModel& model, double dt, RandomStream& rng);

/// Sample a full clock path: Gamma_0 = 0 and independent stationary
/// increments over successive grid cells.
ClockPath sample_path(const ClockModel& model, const RealVector& grid,
                      RandomStream& rng);

/// E[exp(alpha Gamma_t)] with principal complex branches.
///   gamma:            exp(-kappa t Log(1 - alpha/kappa)),  Re alpha < kappa
///   inverse-Gaussian: exp[(kappa/2)(1 - sqrt(1 - 4 alpha/kappa)) t],
///                     Re alpha <= kappa/4
/// The gamma branch is continuous in alpha because 1 - alpha/kappa never
/// crosses the negative real axis inside the admissible half-plane.
Complex mgf(const ClockModel& model, Complex alpha, double t);

/// The per-unit-time moment rate c_n = lim_{dt->0} E[(dGamma)^n]/dt, n >= 2:
///   gamma:            c_n = (n-1)! lambda^{n-1}
///   inverse-Gaussian: c_n = 2 (2n-3)!/(n-2)! lambda^{n-1}
/// Evaluated in log space; values beyond the double range raise
/// OverflowSaturation.
double cn_coefficient(const ClockModel& model, int n);

/// Raw moment of a gamma-clock increment,
/// E[(dGamma)^n] = dt (dt + 1/kappa) (dt + 2/kappa) ... (dt + (n-1)/kappa).
double gamma_raw_moment(double kappa, int n, double dt);

/// Rate of gamma-clock ticks of size >= delta per unit Newtonian time,
/// r_delta = kappa * Gamma(0, delta*kappa). Diverges as delta -> 0
/// (infinite activity), so delta must be positive.
double levy_tail_rate(double kappa, double delta);

/// P(exactly n ticks of size >= delta in a window tau), Poisson with mean
/// r_delta * tau.
double poisson_tick_probability(int n, double kappa, double delta, double tau);

/// P(at least one tick of size >= delta in a window tau) = 1 - exp(-r tau).
double poisson_tick_at_least_one(double kappa, double delta, double tau);

/// Fisher information carried by a gamma-clock reading about Newtonian time,
/// I(t) = kappa^2 psi'(kappa t).
double fisher_information(double kappa, double t);

}  // namespace qclock
