// master.hpp -- the deterministic master equation driven by a random clock:
// series generator at any truncation order, fixed-step integration, per-mode
// exponents, the exact energy-basis solution, and decoherence rates.
#pragma once

#include <span>
#include <vector>

#include "qclock/clock.hpp"
#include "qclock/qstate.hpp"

namespace qclock {

/// Truncation order M in lambda: series terms n = 1..M+1 are retained, so
/// term n contributes at lambda^{n-1} and M = 0 is the von Neumann limit.
class TruncationOrder {
 public:
  explicit TruncationOrder(int order_in_lambda);
  int order_in_lambda() const { return order_in_lambda_; }

 private:
  int order_in_lambda_;
};

/// Per-mode evolution data for one energy-basis matrix element: the element
/// (m, n) evolves as rho_mn(t) = rho_mn(0) exp(exponent * t).
struct ModeExponent {
  double nu = 0.0;                // transition frequency E_m - E_n
  Complex exponent{0.0, 0.0};     // per-unit-time complex rate
  bool series_converges = true;   // false when |lambda nu| >= 1: the full
                                  // series diverges although every
                                  // truncation stays finite
};

/// The c_n tail (c_2 .. c_{M+1}) of a clock model. Empty at M = 0.
std::vector<double> cn_sequence(const ClockModel& model, TruncationOrder m);

/// Right-hand side of the dynamical equation truncated at order M:
///   i[rho, H] + sum_{n=2}^{M+1} c_n sum_{k=0}^{n} (-iH)^k/k! rho (iH)^{n-k}/(n-k)!
/// Evaluated in the energy eigenbasis, where each series term acts as the
/// entrywise multiplier (-i nu_mn)^n / n!. The result is Hermitian and
/// traceless at every order.
ComplexMatrix generator_apply(const DensityMatrix& rho,
                              const HamiltonianSpec& h, const ClockModel& model,
                              TruncationOrder m);

/// Same generator with an explicit coefficient tail (cn_tail[k] = c_{k+2});
/// c_1 = 1 is always implied. Intended for tests with synthetic sequences.
ComplexMatrix generator_apply(const DensityMatrix& rho,
                              const HamiltonianSpec& h,
                              std::span<const double> cn_tail);

/// One integration output sample. The truncated dynamics can leave the state
/// space for large lambda, so the minimum eigenvalue is reported as a
/// diagnostic instead of being clipped.
struct StatePoint {
  double t = 0.0;
  ComplexMatrix rho;
  double min_eigenvalue = 0.0;
  double trace_error = 0.0;
};

/// Classical fixed-step 4th-order (RK4) integration of the truncated
/// generator from t = 0 to t_end. The state is re-symmetrized each step and
/// the run aborts with StepTooLarge once the trace drifts beyond 1e-8.
/// Outputs one StatePoint per step boundary, including t = 0.
std::vector<StatePoint> integrate(const DensityMatrix& rho0,
                                  const HamiltonianSpec& h,
                                  const ClockModel& model, TruncationOrder m,
                                  double t_end, double dt_step);

/// Step size satisfying dt * max|E_n| <= 0.01, the documented default for
/// integrate(). Returns 0.01 for a vanishing spectrum.
double default_time_step(const HamiltonianSpec& h);

/// mu_M(nu) = sum_{n=1}^{M+1} c_n (-i nu)^n / n! with c_1 = 1. For the gamma
/// clock this is the order-(M+1) partial sum of -kappa Log(1 + i nu/kappa).
ModeExponent truncated_mode_exponent(double nu, const ClockModel& model,
                                     TruncationOrder m);

/// The full (M -> infinity) per-mode exponent, log E[exp(-i nu Gamma_t)] / t:
///   gamma:            -kappa Log(1 + i nu/kappa)
///   inverse-Gaussian: (kappa/2)(1 - sqrt(1 + 4 i nu/kappa))
/// Principal branches throughout; Re <= 0 for all nu.
Complex exact_mode_exponent(double nu, const ClockModel& model);

/// Exact solution of the averaged dynamics: in the energy basis every matrix
/// element is multiplied by exp(exact_mode_exponent(nu_mn) * t). Diagonal
/// elements are constant and the result is a valid state for every t >= 0.
DensityMatrix exact_energy_basis_solution(const DensityMatrix& rho0,
                                          const HamiltonianSpec& h,
                                          const ClockModel& model, double t);

/// Exponential decay rate of |rho_mn| in the energy basis:
///   gamma:            (kappa/2) ln(1 + nu^2/kappa^2)
///   inverse-Gaussian: -Re[(kappa/2)(1 - sqrt(1 + 4 i nu/kappa))]
double decoherence_rate(double nu, const ClockModel& model);

}  // namespace qclock
