// bounds.hpp -- physical-scale estimates: the atomic-clock lower bound on the
// clock rate, Planck-scale tick statistics over a human lifetime, and the
// Fisher-information limit on estimating elapsed time.
#pragma once

#include <string>

namespace qclock {

namespace constants {
inline constexpr double hbar_joule_seconds = 1.054571817e-34;
inline constexpr double planck_h_joule_seconds = 6.62607015e-34;
inline constexpr double electron_volt_joules = 1.602176634e-19;
inline constexpr double planck_time_seconds = 5.39e-44;
inline constexpr double seconds_per_julian_year = 3.15576e7;
inline constexpr double cesium_hyperfine_hz = 9192631770.0;
}  // namespace constants

/// A two-level frequency standard interrogated for a Ramsey time T_R.
struct AtomicClockSpec {
  double transition_frequency_hz = 0.0;
  double ramsey_time_s = 0.0;
  std::string name;

  static AtomicClockSpec cesium(double ramsey_time_s = 1.0);
};

/// Whether the transition energy is taken as h*f (Ordinary) or hbar*2*pi*f
/// (Angular) when forming the energy/hbar rate. Both give an energy of
/// h*f; the conventions differ in the rate entering the bound by 2*pi,
/// hence the bound by (2*pi)^2 ~ 39.5.
enum class FrequencyConvention { Ordinary, Angular };

/// Smallest clock rate kappa consistent with the clock resolving its own
/// transition: kappa >= (DeltaE/hbar)^2 * T_R / 2, with DeltaE/hbar = f
/// (Ordinary) or 2*pi*f (Angular). Units: 1/s.
double kappa_lower_bound(const AtomicClockSpec& spec,
                         FrequencyConvention convention);

/// Transition energy h*f expressed in electron-volts.
double transition_energy_ev(const AtomicClockSpec& spec);

/// Statistics of clock jumps exceeding delta within an observation window
/// tau: the jump rate and the probability of seeing at least one.
struct TickReport {
  double rate = 0.0;            // jumps larger than delta per unit time
  double p_at_least_one = 0.0;  // over the window tau
};

TickReport planck_tick_report(double kappa, double delta, double tau);

/// Cramer-Rao limits on estimating the laboratory time t from one clock
/// readout: variance floor 1/I and standard-deviation floor 1/sqrt(I), with
/// I = kappa^2 * trigamma(kappa t).
struct EstimationErrorBound {
  double inverse_information = 0.0;       // variance floor, time^2
  double root_inverse_information = 0.0;  // std-dev floor, time
};

EstimationErrorBound estimation_error_bound(double kappa, double t);

}  // namespace qclock
