#include "qclock/bounds.hpp"

#include <cmath>
#include <numbers>

#include "qclock/clock.hpp"
#include "qclock/errors.hpp"

namespace qclock {

AtomicClockSpec AtomicClockSpec::cesium(double ramsey_time_s) {
  return AtomicClockSpec{constants::cesium_hyperfine_hz, ramsey_time_s,
                         "Cs-133 hyperfine"};
}

namespace {
void validate_spec(const AtomicClockSpec& spec) {
  if (!(spec.transition_frequency_hz > 0.0) ||
      !std::isfinite(spec.transition_frequency_hz)) {
    throw InvalidParameter("transition frequency must be finite and > 0");
  }
  if (!(spec.ramsey_time_s > 0.0) || !std::isfinite(spec.ramsey_time_s)) {
    throw InvalidParameter("Ramsey time must be finite and > 0");
  }
}
}  // namespace

double kappa_lower_bound(const AtomicClockSpec& spec,
                         FrequencyConvention convention) {
  validate_spec(spec);
  const double rate = convention == FrequencyConvention::Ordinary
                          ? spec.transition_frequency_hz
                          : 2.0 * std::numbers::pi *
                                spec.transition_frequency_hz;
  return 0.5 * rate * rate * spec.ramsey_time_s;
}

double transition_energy_ev(const AtomicClockSpec& spec) {
  validate_spec(spec);
  return constants::planck_h_joule_seconds * spec.transition_frequency_hz /
         constants::electron_volt_joules;
}

TickReport planck_tick_report(double kappa, double delta, double tau) {
  TickReport report;
  report.rate = levy_tail_rate(kappa, delta);
  report.p_at_least_one = poisson_tick_at_least_one(kappa, delta, tau);
  return report;
}

EstimationErrorBound estimation_error_bound(double kappa, double t) {
  const double information = fisher_information(kappa, t);
  return EstimationErrorBound{1.0 / information,
                              1.0 / std::sqrt(information)};
}

}  // namespace qclock
