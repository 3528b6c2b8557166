// montecarlo.hpp -- stochastic-unitary trajectories: evolve a state through a
// sampled clock path and average an ensemble of such trajectories with
// per-entry standard errors.
#pragma once

#include <cstdint>
#include <vector>

#include "qclock/clock.hpp"
#include "qclock/qstate.hpp"

namespace qclock {

/// One trajectory: the sampled clock path and the state conjugated by the
/// clock-time propagator at each grid point. Purity is conserved exactly
/// along a trajectory; only the ensemble mean decoheres.
struct TrajectoryRecord {
  RealVector grid;
  RealVector clock;  // sampled clock values, clock(0) = 0
  std::vector<DensityMatrix> states;
};

/// Ensemble mean with per-entry standard errors of the real and imaginary
/// parts. The mean of valid states is a valid state, so it is revalidated on
/// construction; the errors are diagnostics for oracle comparisons.
struct EnsembleEstimate {
  RealVector grid;
  std::vector<DensityMatrix> mean;
  std::vector<RealMatrix> stderr_real;
  std::vector<RealMatrix> stderr_imag;
  std::int64_t n_traj = 0;
};

/// Evolves rho0 through one sampled clock path on the given laboratory-time
/// grid (grid(0) must be 0, strictly increasing). Deterministic in the seed.
TrajectoryRecord evolve_trajectory(const DensityMatrix& rho0,
                                   const HamiltonianSpec& h,
                                   const ClockModel& model,
                                   const RealVector& grid, std::uint64_t seed);

/// Averages n_traj independent trajectories. Trajectory i uses
/// child_seed(master_seed, i), so results are reproducible and individual
/// trajectories can be re-derived. Sums are compensated to keep rounding
/// error flat in n_traj.
EnsembleEstimate ensemble_average(const DensityMatrix& rho0,
                                  const HamiltonianSpec& h,
                                  const ClockModel& model,
                                  const RealVector& grid, std::int64_t n_traj,
                                  std::uint64_t master_seed);

}  // namespace qclock
