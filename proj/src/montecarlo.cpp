#include "qclock/montecarlo.hpp"

#include <cmath>

#include "qclock/errors.hpp"
#include "qclock/rng.hpp"

namespace qclock {

namespace {

// compensated (Kahan) accumulator, one compensation term per matrix entry
struct KahanMatrix {
  RealMatrix sum;
  RealMatrix comp;

  explicit KahanMatrix(Eigen::Index d)
      : sum(RealMatrix::Zero(d, d)), comp(RealMatrix::Zero(d, d)) {}

  void add(const RealMatrix& x) {
    RealMatrix y = x - comp;
    RealMatrix t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

RealMatrix stderr_from_sums(const RealMatrix& sum, const RealMatrix& sum_sq,
                            double n) {
  RealMatrix mean = sum / n;
  RealMatrix var_num = sum_sq - n * mean.cwiseProduct(mean);
  return (var_num.cwiseMax(0.0) / ((n - 1.0) * n)).cwiseSqrt();
}

}  // namespace

TrajectoryRecord evolve_trajectory(const DensityMatrix& rho0,
                                   const HamiltonianSpec& h,
                                   const ClockModel& model,
                                   const RealVector& grid,
                                   std::uint64_t seed) {
  RandomStream rng(seed);
  ClockPath path = sample_path(model, grid, rng);
  TrajectoryRecord record;
  record.grid = path.grid;
  record.clock = path.values;
  record.states.reserve(static_cast<std::size_t>(grid.size()));
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    record.states.push_back(
        conjugate_by_propagator(rho0, h, record.clock(i)));
  }
  return record;
}

EnsembleEstimate ensemble_average(const DensityMatrix& rho0,
                                  const HamiltonianSpec& h,
                                  const ClockModel& model,
                                  const RealVector& grid, std::int64_t n_traj,
                                  std::uint64_t master_seed) {
  if (n_traj < 2) {
    throw InsufficientSamples("ensemble_average needs n_traj >= 2, got " +
                              std::to_string(n_traj));
  }
  const Eigen::Index n_points = grid.size();
  const Eigen::Index d = rho0.dim();

  std::vector<KahanMatrix> sum_re(static_cast<std::size_t>(n_points),
                                  KahanMatrix(d));
  std::vector<KahanMatrix> sum_im = sum_re;
  std::vector<KahanMatrix> sum_re2 = sum_re;
  std::vector<KahanMatrix> sum_im2 = sum_re;

  for (std::int64_t traj = 0; traj < n_traj; ++traj) {
    TrajectoryRecord record = evolve_trajectory(
        rho0, h, model, grid, child_seed(master_seed, traj));
    for (Eigen::Index i = 0; i < n_points; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      RealMatrix re = record.states[idx].matrix().real();
      RealMatrix im = record.states[idx].matrix().imag();
      sum_re[idx].add(re);
      sum_im[idx].add(im);
      sum_re2[idx].add(re.cwiseProduct(re));
      sum_im2[idx].add(im.cwiseProduct(im));
    }
  }

  const double n = static_cast<double>(n_traj);
  EnsembleEstimate estimate;
  estimate.grid = grid;
  estimate.n_traj = n_traj;
  estimate.mean.reserve(static_cast<std::size_t>(n_points));
  estimate.stderr_real.reserve(static_cast<std::size_t>(n_points));
  estimate.stderr_imag.reserve(static_cast<std::size_t>(n_points));
  for (Eigen::Index i = 0; i < n_points; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    ComplexMatrix mean =
        (sum_re[idx].sum / n).cast<Complex>() +
        Complex(0.0, 1.0) * (sum_im[idx].sum / n).cast<Complex>();
    estimate.mean.emplace_back(0.5 * (mean + mean.adjoint().eval()));
    estimate.stderr_real.push_back(
        stderr_from_sums(sum_re[idx].sum, sum_re2[idx].sum, n));
    estimate.stderr_imag.push_back(
        stderr_from_sums(sum_im[idx].sum, sum_im2[idx].sum, n));
  }
  return estimate;
}

}  // namespace qclock
