#include "qclock/master.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <cstdlib>

#include "qclock/errors.hpp"

namespace qclock {

namespace {

// Largest |lambda nu| for which the M -> infinity series still converges.
// The gamma exponent -kappa Log(1 + i nu/kappa) has its branch point at
// |lambda nu| = 1; the inverse-Gaussian sqrt(1 + 4 i nu/kappa) at 1/4.
double series_radius(const ClockModel& model) {
  return model.kind() == ClockKind::Gamma ? 1.0 : 0.25;
}

// mu(nu) = sum_n c_n (-i nu)^n / n! with c_1 = 1 and cn_tail[k] = c_{k+2}.
Complex multiplier_from_tail(double nu, std::span<const double> cn_tail) {
  const Complex z(0.0, -nu);
  Complex term = z;  // (-i nu)^n / n! at n = 1
  Complex mu = term;
  for (std::size_t k = 0; k < cn_tail.size(); ++k) {
    term *= z / static_cast<double>(k + 2);
    mu += cn_tail[k] * term;
  }
  return mu;
}

// Entrywise multiplier matrix in the energy eigenbasis. mu(0) = 0 for every
// coefficient sequence, so the diagonal is exactly zero and the generator is
// traceless by construction.
ComplexMatrix multiplier_matrix(const HamiltonianSpec& h,
                                std::span<const double> cn_tail) {
  const auto& energies = h.eigenvalues();
  const Eigen::Index d = energies.size();
  ComplexMatrix mu(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = 0; n < d; ++n) {
      mu(m, n) = m == n ? Complex(0.0, 0.0)
                        : multiplier_from_tail(energies(m) - energies(n),
                                               cn_tail);
    }
  }
  return mu;
}

void check_dims(const Eigen::Index rho_dim, const HamiltonianSpec& h) {
  if (rho_dim != h.matrix().rows()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho_dim) +
                            " does not match Hamiltonian dimension " +
                            std::to_string(h.matrix().rows()));
  }
}

ComplexMatrix symmetrize(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint().eval());
}

}  // namespace

TruncationOrder::TruncationOrder(int order_in_lambda)
    : order_in_lambda_(order_in_lambda) {
  if (order_in_lambda < 0) {
    throw InvalidOrder("truncation order must be >= 0, got " +
                       std::to_string(order_in_lambda));
  }
}

std::vector<double> cn_sequence(const ClockModel& model, TruncationOrder m) {
  std::vector<double> tail;
  tail.reserve(static_cast<std::size_t>(m.order_in_lambda()));
  for (int n = 2; n <= m.order_in_lambda() + 1; ++n) {
    tail.push_back(cn_coefficient(model, n));
  }
  return tail;
}

ComplexMatrix generator_apply(const DensityMatrix& rho,
                              const HamiltonianSpec& h,
                              std::span<const double> cn_tail) {
  check_dims(rho.dim(), h);
  const ComplexMatrix& v = h.eigenvectors();
  ComplexMatrix rho_eig = v.adjoint() * rho.matrix() * v;
  ComplexMatrix out =
      v * multiplier_matrix(h, cn_tail).cwiseProduct(rho_eig) * v.adjoint();
  return symmetrize(out);
}

ComplexMatrix generator_apply(const DensityMatrix& rho,
                              const HamiltonianSpec& h, const ClockModel& model,
                              TruncationOrder m) {
  const std::vector<double> tail = cn_sequence(model, m);
  return generator_apply(rho, h, tail);
}

double default_time_step(const HamiltonianSpec& h) {
  const double radius = h.spectral_radius();
  return radius > 0.0 ? 0.01 / radius : 0.01;
}

std::vector<StatePoint> integrate(const DensityMatrix& rho0,
                                  const HamiltonianSpec& h,
                                  const ClockModel& model, TruncationOrder m,
                                  double t_end, double dt_step) {
  check_dims(rho0.dim(), h);
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw InvalidTime("t_end must be finite and >= 0");
  }
  if (!(dt_step > 0.0) || !std::isfinite(dt_step)) {
    throw InvalidDuration("dt_step must be finite and > 0");
  }

  const ComplexMatrix& v = h.eigenvectors();
  const ComplexMatrix mu = multiplier_matrix(h, cn_sequence(model, m));
  auto derivative = [&](const ComplexMatrix& state) -> ComplexMatrix {
    return v * mu.cwiseProduct((v.adjoint() * state * v).eval()) * v.adjoint();
  };

  auto record = [](double t, const ComplexMatrix& state) -> StatePoint {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
        state, Eigen::EigenvaluesOnly);
    return StatePoint{t, state, solver.eigenvalues().minCoeff(),
                      std::abs(state.trace() - Complex(1.0, 0.0))};
  };

  std::vector<StatePoint> out;
  ComplexMatrix state = rho0.matrix();
  out.push_back(record(0.0, state));
  if (t_end == 0.0) return out;

  const long long n_steps =
      std::max<long long>(1, std::llround(t_end / dt_step));
  const double hstep = t_end / static_cast<double>(n_steps);
  out.reserve(static_cast<std::size_t>(n_steps) + 1);

  for (long long i = 1; i <= n_steps; ++i) {
    const ComplexMatrix k1 = derivative(state);
    const ComplexMatrix k2 = derivative(state + (0.5 * hstep) * k1);
    const ComplexMatrix k3 = derivative(state + (0.5 * hstep) * k2);
    const ComplexMatrix k4 = derivative(state + hstep * k3);
    state += (hstep / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    state = symmetrize(state);

    StatePoint point = record(static_cast<double>(i) * hstep, state);
    // written so that NaN trips the guard too
    if (!(point.trace_error <= 1e-8)) {
      throw StepTooLarge("trace drift " + std::to_string(point.trace_error) +
                         " at t = " + std::to_string(point.t) +
                         "; reduce dt_step");
    }
    out.push_back(std::move(point));
  }
  return out;
}

ModeExponent truncated_mode_exponent(double nu, const ClockModel& model,
                                     TruncationOrder m) {
  ModeExponent result;
  result.nu = nu;
  result.exponent = multiplier_from_tail(nu, cn_sequence(model, m));
  result.series_converges =
      std::abs(model.lambda() * nu) < series_radius(model);
  return result;
}

Complex exact_mode_exponent(double nu, const ClockModel& model) {
  const double kappa = model.kappa();
  if (model.kind() == ClockKind::Gamma) {
    return -kappa * std::log(Complex(1.0, nu / kappa));
  }
  return 0.5 * kappa *
         (Complex(1.0, 0.0) - std::sqrt(Complex(1.0, 4.0 * nu / kappa)));
}

DensityMatrix exact_energy_basis_solution(const DensityMatrix& rho0,
                                          const HamiltonianSpec& h,
                                          const ClockModel& model, double t) {
  check_dims(rho0.dim(), h);
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidTime("t must be finite and >= 0");
  }
  const auto& energies = h.eigenvalues();
  const Eigen::Index d = energies.size();
  const ComplexMatrix& v = h.eigenvectors();
  ComplexMatrix rho_eig = v.adjoint() * rho0.matrix() * v;
  for (Eigen::Index mm = 0; mm < d; ++mm) {
    for (Eigen::Index nn = 0; nn < d; ++nn) {
      if (mm == nn) continue;
      const Complex mu = exact_mode_exponent(energies(mm) - energies(nn),
                                             model);
      rho_eig(mm, nn) *= std::exp(mu * t);
    }
  }
  return DensityMatrix(symmetrize(v * rho_eig * v.adjoint()));
}

double decoherence_rate(double nu, const ClockModel& model) {
  const double kappa = model.kappa();
  if (model.kind() == ClockKind::Gamma) {
    const double ratio = nu / kappa;
    return 0.5 * kappa * std::log1p(ratio * ratio);
  }
  return -std::real(exact_mode_exponent(nu, model));
}

}  // namespace qclock
