#include "qclock/qstate.hpp"

#include <cmath>

namespace qclock {

double hermiticity_defect(const ComplexMatrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double bloch_distance(const BlochVector& a, const BlochVector& b) {
  const double dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

DensityMatrix::DensityMatrix(const ComplexMatrix& entries) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw InvalidState("DensityMatrix: entries must be square and nonempty");
  }
  if (hermiticity_defect(entries) > tol::kHermiticity) {
    throw NonHermitianInput("DensityMatrix: input is not Hermitian to 1e-12");
  }
  entries_ = 0.5 * (entries + entries.adjoint());
  const double trace_defect = std::abs(entries_.trace() - Complex(1.0, 0.0));
  if (trace_defect > tol::kTrace) {
    throw InvalidState("DensityMatrix: trace differs from 1 by more than 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(entries_,
                                                      Eigen::EigenvaluesOnly);
  min_eigenvalue_ = solver.eigenvalues().minCoeff();
  if (min_eigenvalue_ < tol::kPositivity) {
    throw InvalidState("DensityMatrix: not positive semidefinite (min eigenvalue < -1e-10)");
  }
}

double DensityMatrix::trace_error() const {
  return std::abs(entries_.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::purity() const {
  return (entries_ * entries_).trace().real();
}

HamiltonianSpec::HamiltonianSpec(ComplexMatrix m, RealVector evals,
                                 ComplexMatrix evecs)
    : matrix_(std::move(m)),
      eigenvalues_(std::move(evals)),
      eigenvectors_(std::move(evecs)) {}

double HamiltonianSpec::spectral_radius() const {
  return eigenvalues_.cwiseAbs().maxCoeff();
}

HamiltonianSpec spectral_decompose(const ComplexMatrix& h_matrix) {
  if (h_matrix.rows() != h_matrix.cols() || h_matrix.rows() < 1) {
    throw InvalidState("spectral_decompose: matrix must be square and nonempty");
  }
  if (hermiticity_defect(h_matrix) > tol::kHermiticity) {
    throw NonHermitianInput("spectral_decompose: input is not Hermitian to 1e-12");
  }
  const ComplexMatrix sym = 0.5 * (h_matrix + h_matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const RealVector evals = solver.eigenvalues();  // ascending
  const ComplexMatrix evecs = solver.eigenvectors();

  const int n = static_cast<int>(sym.rows());
  const double unitarity_defect =
      (evecs.adjoint() * evecs - ComplexMatrix::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  if (unitarity_defect > tol::kUnitarity) {
    throw InvalidState("spectral_decompose: eigenvector matrix is not unitary to 1e-10");
  }
  const ComplexMatrix rebuilt =
      evecs * evals.cast<Complex>().asDiagonal() * evecs.adjoint();
  if ((rebuilt - sym).cwiseAbs().maxCoeff() > tol::kReconstruction) {
    throw InvalidState("spectral_decompose: reconstruction residual exceeds 1e-10");
  }
  return HamiltonianSpec(sym, evals, evecs);
}

DensityMatrix conjugate_by_propagator(const DensityMatrix& rho,
                                      const HamiltonianSpec& h, double tau) {
  if (rho.dim() != h.dim()) {
    throw DimensionMismatch("conjugate_by_propagator: state and Hamiltonian dimensions differ");
  }
  if (!(tau >= 0.0)) {
    throw InvalidDuration("conjugate_by_propagator: clock time must be >= 0");
  }
  const ComplexMatrix& v = h.eigenvectors();
  ComplexVector phases(h.dim());
  for (int n = 0; n < h.dim(); ++n) {
    phases[n] = std::exp(Complex(0.0, -h.eigenvalues()[n] * tau));
  }
  ComplexMatrix in_basis = v.adjoint() * rho.matrix() * v;
  in_basis = phases.asDiagonal() * in_basis * phases.conjugate().asDiagonal();
  return DensityMatrix(v * in_basis * v.adjoint());
}

BlochVector bloch_coordinates(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw DimensionMismatch("bloch_coordinates: state must be a qubit (dim 2)");
  }
  const ComplexMatrix& m = rho.matrix();
  return BlochVector{2.0 * m(0, 1).real(), 2.0 * m(1, 0).imag(),
                     (m(0, 0) - m(1, 1)).real()};
}

DensityMatrix pure_state(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (!(norm > 0.0)) {
    throw InvalidState("pure_state: vector must be nonzero");
  }
  const ComplexVector unit = psi / norm;
  return DensityMatrix(unit * unit.adjoint());
}

DensityMatrix maximally_mixed(int dim) {
  if (dim < 1) {
    throw InvalidState("maximally_mixed: dimension must be positive");
  }
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

}  // namespace qclock
