// qstate.hpp -- density matrices, Hamiltonians, unitary conjugation, and
// Bloch coordinates. All types are immutable values; all operations are pure.
#pragma once

#include <Eigen/Dense>
#include <complex>

#include "qclock/errors.hpp"

namespace qclock {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace tol {
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPositivity = -1e-10;
inline constexpr double kUnitarity = 1e-10;
inline constexpr double kReconstruction = 1e-10;
}  // namespace tol

/// Largest entrywise deviation from Hermiticity, max |m - m^dagger|.
double hermiticity_defect(const ComplexMatrix& m);

/// (x, y, z) coordinates of a qubit state; pure states sit on the unit sphere.
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// Euclidean distance between two Bloch vectors.
double bloch_distance(const BlochVector& a, const BlochVector& b);

/// A finite-dimensional quantum state: Hermitian, unit trace, positive
/// semidefinite. Construction validates all three invariants (tolerances in
/// qclock::tol) and stores the exactly symmetrized entries.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& entries);

  int dim() const { return static_cast<int>(entries_.rows()); }
  const ComplexMatrix& matrix() const { return entries_; }

  double trace_error() const;    // |tr rho - 1|
  double purity() const;         // tr rho^2, real
  double min_eigenvalue() const { return min_eigenvalue_; }

 private:
  ComplexMatrix entries_;
  double min_eigenvalue_;
};

/// Hermitian operator together with its cached spectral decomposition.
/// Eigenvalues are ascending; eigenvector columns form a unitary matrix.
class HamiltonianSpec {
 public:
  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const RealVector& eigenvalues() const { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

  /// Largest |E_n| over the spectrum.
  double spectral_radius() const;

 private:
  friend HamiltonianSpec spectral_decompose(const ComplexMatrix&);
  HamiltonianSpec(ComplexMatrix m, RealVector evals, ComplexMatrix evecs);

  ComplexMatrix matrix_;
  RealVector eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// Diagonalize a Hermitian matrix. Throws NonHermitianInput if the input
/// fails the 1e-12 Hermiticity check; the reconstruction V diag(E) V^dagger
/// is verified to 1e-10 before returning.
HamiltonianSpec spectral_decompose(const ComplexMatrix& h_matrix);

/// exp(-iH tau) rho exp(+iH tau), evaluated with the cached eigenbasis so the
/// propagator phases are exact for any tau >= 0. Trace, spectrum, and purity
/// are preserved.
DensityMatrix conjugate_by_propagator(const DensityMatrix& rho,
                                      const HamiltonianSpec& h, double tau);

/// Bloch coordinates of a qubit state:
/// x = 2 Re rho_01, y = 2 Im rho_10, z = rho_00 - rho_11.
BlochVector bloch_coordinates(const DensityMatrix& rho);

/// |psi><psi| for a nonzero vector, normalized.
DensityMatrix pure_state(const ComplexVector& psi);

/// The maximally mixed state I/dim.
DensityMatrix maximally_mixed(int dim);

}  // namespace qclock
