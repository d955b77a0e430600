#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "kappalab/layout.hpp"

namespace kappalab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdSlack = 1e-9;

/// Normalized state vector over a subsystem layout.
class PureState {
 public:
  PureState(SubsystemLayout layout, Vector amplitudes);

  const SubsystemLayout& layout() const { return layout_; }
  const Vector& amplitudes() const { return amp_; }
  long dim() const { return amp_.size(); }

 private:
  SubsystemLayout layout_;
  Vector amp_;
};

/// Hermitian, PSD (within slack), unit-trace operator over a layout.
/// Invariants are checked at construction; violations throw. Solver
/// internals work on raw matrices and only construct a DensityMatrix at
/// their boundary.
class DensityMatrix {
 public:
  DensityMatrix(SubsystemLayout layout, Matrix data);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(SubsystemLayout layout);
  static DensityMatrix basis_state(SubsystemLayout layout, long index);

  const SubsystemLayout& layout() const { return layout_; }
  const Matrix& data() const { return mat_; }
  long dim() const { return mat_.rows(); }

  /// Re-labels the subsystem structure without touching the data. Group
  /// sizes must partition the layout in order; each merged dim <= 16.
  DensityMatrix with_layout(SubsystemLayout layout) const;

 private:
  DensityMatrix() : layout_({2}) {}
  SubsystemLayout layout_;
  Matrix mat_;
};

/// Kronecker product with concatenated layout.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep`; remaining subsystems are traced out. The output
/// layout lists the kept subsystems in increasing index order.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep);

/// Raw-matrix partial trace used by solver internals: no invariant checks.
Matrix partial_trace_raw(const Matrix& m, const SubsystemLayout& layout,
                         const std::vector<int>& keep);

/// Sum of absolute eigenvalues, Tr|X| (both eigenvalue signs counted, no
/// 1/2 factor). Input must be Hermitian within tolerance.
double trace_norm(const Matrix& x);

/// <psi| rho |psi>, clamped to [0,1].
double fidelity(const DensityMatrix& rho, const PureState& psi);

/// Eigenvalues sorted descending with matching orthonormal eigenvectors
/// (columns).
std::pair<RealVector, Matrix> hermitian_eigen(const Matrix& x);

/// Entrywise max |X - X^dagger| deviation, for Hermiticity checks.
double hermiticity_defect(const Matrix& x);

}  // namespace kappalab
