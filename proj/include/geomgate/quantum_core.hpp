// Copyright 2026 The geomgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace geomgate {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

// Dimension-2/3 storage with no heap allocation.
using Vec = Eigen::Matrix<Complex, Eigen::Dynamic, 1, 0, 3, 1>;
using Mat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;
using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;

/// Raised for any violated precondition or invariant of the library types.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pauli matrices in the ordered basis {|0>, |1>}.
///
/// Convention: sigma_z|0> = +|0>, sigma_z|1> = -|1>. The north pole of the
/// Bloch sphere is |0>.
Mat2 sigma_x();
Mat2 sigma_y();
Mat2 sigma_z();

/// Normalized pure state of a qubit (dim 2) or qutrit (dim 3).
class StateVector {
 public:
  /// Validates that `amplitudes` has dim 2 or 3 and unit norm within 1e-9.
  explicit StateVector(Vec amplitudes);

  /// Normalizes `amplitudes`; rejects the zero vector.
  static StateVector normalized(const Vec& amplitudes);
  static StateVector basis(int dim, int index);
  static StateVector qubit(Complex a0, Complex a1);

  int dim() const { return static_cast<int>(amps_.size()); }
  const Vec& amplitudes() const { return amps_; }
  Complex operator[](int i) const { return amps_(i); }
  double population(int i) const { return std::norm(amps_(i)); }

  /// Drops the |2> amplitude of a qutrit state and renormalizes the rest.
  /// Rejects states with no weight in the qubit subspace.
  StateVector truncate_to_qubit() const;

 private:
  Vec amps_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity (1e-9), unit trace (1e-9) and eigenvalues >= -1e-8.
  explicit DensityMatrix(Mat entries);

  static DensityMatrix pure(const StateVector& psi);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const Mat& entries() const { return rho_; }
  Complex operator()(int r, int c) const { return rho_(r, c); }
  double population(int i) const { return rho_(i, i).real(); }

 private:
  Mat rho_;
};

/// 2x2 unitary. Construction checks ||U^dag U - I||_max < 1e-9.
class GateMatrix {
 public:
  explicit GateMatrix(const Mat2& u);

  static GateMatrix identity() { return GateMatrix(Mat2::Identity()); }

  const Mat2& matrix() const { return u_; }
  Complex operator()(int r, int c) const { return u_(r, c); }
  GateMatrix adjoint() const { return GateMatrix(u_.adjoint()); }
  StateVector apply(const StateVector& psi) const;

  friend GateMatrix operator*(const GateMatrix& a, const GateMatrix& b) {
    return GateMatrix(a.u_ * b.u_);
  }

 private:
  Mat2 u_;
};

/// Unitarity residual max_ij |(U^dag U - I)_ij|.
double unitarity_residual(const Mat2& u);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// Instantaneous eigenbasis of the two-level drive at control angles
/// (theta, phi) and field magnitude omega.
///
/// The eigenvectors carry a fixed gauge:
///   |lambda_-> = cos(theta/2)|1> - sin(theta/2) e^{-i phi}|0>
///   |lambda_+> = -cos(theta/2)|0> - sin(theta/2) e^{+i phi}|1>
/// Energies are +-omega/2 (hbar = 1).
struct EigenFrame {
  double theta = 0.0;
  double phi = 0.0;
  StateVector lambda_minus = StateVector::basis(2, 1);
  StateVector lambda_plus = StateVector::basis(2, 0);
  double energy_plus = 0.0;
  double energy_minus = 0.0;

  /// Unit vector of the control field, (sin t cos p, sin t sin p, cos t) in
  /// the Pauli basis used by bloch_vector().
  BlochVector field_direction() const;
};

EigenFrame eigenframe(double theta, double phi, double omega);

/// (<sigma_x>, <sigma_y>, <sigma_z>). Qutrit states must be truncated first.
BlochVector bloch_vector(const StateVector& psi);

/// 1 - |Tr(U^dag V)| / 2. Zero iff the gates agree up to a global phase.
double gate_distance(const GateMatrix& u, const GateMatrix& v);

/// sqrt(Tr(rho_ideal rho)), clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& rho_ideal);

/// |<ideal|psi>|, which equals fidelity() on the corresponding projectors.
double fidelity(const StateVector& psi, const StateVector& ideal);

/// Rotation exp(-i angle/2 n.sigma) about the unit axis n.
GateMatrix axis_rotation(const BlochVector& axis, double angle);

}  // namespace geomgate
