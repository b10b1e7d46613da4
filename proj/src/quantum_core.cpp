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

#include "geomgate/quantum_core.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace geomgate {

namespace {

constexpr double kNormTol = 1e-9;
constexpr double kHermTol = 1e-9;
constexpr double kTraceTol = 1e-9;
constexpr double kPsdTol = 1e-8;
constexpr double kUnitaryTol = 1e-9;

void check_dim(Eigen::Index n, const char* what) {
  if (n != 2 && n != 3) {
    throw Error(fmt::format("{}: dimension must be 2 or 3, got {}", what, n));
  }
}

bool all_finite(const Vec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v(i).real()) || !std::isfinite(v(i).imag())) return false;
  }
  return true;
}

}  // namespace

Mat2 sigma_x() {
  Mat2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

Mat2 sigma_y() {
  Mat2 m;
  m << 0.0, -kI, kI, 0.0;
  return m;
}

Mat2 sigma_z() {
  Mat2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

// ---------------------------------------------------------------- StateVector

StateVector::StateVector(Vec amplitudes) : amps_(std::move(amplitudes)) {
  check_dim(amps_.size(), "StateVector");
  if (!all_finite(amps_)) throw Error("StateVector: non-finite amplitude");
  const double n2 = amps_.squaredNorm();
  if (std::abs(n2 - 1.0) > kNormTol) {
    throw Error(fmt::format("StateVector: norm^2 = {:.17g} is not 1", n2));
  }
}

StateVector StateVector::normalized(const Vec& amplitudes) {
  check_dim(amplitudes.size(), "StateVector");
  if (!all_finite(amplitudes)) throw Error("StateVector: non-finite amplitude");
  const double n = amplitudes.norm();
  if (n == 0.0) throw Error("StateVector: cannot normalize the zero vector");
  return StateVector(amplitudes / n);
}

StateVector StateVector::basis(int dim, int index) {
  check_dim(dim, "StateVector");
  if (index < 0 || index >= dim) {
    throw Error(fmt::format("StateVector: basis index {} out of range", index));
  }
  Vec v = Vec::Zero(dim);
  v(index) = 1.0;
  return StateVector(v);
}

StateVector StateVector::qubit(Complex a0, Complex a1) {
  Vec v(2);
  v << a0, a1;
  return normalized(v);
}

StateVector StateVector::truncate_to_qubit() const {
  if (dim() == 2) return *this;
  Vec v(2);
  v << amps_(0), amps_(1);
  if (v.norm() < 1e-12) {
    throw Error("truncate_to_qubit: state has no weight in {|0>,|1>}");
  }
  return normalized(v);
}

// -------------------------------------------------------------- DensityMatrix

DensityMatrix::DensityMatrix(Mat entries) : rho_(std::move(entries)) {
  if (rho_.rows() != rho_.cols()) throw Error("DensityMatrix: not square");
  check_dim(rho_.rows(), "DensityMatrix");
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (!(herm <= kHermTol)) {
    throw Error(fmt::format("DensityMatrix: Hermiticity residual {:.3g}", herm));
  }
  const Complex tr = rho_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(fmt::format("DensityMatrix: trace {:.17g} is not 1", tr.real()));
  }
  // Eigenvalues of the Hermitian part; the anti-Hermitian residue is below kHermTol.
  const Mat herm_part = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(herm_part, Eigen::EigenvaluesOnly);
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -kPsdTol) {
    throw Error(fmt::format("DensityMatrix: negative eigenvalue {:.3g}", min_ev));
  }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  const Vec& a = psi.amplitudes();
  return DensityMatrix(a * a.adjoint());
}

// ----------------------------------------------------------------- GateMatrix

double unitarity_residual(const Mat2& u) {
  return (u.adjoint() * u - Mat2::Identity()).cwiseAbs().maxCoeff();
}

GateMatrix::GateMatrix(const Mat2& u) : u_(u) {
  const double r = unitarity_residual(u_);
  if (!(r < kUnitaryTol)) {
    throw Error(fmt::format("GateMatrix: unitarity residual {:.3g}", r));
  }
}

StateVector GateMatrix::apply(const StateVector& psi) const {
  if (psi.dim() != 2) throw Error("GateMatrix::apply: qubit state required");
  return StateVector::normalized(u_ * psi.amplitudes());
}

// ------------------------------------------------------------------- Bloch etc

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector EigenFrame::field_direction() const {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

EigenFrame eigenframe(double theta, double phi, double omega) {
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(omega)) {
    throw Error("eigenframe: non-finite input");
  }
  if (!(omega > 0.0)) throw Error("eigenframe: omega must be positive");
  if (theta < 0.0 || theta > kPi) throw Error("eigenframe: theta outside [0, pi]");

  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e_minus = std::polar(1.0, -phi);
  const Complex e_plus = std::polar(1.0, phi);

  EigenFrame f;
  f.theta = theta;
  f.phi = phi;
  {
    Vec v(2);
    v << -s * e_minus, c;
    f.lambda_minus = StateVector(v);
  }
  {
    Vec v(2);
    v << -c, -s * e_plus;
    f.lambda_plus = StateVector(v);
  }
  f.energy_plus = 0.5 * omega;
  f.energy_minus = -0.5 * omega;
  return f;
}

BlochVector bloch_vector(const StateVector& psi) {
  if (psi.dim() != 2) {
    throw Error("bloch_vector: qubit state required (use truncate_to_qubit)");
  }
  const Complex a0 = psi[0];
  const Complex a1 = psi[1];
  const Complex coh = std::conj(a0) * a1;
  return {2.0 * coh.real(), 2.0 * coh.imag(), std::norm(a0) - std::norm(a1)};
}

double gate_distance(const GateMatrix& u, const GateMatrix& v) {
  const double overlap = std::abs((u.matrix().adjoint() * v.matrix()).trace()) / 2.0;
  return std::clamp(1.0 - overlap, 0.0, 1.0);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& rho_ideal) {
  if (rho.dim() != rho_ideal.dim()) throw Error("fidelity: dimension mismatch");
  const double tr = (rho_ideal.entries() * rho.entries()).trace().real();
  return std::sqrt(std::clamp(tr, 0.0, 1.0));
}

double fidelity(const StateVector& psi, const StateVector& ideal) {
  if (psi.dim() != ideal.dim()) throw Error("fidelity: dimension mismatch");
  return std::min(1.0, std::abs(ideal.amplitudes().dot(psi.amplitudes())));
}

GateMatrix axis_rotation(const BlochVector& axis, double angle) {
  const double n = axis.norm();
  if (!(n > 0.0)) throw Error("axis_rotation: zero axis");
  const Mat2 gen = (axis.x * sigma_x() + axis.y * sigma_y() + axis.z * sigma_z()) / n;
  return GateMatrix(std::cos(angle / 2.0) * Mat2::Identity() -
                    kI * std::sin(angle / 2.0) * gen);
}

}  // namespace geomgate
