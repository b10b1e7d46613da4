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

#include <utility>
#include <vector>

#include "geomgate/quantum_core.hpp"
#include "geomgate/schedule.hpp"

namespace geomgate {

/// Step-size contract: omega * dt must not exceed this.
inline constexpr double kMaxOmegaDt = 0.01;

struct TwoLevelConfig {
  double omega = 0.0;  // rad/s, field magnitude
  double T = 0.0;      // s, full theta sweep time
  bool sta_enabled = true;
  double dt = 0.0;  // s, largest integrator step

  /// Config with dt = omega_dt / omega.
  static TwoLevelConfig from_omega_t(double omega, double omega_t, bool sta = true,
                                     double omega_dt = kMaxOmegaDt);

  void validate() const;
};

/// Transmon-like ladder {|0>,|1>,|2>}: the |1>-|2> coupling and its
/// counter-diabatic term are h times those of |0>-|1>, and the |2> detuning is
/// Delta' = Delta - Delta0 with Delta0 = kappa * omega.
struct ThreeLevelConfig {
  TwoLevelConfig base;
  double h = 0.8;
  double kappa = 1.0;

  double delta0() const { return kappa * base.omega; }
  void validate() const;
};

struct DecayConfig {
  double gamma = 0.0;  // rad/s

  void validate() const;
};

/// Closed-form adiabatic transport between polar angles theta_a and theta_b
/// along a fixed azimuth, carrying dynamical phases a_plus / a_minus on the
/// upper / lower eigenstates.
struct TransportOperator {
  GateMatrix matrix = GateMatrix::identity();
  double a_plus = 0.0;
  double a_minus = 0.0;
};

template <class State>
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;

  const State& final_state() const { return states.back(); }
  std::size_t size() const { return times.size(); }
};

using PureTrajectory = Trajectory<StateVector>;
using MixedTrajectory = Trajectory<DensityMatrix>;

/// H/hbar in rad/s: [[Delta/2, c], [c*, -Delta/2]], c = (Omega_M - i thetadot) e^{-i phi} / 2.
Mat2 hamiltonian2(const WaveformSample& w);

/// H/hbar for the three-level ladder (Hermitian completion of the upper
/// triangle): diag(0, -Delta, -Delta'), couplings
/// (Omega_M - i thetadot) e^{-i phi}/2 and h (Omega_M - i thetadot) e^{-i phi}/2.
Mat3 hamiltonian3(const WaveformSample& w, const ThreeLevelConfig& cfg);

TransportOperator transport_operator(double theta_a, double theta_b, double phi,
                                     double a_plus, double a_minus);

/// U(theta: t1 -> 0, phi + pi) U(theta: 0 -> t1, phi), both legs carrying the
/// same dynamical phases. For a_plus = -a_minus this is
/// [[cos t1 e^{-2i a+}, -sin t1 e^{-i phi}], [sin t1 e^{i phi}, cos t1 e^{-2i a-}]].
GateMatrix compose_flip(double theta1, double phi, double a_plus, double a_minus);

/// [[cos t1, -sin t1 e^{-i phi}], [sin t1 e^{i phi}, cos t1]], theta1 in [0, pi/2).
GateMatrix compose_rotation(double theta1, double phi);

/// Ideal unitary of a GateSpec. composite always targets sigma_x.
GateMatrix ideal_gate(const GateSpec& spec);

/// A+- = +-(omega/2) * duration.
std::pair<double, double> dynamical_phase(const PulseStage& stage);

/// Fixed-step RK4 of i psi' = H psi; every stage is integrated on its own grid
/// so discontinuities fall on step boundaries. Samples the state at every step.
PureTrajectory evolve_schrodinger(const PulseSchedule& schedule, const StateVector& psi0,
                                  const TwoLevelConfig& cfg);
PureTrajectory evolve_schrodinger(const PulseSchedule& schedule, const StateVector& psi0,
                                  const ThreeLevelConfig& cfg);

/// Final state only, without storing the trajectory.
StateVector propagate(const PulseSchedule& schedule, const StateVector& psi0,
                      const TwoLevelConfig& cfg);
StateVector propagate(const PulseSchedule& schedule, const StateVector& psi0,
                      const ThreeLevelConfig& cfg);

/// Gate realized by the schedule, from the evolution of |0> and |1>.
GateMatrix integrate_gate(const PulseSchedule& schedule, const TwoLevelConfig& cfg);

/// rho' = -i[H, rho] + 2 L rho L^dag - L^dag L rho - rho L^dag L with
/// L = sqrt(gamma) |0><1|. Note the factor 2: the population of |1> decays
/// as exp(-2 gamma t).
MixedTrajectory evolve_lindblad(const PulseSchedule& schedule, const DensityMatrix& rho0,
                                const TwoLevelConfig& cfg, const DecayConfig& decay);

DensityMatrix propagate_lindblad(const PulseSchedule& schedule, const DensityMatrix& rho0,
                                 const TwoLevelConfig& cfg, const DecayConfig& decay);

}  // namespace geomgate
