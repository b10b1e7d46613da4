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

#include <array>
#include <cstdint>
#include <vector>

#include "geomgate/propagator.hpp"
#include "geomgate/quantum_core.hpp"
#include "geomgate/schedule.hpp"

namespace geomgate {

/// Relative phase chi of a qubit state: arccos(<sx> / sqrt(<sx>^2 + <sy>^2)),
/// negated when <sy> < 0, so chi lies in (-pi, pi]. Throws near the poles.
double relative_phase(const StateVector& psi);

/// Systematic amplitude error Omega' = eta * Omega. Scales the Rabi frequency
/// and the counter-diabatic channel; the detuning too when `scale_detuning`.
struct SystematicError {
  double eta = 1.0;
  bool scale_detuning = false;
};

PulseSchedule apply_systematic_error(const PulseSchedule& schedule, const SystematicError& err);

/// Piecewise-constant multiplicative amplitude noise (1 + gamma_i) over
/// n_points equal sub-intervals of a schedule.
struct NoiseRealization {
  int n_points = 0;
  std::vector<double> values;
  std::uint64_t seed = 0;
  // Whether the counter-diabatic channel sees the same fluctuation as the drive.
  bool apply_to_aux = true;

  /// gamma_i uniform on (-0.2 * scale, 0.2 * scale), then mean-subtracted.
  /// Bit-reproducible for a given (n_points, seed, scale).
  static NoiseRealization generate(int n_points, std::uint64_t seed, double scale = 1.0);
  static NoiseRealization zeros(int n_points);
};

inline constexpr double kNoiseBound = 0.2;

/// Independent seed for the `index`-th realization drawn from `base` (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

PulseSchedule apply_random_noise(const PulseSchedule& schedule, const NoiseRealization& noise);

struct LeakageResult {
  double p2 = 0.0;
  double kappa = 0.0;
};

/// Final population of |2> of a three-level run.
LeakageResult leakage(const PureTrajectory& traj, double kappa);
LeakageResult leakage(const StateVector& final_state, double kappa);

/// |0>, |1>, |+>, |->, |+i>, |-i>.
std::array<StateVector, 6> cardinal_states();

/// Mean over cardinal states of |<V psi | U psi>| (actual U, ideal V).
double cardinal_average_fidelity(const GateMatrix& actual, const GateMatrix& ideal);

}  // namespace geomgate
