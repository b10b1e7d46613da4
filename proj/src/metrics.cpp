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

#include "geomgate/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <fmt/core.h>

namespace geomgate {

namespace {

constexpr double kPoleTolerance = 1e-9;

// Uniform on the open interval (0, 1) from the top 53 bits.
double open_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

double relative_phase(const StateVector& psi) {
  const BlochVector b = bloch_vector(psi);
  const double r = std::hypot(b.x, b.y);
  if (!(r > kPoleTolerance)) {
    throw Error("relative_phase: state is at a pole, phase is singular");
  }
  const double chi = std::acos(std::clamp(b.x / r, -1.0, 1.0));
  return b.y < 0.0 ? -chi : chi;
}

PulseSchedule apply_systematic_error(const PulseSchedule& schedule, const SystematicError& err) {
  if (!std::isfinite(err.eta) || !(err.eta > 0.0)) {
    throw Error("apply_systematic_error: eta must be positive");
  }
  PulseSchedule out = schedule;
  if (err.eta == 1.0) return out;
  for (auto& st : out.stages) {
    st.drive_scale *= err.eta;
    st.aux_scale *= err.eta;
    if (err.scale_detuning) st.detuning_scale *= err.eta;
  }
  out.perturbed = true;
  return out;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

NoiseRealization NoiseRealization::generate(int n_points, std::uint64_t seed, double scale) {
  if (n_points < 1) throw Error("NoiseRealization: n_points must be >= 1");
  if (!std::isfinite(scale) || scale < 0.0 || scale > 1.0) {
    throw Error("NoiseRealization: scale must lie in [0, 1]");
  }
  NoiseRealization n;
  n.n_points = n_points;
  n.seed = seed;
  n.values.resize(static_cast<std::size_t>(n_points));
  std::mt19937_64 rng(seed);
  const double bound = kNoiseBound * scale;
  for (double& g : n.values) g = bound * (2.0 * open_unit(rng) - 1.0);
  const double mean = std::accumulate(n.values.begin(), n.values.end(), 0.0) / n_points;
  for (double& g : n.values) g -= mean;
  return n;
}

NoiseRealization NoiseRealization::zeros(int n_points) {
  if (n_points < 1) throw Error("NoiseRealization: n_points must be >= 1");
  NoiseRealization n;
  n.n_points = n_points;
  n.values.assign(static_cast<std::size_t>(n_points), 0.0);
  return n;
}

PulseSchedule apply_random_noise(const PulseSchedule& schedule, const NoiseRealization& noise) {
  if (noise.n_points < 1 || noise.values.size() != static_cast<std::size_t>(noise.n_points)) {
    throw Error("apply_random_noise: malformed noise realization");
  }
  const double total = schedule.total_time();
  PulseSchedule out;
  out.construction = schedule.construction;
  out.perturbed = true;
  if (total <= 0.0) return out;

  const int n = noise.n_points;
  const double seg = total / n;
  const double eps = 1e-12 * total;
  double t0 = 0.0;
  for (const PulseStage& st : schedule.stages) {
    if (st.duration <= 0.0) continue;
    const double t1 = t0 + st.duration;
    // Cut points strictly inside the stage, snapped away from its ends.
    std::vector<double> cuts{t0};
    for (int k = static_cast<int>(std::floor(t0 / seg)) + 1; k < n; ++k) {
      const double b = k * seg;
      if (b >= t1 - eps) break;
      if (b > t0 + eps) cuts.push_back(b);
    }
    cuts.push_back(t1);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double u = cuts[i], v = cuts[i + 1];
      const int k = std::clamp(static_cast<int>(std::floor(0.5 * (u + v) / seg)), 0, n - 1);
      const double g = noise.values[static_cast<std::size_t>(k)];
      PulseStage piece = st;
      piece.duration = v - u;
      piece.theta_start = st.theta_at(u - t0);
      piece.theta_end = i + 2 == cuts.size() ? st.theta_end : st.theta_at(v - t0);
      piece.drive_scale = st.drive_scale * (1.0 + g);
      if (noise.apply_to_aux) piece.aux_scale = st.aux_scale * (1.0 + g);
      out.stages.push_back(piece);
    }
    t0 = t1;
  }
  return out;
}

LeakageResult leakage(const StateVector& final_state, double kappa) {
  if (final_state.dim() != 3) throw Error("leakage: three-level state required");
  return {std::clamp(final_state.population(2), 0.0, 1.0), kappa};
}

LeakageResult leakage(const PureTrajectory& traj, double kappa) {
  if (traj.states.empty()) throw Error("leakage: empty trajectory");
  return leakage(traj.final_state(), kappa);
}

std::array<StateVector, 6> cardinal_states() {
  const double r = 1.0 / std::sqrt(2.0);
  return {StateVector::basis(2, 0),           StateVector::basis(2, 1),
          StateVector::qubit(r, r),           StateVector::qubit(r, -r),
          StateVector::qubit(r, kI * r),      StateVector::qubit(r, -kI * r)};
}

double cardinal_average_fidelity(const GateMatrix& actual, const GateMatrix& ideal) {
  double sum = 0.0;
  for (const auto& psi : cardinal_states()) {
    sum += fidelity(actual.apply(psi), ideal.apply(psi));
  }
  return sum / 6.0;
}

}  // namespace geomgate
