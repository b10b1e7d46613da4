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

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "geomgate/quantum_core.hpp"

namespace geomgate {

enum class Scheme { noncyclic, cyclic_sgqg, rabi, composite };

std::string_view to_string(Scheme s);
Scheme parse_scheme(std::string_view name);

/// Target single-qubit gate.
///
/// The ideal unitary is [[cos t1, -sin t1 e^{-i phi0}], [sin t1 e^{i phi0}, cos t1]],
/// a rotation by 2*theta1 about the axis (-sin phi0, cos phi0, 0). theta1 = pi/2
/// is a flip: sigma_x up to phase for phi0 = pi/2, sigma_y for phi0 = 0.
///
/// Naming: "pi/8 rotation gate" in this project means theta1 = pi/8, i.e. a
/// rotation angle of pi/4 in the exp(-i angle/2 n.sigma) convention.
struct GateSpec {
  double phi0 = 0.0;
  double theta1 = 0.0;
  Scheme scheme = Scheme::noncyclic;

  void validate() const;
};

/// One segment of constant azimuth phi and constant field magnitude omega,
/// along which the polar control angle moves linearly from theta_start to
/// theta_end. The sampled drive is
///   Omega_M = drive_scale * omega * sin(theta),
///   Delta   = detuning_scale * omega * cos(theta),
///   aux     = aux_scale * dtheta/dt      (counter-diabatic channel).
struct PulseStage {
  double duration = 0.0;
  double theta_start = 0.0;
  double theta_end = 0.0;
  double phi = 0.0;
  double omega = 0.0;
  bool sta_enabled = true;
  // Multipliers set by the error and noise models; exactly 1 when unperturbed.
  double drive_scale = 1.0;
  double aux_scale = 1.0;
  double detuning_scale = 1.0;

  double theta_dot() const;
  double theta_at(double local_t) const;
};

/// How a schedule was synthesized. Recorded so exported data and logs can
/// tell the stage-two variants apart.
enum class Construction {
  empty,
  noncyclic_flip,
  noncyclic_rotation,  // second segment theta: pi - t1 -> pi - 2 t1 at phi0 + pi
  sgqg_orange_slice,
  rabi,
  composite,
  custom,
};

std::string_view to_string(Construction c);

struct PulseSchedule {
  std::vector<PulseStage> stages;
  Construction construction = Construction::custom;
  // Set once an error or noise model has been applied; such a schedule no
  // longer keeps Omega_M^2 + Delta^2 = omega^2.
  bool perturbed = false;

  double total_time() const;
  /// Start time of each stage followed by the end time of the last one.
  std::vector<double> boundaries() const;
};

struct WaveformSample {
  double t = 0.0;
  double omega_m = 0.0;
  double delta = 0.0;
  double phi = 0.0;
  double theta_dot = 0.0;
};

/// Two T/2 stages: theta 0 -> pi/2 at phi0, then pi/2 -> 0 at phi0 + pi.
PulseSchedule noncyclic_flip_schedule(double phi0, double T, double omega);

/// Two stages of theta1*T/pi each: theta 0 -> t1 at phi0, then
/// pi - t1 -> pi - 2 t1 at phi0 + pi. The construction is checked against
/// the ideal gate by numerical integration before it is returned.
PulseSchedule noncyclic_rotation_schedule(const GateSpec& spec, double T, double omega);

/// Cyclic "orange slice" loop of fixed duration 2T: the field starts on the
/// equator at azimuth phi0 + pi/2 (the rotation axis), runs down to the south
/// pole, back up a second longitude offset by theta1, and home again. The
/// field is reversed halfway through (t = T) to cancel the dynamical phase.
/// The enclosed solid angle 2*theta1 sets the rotation angle.
PulseSchedule sgqg_schedule(const GateSpec& spec, double T, double omega);

/// Single resonant square pulse (Delta = 0, STA off) of duration angle/omega
/// rotating about the same axis as GateSpec{phi0, angle/2}.
PulseSchedule rabi_schedule(double phi0, double omega, double angle = kPi);

/// Square resonant pulses R_y(pi/2), R_x(pi), R_y(pi/2) in temporal order.
PulseSchedule composite_schedule(double omega);

/// Dispatches on spec.scheme. For `rabi`, the rotation angle is 2*theta1.
/// `composite` only realizes the sigma_x flip and ignores theta1/phi0.
PulseSchedule build_schedule(const GateSpec& spec, double T, double omega);

/// Drive parameters at a stage-local time.
WaveformSample sample_stage(const PulseStage& stage, double local_t, double t_offset = 0.0);

/// Drive parameters at absolute time t in [0, total_time]. Right-continuous at
/// stage boundaries.
WaveformSample sample_waveform(const PulseSchedule& schedule, double t);

inline constexpr std::string_view kWaveformCsvHeader =
    "t_s,omega_m_rad_s,delta_rad_s,phi_rad,theta_dot_rad_s";

/// Uniform samples t_k = k * total / (n - 1).
std::vector<WaveformSample> sample_uniform(const PulseSchedule& schedule, int n_samples);

void write_waveform_csv(const PulseSchedule& schedule, int n_samples, std::ostream& out);

/// Writes the waveform table to `path`; I/O errors name the path.
void export_waveform_csv(const PulseSchedule& schedule, int n_samples,
                         const std::filesystem::path& path);

}  // namespace geomgate
