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

#include "geomgate/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/core.h>

#include "geomgate/csv.hpp"
#include "geomgate/propagator.hpp"

namespace geomgate {

namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw Error(fmt::format("{} must be positive and finite, got {}", what, v));
  }
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(fmt::format("{} must be finite", what));
}

PulseStage sweep(double duration, double from, double to, double phi, double omega,
                 bool sta) {
  PulseStage s;
  s.duration = duration;
  s.theta_start = from;
  s.theta_end = to;
  s.phi = phi;
  s.omega = omega;
  s.sta_enabled = sta;
  return s;
}

// Resonant square pulse: theta pinned at pi/2 so Delta = 0 and Omega_M = omega.
PulseStage square(double duration, double phase, double omega) {
  return sweep(duration, kPi / 2.0, kPi / 2.0, phase, omega, false);
}

// Worst acceptable gate distance for a freshly built rotation schedule.
constexpr double kConstructionTolerance = 1e-6;

void verify_rotation(const PulseSchedule& s, const GateSpec& spec, double T, double omega) {
  TwoLevelConfig cfg;
  cfg.omega = omega;
  cfg.T = T;
  cfg.sta_enabled = true;
  cfg.dt = kMaxOmegaDt / omega;
  const GateMatrix got = integrate_gate(s, cfg);
  const double d = gate_distance(got, compose_rotation(spec.theta1, spec.phi0));
  if (!(d < kConstructionTolerance)) {
    throw Error(fmt::format(
        "noncyclic_rotation_schedule: construction misses the target gate "
        "(distance {:.3g}) for theta1={}, phi={}",
        d, spec.theta1, spec.phi0));
  }
}

}  // namespace

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::noncyclic: return "noncyclic";
    case Scheme::cyclic_sgqg: return "cyclic_sgqg";
    case Scheme::rabi: return "rabi";
    case Scheme::composite: return "composite";
  }
  return "unknown";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "noncyclic") return Scheme::noncyclic;
  if (name == "cyclic_sgqg" || name == "sgqg") return Scheme::cyclic_sgqg;
  if (name == "rabi") return Scheme::rabi;
  if (name == "composite") return Scheme::composite;
  throw Error(fmt::format("unknown scheme '{}'", name));
}

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::empty: return "empty";
    case Construction::noncyclic_flip: return "noncyclic_flip";
    case Construction::noncyclic_rotation: return "noncyclic_rotation";
    case Construction::sgqg_orange_slice: return "sgqg_orange_slice";
    case Construction::rabi: return "rabi";
    case Construction::composite: return "composite";
    case Construction::custom: return "custom";
  }
  return "unknown";
}

void GateSpec::validate() const {
  require_finite(phi0, "phi0");
  if (!std::isfinite(theta1) || theta1 < 0.0 || theta1 > kPi / 2.0) {
    throw Error(fmt::format("theta1 must lie in [0, pi/2], got {}", theta1));
  }
}

double PulseStage::theta_dot() const {
  return duration > 0.0 ? (theta_end - theta_start) / duration : 0.0;
}

double PulseStage::theta_at(double local_t) const {
  return theta_start + theta_dot() * local_t;
}

double PulseSchedule::total_time() const {
  double t = 0.0;
  for (const auto& s : stages) t += s.duration;
  return t;
}

std::vector<double> PulseSchedule::boundaries() const {
  std::vector<double> b;
  b.reserve(stages.size() + 1);
  double t = 0.0;
  b.push_back(t);
  for (const auto& s : stages) {
    t += s.duration;
    b.push_back(t);
  }
  return b;
}

PulseSchedule noncyclic_flip_schedule(double phi0, double T, double omega) {
  require_finite(phi0, "phi0");
  require_positive(T, "T");
  require_positive(omega, "omega");
  PulseSchedule s;
  s.construction = Construction::noncyclic_flip;
  s.stages.push_back(sweep(T / 2.0, 0.0, kPi / 2.0, phi0, omega, true));
  s.stages.push_back(sweep(T / 2.0, kPi / 2.0, 0.0, phi0 + kPi, omega, true));
  return s;
}

PulseSchedule noncyclic_rotation_schedule(const GateSpec& spec, double T, double omega) {
  spec.validate();
  require_positive(T, "T");
  require_positive(omega, "omega");
  if (spec.scheme != Scheme::noncyclic) {
    throw Error("noncyclic_rotation_schedule: spec.scheme must be noncyclic");
  }
  if (spec.theta1 >= kPi / 2.0) {
    throw Error("noncyclic_rotation_schedule: theta1 must be < pi/2 "
                "(use noncyclic_flip_schedule for the flip)");
  }
  PulseSchedule s;
  if (spec.theta1 == 0.0) {
    s.construction = Construction::empty;
    return s;
  }
  const double t1 = spec.theta1;
  const double d = t1 * T / kPi;
  s.construction = Construction::noncyclic_rotation;
  s.stages.push_back(sweep(d, 0.0, t1, spec.phi0, omega, true));
  s.stages.push_back(sweep(d, kPi - t1, kPi - 2.0 * t1, spec.phi0 + kPi, omega, true));
  verify_rotation(s, spec, T, omega);
  return s;
}

PulseSchedule sgqg_schedule(const GateSpec& spec, double T, double omega) {
  spec.validate();
  require_positive(T, "T");
  require_positive(omega, "omega");
  if (spec.scheme != Scheme::cyclic_sgqg) {
    throw Error("sgqg_schedule: spec.scheme must be cyclic_sgqg");
  }
  // Field azimuths: the loop starts on the rotation axis, and the return
  // longitude is offset by theta1. After the reversal at t = T the field is
  // the antipode of the point the state is tracking, hence the +pi phases
  // and the mirrored theta ranges.
  const double axis = spec.phi0 + kPi / 2.0;
  const double ret = axis + spec.theta1;
  const double h = T / 2.0;
  PulseSchedule s;
  s.construction = Construction::sgqg_orange_slice;
  s.stages.push_back(sweep(h, kPi / 2.0, kPi, axis, omega, true));
  s.stages.push_back(sweep(h, kPi, kPi / 2.0, ret, omega, true));
  s.stages.push_back(sweep(h, kPi / 2.0, kPi, ret + kPi, omega, true));
  s.stages.push_back(sweep(h, kPi, kPi / 2.0, axis + kPi, omega, true));
  return s;
}

PulseSchedule rabi_schedule(double phi0, double omega, double angle) {
  require_finite(phi0, "phi0");
  require_positive(omega, "omega");
  if (!std::isfinite(angle) || angle < 0.0) throw Error("rabi_schedule: bad angle");
  PulseSchedule s;
  s.construction = Construction::rabi;
  if (angle > 0.0) s.stages.push_back(square(angle / omega, phi0 + kPi / 2.0, omega));
  return s;
}

PulseSchedule composite_schedule(double omega) {
  require_positive(omega, "omega");
  constexpr double y_phase = kPi / 2.0;
  constexpr double x_phase = 0.0;
  PulseSchedule s;
  s.construction = Construction::composite;
  s.stages.push_back(square(kPi / (2.0 * omega), y_phase, omega));
  s.stages.push_back(square(kPi / omega, x_phase, omega));
  s.stages.push_back(square(kPi / (2.0 * omega), y_phase, omega));
  return s;
}

PulseSchedule build_schedule(const GateSpec& spec, double T, double omega) {
  spec.validate();
  switch (spec.scheme) {
    case Scheme::noncyclic:
      if (spec.theta1 >= kPi / 2.0) return noncyclic_flip_schedule(spec.phi0, T, omega);
      return noncyclic_rotation_schedule(spec, T, omega);
    case Scheme::cyclic_sgqg:
      return sgqg_schedule(spec, T, omega);
    case Scheme::rabi:
      return rabi_schedule(spec.phi0, omega, 2.0 * spec.theta1);
    case Scheme::composite:
      return composite_schedule(omega);
  }
  throw Error("build_schedule: unknown scheme");
}

WaveformSample sample_stage(const PulseStage& stage, double local_t, double t_offset) {
  const double theta = stage.theta_at(local_t);
  WaveformSample w;
  w.t = t_offset + local_t;
  w.omega_m = stage.drive_scale * stage.omega * std::sin(theta);
  w.delta = stage.detuning_scale * stage.omega * std::cos(theta);
  w.phi = stage.phi;
  w.theta_dot = stage.sta_enabled ? stage.aux_scale * stage.theta_dot() : 0.0;
  return w;
}

WaveformSample sample_waveform(const PulseSchedule& schedule, double t) {
  const double total = schedule.total_time();
  const double slack = 1e-12 * std::max(total, 1e-300);
  if (schedule.stages.empty() || total <= 0.0) {
    throw Error("sample_waveform: empty schedule");
  }
  if (!std::isfinite(t) || t < -slack || t > total + slack) {
    throw Error(fmt::format("sample_waveform: t={} outside [0, {}]", t, total));
  }
  t = std::clamp(t, 0.0, total);
  double start = 0.0;
  const PulseStage* last = nullptr;
  double last_start = 0.0;
  for (const auto& st : schedule.stages) {
    if (st.duration <= 0.0) continue;
    const double end = start + st.duration;
    if (t < end) return sample_stage(st, t - start, start);
    last = &st;
    last_start = start;
    start = end;
  }
  // t == total: the end of the final stage.
  return sample_stage(*last, t - last_start, last_start);
}

std::vector<WaveformSample> sample_uniform(const PulseSchedule& schedule, int n_samples) {
  if (n_samples < 2) throw Error("waveform export needs at least 2 samples");
  const double total = schedule.total_time();
  std::vector<WaveformSample> out;
  out.reserve(static_cast<std::size_t>(n_samples));
  for (int k = 0; k < n_samples; ++k) {
    const double t = k == n_samples - 1 ? total : total * k / (n_samples - 1);
    out.push_back(sample_waveform(schedule, t));
  }
  return out;
}

void write_waveform_csv(const PulseSchedule& schedule, int n_samples, std::ostream& out) {
  const auto samples = sample_uniform(schedule, n_samples);
  out << kWaveformCsvHeader << '\n';
  for (const auto& w : samples) {
    out << format_number(w.t) << ',' << format_number(w.omega_m) << ','
        << format_number(w.delta) << ',' << format_number(w.phi) << ','
        << format_number(w.theta_dot) << '\n';
  }
}

void export_waveform_csv(const PulseSchedule& schedule, int n_samples,
                         const std::filesystem::path& path) {
  const auto samples = sample_uniform(schedule, n_samples);
  CsvWriter csv(path);
  csv.header(kWaveformCsvHeader);
  for (const auto& w : samples) csv.row({w.t, w.omega_m, w.delta, w.phi, w.theta_dot});
  csv.close();
}

}  // namespace geomgate
