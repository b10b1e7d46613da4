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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "geomgate/csv.hpp"
#include "geomgate/metrics.hpp"
#include "geomgate/propagator.hpp"
#include "geomgate/schedule.hpp"

namespace geomgate {

std::string_view version_string();

/// Parses a scalar such as "0.8", "5e6", "100pi", "pi/8", "2pi*5MHz" or
/// "2*pi*20kHz". Factors are joined by '*' or '/' left to right; each is a
/// number, "pi", or a number with a trailing "pi" and/or a Hz/kHz/MHz/GHz suffix.
double parse_quantity(std::string_view text);

/// Comma-separated quantities and inclusive ranges "start:step:stop".
std::vector<double> parse_list(std::string_view text);

/// Inclusive arithmetic grid; the count is rounded so accumulated error does
/// not drop or add the last point.
std::vector<double> make_grid(double start, double step, double stop);

struct ExperimentConfig {
  double omega = 2.0 * kPi * 5e6;  // rad/s
  double omega_T_over_pi = 5.0;
  double gamma = 2.0 * kPi * 2e4;  // rad/s
  double h = 0.8;
  std::vector<double> kappa_grid = make_grid(0.5, 0.5, 5.0);
  std::vector<double> eta_grid = make_grid(0.8, 0.01, 1.2);
  int n_noise_points = 1000;
  int n_noise_repeats = 50;
  std::uint64_t seed = 20240611;
  double dt_contract = kMaxOmegaDt;  // omega * dt
  double noise_scale = 1.0;
  bool noise_on_aux = true;
  bool sta = true;

  double T() const { return omega_T_over_pi * kPi / omega; }
  TwoLevelConfig two_level() const;
  void validate() const;

  /// Sets one `key = value` entry. Throws Error on unknown keys or bad values.
  void set(std::string_view key, std::string_view value);

  /// Reads a flat `key = value` file; '#' starts a comment.
  static ExperimentConfig load(const std::filesystem::path& path);

  /// Every field on one line, numbers in round-trip form.
  std::string canonical() const;

  /// 64-bit FNV-1a of canonical().
  std::uint64_t hash() const;
};

/// Provenance header written at the top of every CSV.
struct RunRecord {
  std::string scenario;
  std::uint64_t config_hash = 0;
  std::string version;

  static RunRecord make(std::string_view scenario, const ExperimentConfig& cfg);
  void write(CsvWriter& out) const;
};

// fig2 ---------------------------------------------------------------------

enum class FlipGate { sigma_x, sigma_y };

FlipGate parse_flip_gate(std::string_view name);

struct Fig2Row {
  double t = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  double chi_over_pi = 0.0;  // nan at the poles
};

struct Fig2Result {
  FlipGate gate = FlipGate::sigma_x;
  std::vector<Fig2Row> rows;
  StateVector final_state = StateVector::basis(2, 0);
  StateVector expected_state = StateVector::basis(2, 0);
  double final_fidelity = 0.0;
};

Fig2Result run_fig2(FlipGate gate, const ExperimentConfig& cfg);
void write_fig2(const Fig2Result& r, const ExperimentConfig& cfg,
                const std::filesystem::path& dir);

// fig3a --------------------------------------------------------------------

struct Fig3aRow {
  double eta = 0.0;
  // Fidelity of the output for input |1>.
  double noncyclic = 0.0;
  double rabi = 0.0;
  double composite = 0.0;
  // Average over the six cardinal inputs.
  double noncyclic_avg = 0.0;
  double rabi_avg = 0.0;
  double composite_avg = 0.0;
};

std::vector<Fig3aRow> run_fig3a(const ExperimentConfig& cfg);
void write_fig3a(const std::vector<Fig3aRow>& rows, const ExperimentConfig& cfg,
                 const std::filesystem::path& dir);

// fig3b --------------------------------------------------------------------

struct Fig3bTrace {
  std::string scheme;
  double duration = 0.0;
  MixedTrajectory trajectory;
  double fidelity = 0.0;         // with decay
  double fidelity_closed = 0.0;  // gamma = 0
  double max_trace_drift = 0.0;
};

struct Fig3bResult {
  Fig3bTrace noncyclic;
  Fig3bTrace sgqg;
};

Fig3bResult run_fig3b(const ExperimentConfig& cfg);
void write_fig3b(const Fig3bResult& r, const ExperimentConfig& cfg,
                 const std::filesystem::path& dir);

// fig3c --------------------------------------------------------------------

struct Fig3cRow {
  double kappa = 0.0;
  double p2_noncyclic = 0.0;
  double p2_sgqg = 0.0;
  double ratio = 0.0;  // nan when p2_sgqg == 0
};

/// P2 after the theta1 = pi/8 schedules from |0>.
Fig3cRow leakage_point(double kappa, const ExperimentConfig& cfg);
std::vector<Fig3cRow> run_fig3c(const ExperimentConfig& cfg);
void write_fig3c(const std::vector<Fig3cRow>& rows, const ExperimentConfig& cfg,
                 const std::filesystem::path& dir);

// fig3d --------------------------------------------------------------------

struct NoiseStats {
  std::string scheme;
  int n_points = 0;
  std::vector<double> infidelity;  // 1 - F per repeat
  double mean = 0.0;
  double stderr_mean = 0.0;
  double mean_sq = 0.0;  // mean of 1 - F^2
  double stderr_sq = 0.0;
};

struct Fig3dResult {
  std::vector<std::uint64_t> seeds;
  NoiseStats noncyclic;
  NoiseStats sgqg;          // same number of noise points, twice the duration
  NoiseStats sgqg_matched;  // twice the points, same noise frequency
};

Fig3dResult run_fig3d(const ExperimentConfig& cfg);
void write_fig3d(const Fig3dResult& r, const ExperimentConfig& cfg,
                 const std::filesystem::path& dir);

// fig4 ---------------------------------------------------------------------

struct Fig4Trace {
  std::string name;
  PulseSchedule schedule;
  std::vector<WaveformSample> samples;
};

inline constexpr int kFig4Samples = 1001;

std::vector<Fig4Trace> run_fig4(const ExperimentConfig& cfg);
/// Time in units of T, amplitudes in units of omega.
void write_fig4(const std::vector<Fig4Trace>& traces, const ExperimentConfig& cfg,
                const std::filesystem::path& dir);

}  // namespace geomgate
