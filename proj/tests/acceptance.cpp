// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <fmt/core.h>

#include "geomgate/experiments.hpp"
#include "oracles.hpp"

using namespace geomgate;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const ExperimentConfig kDefaults{};

fs::path work_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() /
                     fmt::format("geomgate_acceptance_{}", ::getpid()) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::vector<double>> read_rows(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

// Every scenario at the default configuration, written to `dir`.
void run_all_scenarios(const fs::path& dir) {
  const ExperimentConfig& c = kDefaults;
  write_fig2(run_fig2(FlipGate::sigma_x, c), c, dir);
  write_fig2(run_fig2(FlipGate::sigma_y, c), c, dir);
  write_fig3a(run_fig3a(c), c, dir);
  write_fig3b(run_fig3b(c), c, dir);
  write_fig3c(run_fig3c(c), c, dir);
  write_fig3d(run_fig3d(c), c, dir);
  write_fig4(run_fig4(c), c, dir);
}

Outcome spin_echo_identities() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> a(-50.0, 50.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double ap = a(rng), am = a(rng);
    worst = std::max(worst, oracle::phase_distance(compose_flip(kPi / 2, kPi / 2, ap, am).matrix(),
                                                   sigma_x()));
    worst = std::max(worst, oracle::phase_distance(compose_flip(kPi / 2, 0.0, ap, am).matrix(),
                                                   sigma_y()));
  }
  return {worst < 1e-12, fmt::format("max distance to sigma_x/sigma_y {:.2e} over 100 random A+-", worst)};
}

Outcome closed_form_vs_integrator() {
  const auto t0 = Clock::now();
  const double omega = kDefaults.omega, T = kDefaults.T();
  const TwoLevelConfig tl = TwoLevelConfig::from_omega_t(omega, 5 * kPi, true);
  std::mt19937_64 rng(103);
  std::uniform_real_distribution<double> th(0.0, kPi / 2), ph(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    double t1 = th(rng);
    while (t1 >= kPi / 2) t1 = th(rng);
    const double phi = ph(rng);
    const GateMatrix g = integrate_gate(noncyclic_rotation_schedule({phi, t1, Scheme::noncyclic}, T, omega), tl);
    worst = std::max(worst, oracle::phase_distance(g.matrix(), compose_rotation(t1, phi).matrix()));
  }
  const double secs = seconds_since(t0);
  return {worst < 1e-6 && secs < 10.0,
          fmt::format("max distance {:.2e} over 20 random (theta1, phi), {:.2f} s", worst, secs)};
}

Outcome omega_independence() {
  const double omega = kDefaults.omega;
  const TwoLevelConfig a = TwoLevelConfig::from_omega_t(omega, 5 * kPi);
  const TwoLevelConfig b = TwoLevelConfig::from_omega_t(omega, 10 * kPi);
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> th(0.0, kPi / 2), ph(-kPi, kPi);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const GateSpec spec{ph(rng), th(rng), Scheme::noncyclic};
    const GateMatrix ga = integrate_gate(build_schedule(spec, a.T, omega), a);
    const GateMatrix gb = integrate_gate(build_schedule(spec, b.T, omega), b);
    worst = std::max(worst, gate_distance(ga, gb));
  }
  return {worst < 1e-6, fmt::format("max distance between OmegaT = 5pi and 10pi gates {:.2e}", worst)};
}

Outcome amplitude_robustness(const std::vector<Fig3aRow>& rows) {
  double min_nc = 1.0, rabi_11 = std::nan("");
  int composite_violations = 0, in_window = 0;
  for (const auto& r : rows) {
    if (std::abs(r.eta - 1.0) <= 0.1 + 1e-12) {
      ++in_window;
      min_nc = std::min(min_nc, r.noncyclic);
      if (r.eta != 1.0 && r.composite < r.rabi) ++composite_violations;
    }
    if (std::abs(r.eta - 1.1) < 1e-12) rabi_11 = r.rabi;
  }
  const double analytic = oracle::rabi_flip_fidelity(1.1);
  const bool pass = in_window == 21 && min_nc >= 0.99 && std::abs(rabi_11 - 0.9877) <= 0.001 &&
                    std::abs(rabi_11 - analytic) <= 0.001 && composite_violations == 0;
  return {pass, fmt::format("min non-cyclic F on [0.9, 1.1] = {:.6f}; Rabi F(1.1) = {:.6f} "
                            "(analytic {:.6f}); composite < Rabi at {} of {} points",
                            min_nc, rabi_11, analytic, composite_violations, in_window - 1)};
}

Outcome decay_comparison(const Fig3bResult& r, double secs) {
  const double ratio = r.sgqg.duration / r.noncyclic.duration;
  const double drift = std::max(r.noncyclic.max_trace_drift, r.sgqg.max_trace_drift);
  const bool pass = r.noncyclic.fidelity > r.sgqg.fidelity && std::abs(ratio - 8.0) < 1e-12 &&
                    drift < 1e-6 && secs < 60.0;
  return {pass, fmt::format("F non-cyclic {:.8f} vs SGQG {:.8f}; duration ratio 1:{:.12g}; "
                            "trace drift {:.1e}; {:.1f} s",
                            r.noncyclic.fidelity, r.sgqg.fidelity, ratio, drift, secs)};
}

Outcome leakage(const std::vector<Fig3cRow>& rows) {
  double min_ratio = INFINITY, at = 0.0;
  for (const auto& r : rows) {
    if (r.kappa >= 0.5 && r.kappa <= 5.0 && r.ratio < min_ratio) {
      min_ratio = r.ratio;
      at = r.kappa;
    }
  }
  const Fig3cRow anchor = leakage_point(100.0, kDefaults);
  const bool pass = min_ratio <= 0.1 && anchor.p2_noncyclic < 1e-6 && anchor.p2_sgqg < 1e-6;
  return {pass, fmt::format("min P2 ratio {:.4f} at kappa = {:g}; kappa = 100: P2 non-cyclic "
                            "{:.3e}, SGQG {:.3e} (bound 1e-6)",
                            min_ratio, at, anchor.p2_noncyclic, anchor.p2_sgqg)};
}

Outcome noise(const Fig3dResult& r, double secs) {
  const auto pooled = [](const NoiseStats& a, const NoiseStats& b) {
    return std::hypot(a.stderr_mean, b.stderr_mean);
  };
  const double gap_unmatched = r.sgqg.mean - r.noncyclic.mean;
  const double se_unmatched = pooled(r.sgqg, r.noncyclic);
  const double gap_matched = r.sgqg_matched.mean - r.noncyclic.mean;
  const double se_matched = pooled(r.sgqg_matched, r.noncyclic);
  const bool worse = gap_unmatched > 2 * se_unmatched;
  const bool matched = std::abs(gap_matched) <= 2 * se_matched;
  return {worse && matched && secs < 300.0,
          fmt::format("1-F: non-cyclic {:.3e} +- {:.1e}, SGQG {:.3e} +- {:.1e} (gap {:.1f} SE), "
                      "SGQG matched {:.3e} +- {:.1e} (gap {:.1f} SE); {:.1f} s",
                      r.noncyclic.mean, r.noncyclic.stderr_mean, r.sgqg.mean, r.sgqg.stderr_mean,
                      gap_unmatched / se_unmatched, r.sgqg_matched.mean,
                      r.sgqg_matched.stderr_mean, gap_matched / se_matched, secs)};
}

Outcome analytic_decay() {
  const double gamma = kDefaults.gamma, omega = kDefaults.omega;
  PulseStage idle;
  idle.duration = 1.5 / gamma;
  idle.omega = omega;
  idle.sta_enabled = false;
  idle.drive_scale = idle.detuning_scale = 0.0;
  PulseSchedule s;
  s.stages = {idle};
  s.perturbed = true;
  const auto traj = evolve_lindblad(s, DensityMatrix::pure(StateVector::basis(2, 1)),
                                    TwoLevelConfig::from_omega_t(omega, 5 * kPi), DecayConfig{gamma});
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const double expect = oracle::decayed_population(gamma, traj.times[i]);
    worst = std::max(worst, std::abs(traj.states[i].population(1) - expect) / expect);
  }
  return {worst < 1e-6 && traj.times.back() >= 1.5 / gamma * (1 - 1e-12),
          fmt::format("max relative error of rho11 vs exp(-2 Gamma t) {:.2e} over {} steps", worst,
                      traj.size())};
}

Outcome transitionless_driving() {
  const double omega = kDefaults.omega, T = 2 * kPi / omega;
  const PulseSchedule s = noncyclic_flip_schedule(0.0, T, omega);
  const StateVector start = eigenframe(0.0, 0.0, omega).lambda_minus;
  auto worst_overlap = [&](bool sta) {
    const auto traj = evolve_schrodinger(s, start, TwoLevelConfig::from_omega_t(omega, 2 * kPi, sta));
    double worst = 1.0;
    for (std::size_t i = 0; i < traj.size(); ++i) {
      const WaveformSample w = sample_waveform(s, traj.times[i]);
      const EigenFrame f = eigenframe(std::atan2(w.omega_m, w.delta), w.phi, omega);
      // The reversed field at the echo turns lambda_- into lambda_+ of the new frame.
      worst = std::min(worst, std::max(fidelity(traj.states[i], f.lambda_minus),
                                       fidelity(traj.states[i], f.lambda_plus)));
    }
    return worst;
  };
  const double on = worst_overlap(true), off = worst_overlap(false);
  return {on >= 1 - 1e-6 && off < 0.999,
          fmt::format("min eigenstate overlap at OmegaT = 2pi: STA on {:.9f}, STA off {:.6f}", on, off)};
}

Outcome waveform_exports(const fs::path& dir) {
  const char* names[] = {"noncyclic_sigma_x", "cyclic_sigma_x", "noncyclic_pi8", "cyclic_pi8"};
  const double expected[] = {1.0, 2.0, 0.25, 2.0};
  double worst_ratio = 0.0, worst_circle = 0.0;
  int files = 0;
  for (int i = 0; i < 4; ++i) {
    const fs::path p = dir / fmt::format("fig4_{}.csv", names[i]);
    if (!fs::exists(p)) continue;
    ++files;
    const auto rows = read_rows(p);
    if (rows.empty()) continue;
    worst_ratio = std::max(worst_ratio, std::abs(rows.back()[0] / expected[i] - 1.0));
    for (const auto& r : rows) worst_circle = std::max(worst_circle, std::abs(r[1] * r[1] + r[2] * r[2] - 1.0));
  }
  // The same invariant on the unnormalized samples.
  for (const auto& t : run_fig4(kDefaults)) {
    for (const auto& w : t.samples) {
      const double om2 = kDefaults.omega * kDefaults.omega;
      worst_circle = std::max(worst_circle, std::abs(w.omega_m * w.omega_m + w.delta * w.delta - om2) / om2);
    }
  }
  return {files == 4 && worst_ratio < 1e-12 && worst_circle < 1e-9,
          fmt::format("{} files, duration ratios 1:2:1/4:2 within {:.1e}, circle residual {:.1e}",
                      files, worst_ratio, worst_circle)};
}

Outcome determinism(const fs::path& first) {
  const fs::path second = work_dir("rerun");
  run_all_scenarios(second);
  int files = 0, differing = 0;
  for (const auto& e : fs::directory_iterator(first)) {
    ++files;
    const fs::path other = second / e.path().filename();
    if (!fs::exists(other) || slurp(e.path()) != slurp(other)) ++differing;
  }
  int second_count = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(second)) ++second_count;
  return {files > 0 && differing == 0 && files == second_count,
          fmt::format("{} CSV files compared byte for byte, {} differ", files, differing)};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    if (!o.pass) ++failures;
    fmt::print("{} {:2d} {:<28} {} [{:.1f} s]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail,
               seconds_since(t0));
    std::fflush(stdout);
  };

  // Scenario outputs are produced once and reused by several criteria.
  const fs::path out = work_dir("first");
  const ExperimentConfig& c = kDefaults;

  report(1, "spin_echo_identities", spin_echo_identities);
  report(2, "closed_form_vs_integrator", closed_form_vs_integrator);
  report(3, "omega_independence", omega_independence);
  report(4, "amplitude_robustness", [&] {
    const auto rows = run_fig3a(c);
    write_fig3a(rows, c, out);
    return amplitude_robustness(rows);
  });
  report(5, "decay_comparison", [&] {
    const auto t0 = Clock::now();
    const Fig3bResult r = run_fig3b(c);
    const double secs = seconds_since(t0);
    write_fig3b(r, c, out);
    return decay_comparison(r, secs);
  });
  report(6, "leakage", [&] {
    const auto rows = run_fig3c(c);
    write_fig3c(rows, c, out);
    return leakage(rows);
  });
  report(7, "noise", [&] {
    const auto t0 = Clock::now();
    const Fig3dResult r = run_fig3d(c);
    const double secs = seconds_since(t0);
    write_fig3d(r, c, out);
    return noise(r, secs);
  });
  report(8, "analytic_decay", analytic_decay);
  report(9, "transitionless_driving", transitionless_driving);
  report(10, "waveform_exports", [&] {
    write_fig4(run_fig4(c), c, out);
    return waveform_exports(out);
  });
  report(11, "determinism", [&] {
    write_fig2(run_fig2(FlipGate::sigma_x, c), c, out);
    write_fig2(run_fig2(FlipGate::sigma_y, c), c, out);
    return determinism(out);
  });

  fmt::print("{} of 11 criteria passed\n", 11 - failures);
  fs::remove_all(out.parent_path());
  return failures == 0 ? 0 : 1;
}
