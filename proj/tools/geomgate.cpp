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

// geomgate: runs the gate scenarios and writes their CSV tables.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "geomgate/experiments.hpp"

namespace fs = std::filesystem;
using namespace geomgate;

namespace {

constexpr const char* kConfigHelp = R"(Config file: one `key = value` per line, '#' starts a comment.
  omega            field magnitude in rad/s, e.g. 2pi*5MHz
  omega_T          omega*T, e.g. 5pi (or omega_T_over_pi = 5)
  gamma            decay rate in rad/s, e.g. 2pi*20kHz
  h                |1>-|2> to |0>-|1> coupling ratio, in [0, 2)
  kappa_grid       anharmonicity Delta0/omega, list or start:step:stop
  eta_grid         amplitude error factors, e.g. 0.8:0.01:1.2
  n_noise_points   noise segments per gate
  n_noise_repeats  noise realizations averaged
  seed             base seed (non-negative integer)
  dt_contract      omega*dt bound, at most 0.01
  noise_scale      noise amplitude relative to +-0.2, in [0, 1]
  noise_on_aux     on/off, noise also on the counter-diabatic channel
  sta              on/off, counter-diabatic driving
Quantities take a pi factor and Hz/kHz/MHz/GHz suffixes joined by * and /.
Output directory: --out, else $GEOMGATE_OUT_DIR, else ./out.)";

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string sta;
  std::optional<double> dt_contract;
  std::string omega_t;
  std::vector<std::string> sets;
};

ExperimentConfig make_config(const Common& c) {
  ExperimentConfig cfg = c.config.empty() ? ExperimentConfig{} : ExperimentConfig::load(c.config);
  if (c.seed) cfg.seed = *c.seed;
  if (!c.sta.empty()) cfg.set("sta", c.sta);
  if (c.dt_contract) cfg.dt_contract = *c.dt_contract;
  if (!c.omega_t.empty()) cfg.set("omega_T", c.omega_t);
  for (const auto& kv : c.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw Error(fmt::format("--set expects key=value, got '{}'", kv));
    cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
  }
  cfg.validate();
  return cfg;
}

fs::path out_dir(const Common& c) {
  if (!c.out.empty()) return c.out;
  if (const char* env = std::getenv("GEOMGATE_OUT_DIR"); env && *env) return env;
  return "out";
}

std::string fmt_complex(Complex z) {
  auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
  return fmt::format("{:+.9f}{:+.9f}i", clean(z.real()), clean(z.imag()));
}

void print_matrix(const char* label, const GateMatrix& u) {
  fmt::print("{}\n", label);
  for (int r = 0; r < 2; ++r) fmt::print("  [{}  {}]\n", fmt_complex(u(r, 0)), fmt_complex(u(r, 1)));
}

void cmd_fig2(const Common& c, const std::string& gate) {
  const ExperimentConfig cfg = make_config(c);
  std::vector<FlipGate> gates;
  if (gate == "both") {
    gates = {FlipGate::sigma_x, FlipGate::sigma_y};
  } else {
    gates = {parse_flip_gate(gate)};
  }
  for (FlipGate g : gates) {
    const Fig2Result r = run_fig2(g, cfg);
    write_fig2(r, cfg, out_dir(c));
    fmt::print("fig2 {}: {} rows, final fidelity {:.12f}\n",
               g == FlipGate::sigma_x ? "sigma_x" : "sigma_y", r.rows.size(), r.final_fidelity);
  }
}

void cmd_fig3a(const Common& c) {
  const ExperimentConfig cfg = make_config(c);
  const auto rows = run_fig3a(cfg);
  write_fig3a(rows, cfg, out_dir(c));
  fmt::print("fig3a: {} eta points -> {}\n", rows.size(), (out_dir(c) / "fig3a.csv").string());
}

void cmd_fig3b(const Common& c) {
  const ExperimentConfig cfg = make_config(c);
  const Fig3bResult r = run_fig3b(cfg);
  write_fig3b(r, cfg, out_dir(c));
  for (const Fig3bTrace* t : {&r.noncyclic, &r.sgqg}) {
    fmt::print("fig3b {}: duration {:.6g} s, fidelity {:.9f} (closed {:.9f})\n", t->scheme,
               t->duration, t->fidelity, t->fidelity_closed);
  }
}

void cmd_fig3c(const Common& c) {
  const ExperimentConfig cfg = make_config(c);
  const auto rows = run_fig3c(cfg);
  write_fig3c(rows, cfg, out_dir(c));
  for (const auto& r : rows) {
    fmt::print("fig3c kappa {:g}: P2 noncyclic {:.4e}, sgqg {:.4e}\n", r.kappa, r.p2_noncyclic,
               r.p2_sgqg);
  }
}

void cmd_fig3d(const Common& c) {
  const ExperimentConfig cfg = make_config(c);
  const Fig3dResult r = run_fig3d(cfg);
  write_fig3d(r, cfg, out_dir(c));
  for (const NoiseStats* s : {&r.noncyclic, &r.sgqg, &r.sgqg_matched}) {
    fmt::print("fig3d {} ({} points): 1-F = {:.4e} +- {:.1e}\n", s->scheme, s->n_points, s->mean,
               s->stderr_mean);
  }
}

void cmd_fig4(const Common& c) {
  const ExperimentConfig cfg = make_config(c);
  const auto traces = run_fig4(cfg);
  write_fig4(traces, cfg, out_dir(c));
  for (const auto& t : traces) {
    fmt::print("fig4 {}: duration {:g} T\n", t.name, t.schedule.total_time() / cfg.T());
  }
}

void cmd_gate(const std::string& theta1, const std::string& phi) {
  const GateSpec spec{parse_quantity(phi), parse_quantity(theta1), Scheme::noncyclic};
  spec.validate();
  print_matrix("U =", ideal_gate(spec));
}

void cmd_evolve(const Common& c, const std::string& scheme, const std::string& theta1,
                const std::string& phi, bool trajectory) {
  const ExperimentConfig cfg = make_config(c);
  const GateSpec spec{parse_quantity(phi), parse_quantity(theta1), parse_scheme(scheme)};
  spec.validate();
  const PulseSchedule sched = build_schedule(spec, cfg.T(), cfg.omega);
  const TwoLevelConfig tl = cfg.two_level();
  const GateMatrix u = integrate_gate(sched, tl);
  const GateMatrix ideal = ideal_gate(spec);
  fmt::print("scheme {} ({}), {} stages, duration {:.6g} s, sta {}\n", to_string(spec.scheme),
             to_string(sched.construction), sched.stages.size(), sched.total_time(),
             cfg.sta ? "on" : "off");
  print_matrix("U =", u);
  print_matrix("ideal =", ideal);
  fmt::print("gate_distance = {:.6e}\n", gate_distance(u, ideal));
  if (trajectory) {
    const PureTrajectory traj = evolve_schrodinger(sched, StateVector::basis(2, 0), tl);
    CsvWriter out(out_dir(c) / "evolve.csv");
    RunRecord::make("evolve", cfg).write(out);
    out.comment(fmt::format("scheme {}, theta1 {}, phi {}, from |0>", to_string(spec.scheme),
                            format_number(spec.theta1), format_number(spec.phi0)));
    out.header("t_s,p0,p1,x,y,z");
    for (std::size_t i = 0; i < traj.size(); ++i) {
      const BlochVector b = bloch_vector(traj.states[i]);
      out.row({traj.times[i], traj.states[i].population(0), traj.states[i].population(1), b.x,
               b.y, b.z});
    }
    out.close();
    fmt::print("trajectory -> {}\n", out.path().string());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-cyclic geometric gate simulator", "geomgate"};
  app.footer(kConfigHelp);
  app.set_version_flag("--version", std::string(version_string()));
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--config", c.config, "Config file (key = value)")->check(CLI::ExistingFile);
  app.add_option("--seed", c.seed, "Base seed for noise realizations");
  app.add_option("--out", c.out, "Output directory");
  app.add_option("--sta", c.sta, "Counter-diabatic driving")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--dt-contract", c.dt_contract, "Bound on omega*dt (<= 0.01)");
  app.add_option("--omega-T", c.omega_t, "omega*T, e.g. 5pi");
  app.add_option("--set", c.sets, "Override a config key, key=value (repeatable)");

  std::string gate = "both";
  auto* fig2 = app.add_subcommand("fig2", "Flip gates from (|0>+|1>)/sqrt2: populations and phase");
  fig2->add_option("--gate", gate, "sigma_x, sigma_y or both")
      ->check(CLI::IsMember({"both", "x", "y", "sigma_x", "sigma_y"}));
  auto* fig3a = app.add_subcommand("fig3a", "Fidelity vs amplitude error: non-cyclic, Rabi, composite");
  auto* fig3b = app.add_subcommand("fig3b", "pi/8 gate under decay: non-cyclic vs orange-slice loop");
  auto* fig3c = app.add_subcommand("fig3c", "Leakage to |2> vs anharmonicity");
  auto* fig3d = app.add_subcommand("fig3d", "Infidelity under random amplitude noise");
  auto* fig4 = app.add_subcommand("fig4", "Control waveforms in units of omega and T");

  std::string theta1 = "pi/2", phi = "pi/2", scheme = "noncyclic";
  auto* gate_cmd = app.add_subcommand("gate", "Print the ideal rotation for theta1, phi");
  gate_cmd->add_option("--theta1", theta1, "Half rotation angle, in [0, pi/2]")->required();
  gate_cmd->add_option("--phi", phi, "Azimuth")->required();

  bool trajectory = false;
  auto* evolve = app.add_subcommand("evolve", "Integrate one gate schedule and compare to the ideal");
  evolve->add_option("--scheme", scheme, "noncyclic, sgqg, rabi or composite");
  evolve->add_option("--theta1", theta1, "Half rotation angle (default pi/2)");
  evolve->add_option("--phi", phi, "Azimuth (default pi/2)");
  evolve->add_flag("--trajectory", trajectory, "Also write evolve.csv from |0>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*fig2) cmd_fig2(c, gate);
    if (*fig3a) cmd_fig3a(c);
    if (*fig3b) cmd_fig3b(c);
    if (*fig3c) cmd_fig3c(c);
    if (*fig3d) cmd_fig3d(c);
    if (*fig4) cmd_fig4(c);
    if (*gate_cmd) cmd_gate(theta1, phi);
    if (*evolve) cmd_evolve(c, scheme, theta1, phi, trajectory);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
