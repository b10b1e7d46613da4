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

#include "geomgate/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>

#include <fmt/core.h>

namespace geomgate {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_factor(std::string_view f, std::string_view whole) {
  auto bad = [&] { return Error(fmt::format("cannot parse quantity '{}'", whole)); };
  if (f.empty()) throw bad();
  double value = 1.0;
  if (f == "pi") return kPi;
  if (f == "-pi") return -kPi;
  const char* end = f.data() + f.size();
  auto [ptr, ec] = std::from_chars(f.data(), end, value);
  if (ec != std::errc()) throw bad();
  std::string_view rest(ptr, static_cast<std::size_t>(end - ptr));
  if (rest.substr(0, 2) == "pi") {
    value *= kPi;
    rest.remove_prefix(2);
  }
  if (rest.empty() || rest == "Hz") return value;
  if (rest == "kHz") return value * 1e3;
  if (rest == "MHz") return value * 1e6;
  if (rest == "GHz") return value * 1e9;
  throw bad();
}

long parse_integer(std::string_view key, std::string_view value) {
  long out = 0;
  const char* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw Error(fmt::format("{}: expected an integer, got '{}'", key, value));
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "on" || value == "true" || value == "1" || value == "yes") return true;
  if (value == "off" || value == "false" || value == "0" || value == "no") return false;
  throw Error(fmt::format("{}: expected on/off, got '{}'", key, value));
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_number(v[i]);
  }
  return out;
}

std::filesystem::path csv_path(const std::filesystem::path& dir, std::string_view name) {
  return dir / fmt::format("{}.csv", name);
}

double state_fidelity_from(const GateMatrix& actual, const GateMatrix& ideal,
                           const StateVector& psi) {
  return fidelity(actual.apply(psi), ideal.apply(psi));
}

double trace_drift(const DensityMatrix& rho) {
  return std::abs(rho.entries().trace() - Complex(1.0, 0.0));
}

GateSpec flip_spec(double phi0, Scheme scheme) { return GateSpec{phi0, kPi / 2, scheme}; }

const GateSpec kPi8Noncyclic{0.0, kPi / 8, Scheme::noncyclic};
const GateSpec kPi8Sgqg{0.0, kPi / 8, Scheme::cyclic_sgqg};

void finish_stats(NoiseStats& s, const std::vector<double>& sq) {
  const auto n = static_cast<double>(s.infidelity.size());
  auto mean_se = [n](const std::vector<double>& x, double& mean, double& se) {
    mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : x) ss += (v - mean) * (v - mean);
    se = n > 1 ? std::sqrt(ss / (n - 1) / n) : kNaN;
  };
  mean_se(s.infidelity, s.mean, s.stderr_mean);
  mean_se(sq, s.mean_sq, s.stderr_sq);
}

}  // namespace

std::string_view version_string() { return GEOMGATE_VERSION; }

double parse_quantity(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) throw Error("empty quantity");
  double value = 1.0;
  char op = '*';
  std::size_t start = 0;
  while (true) {
    const auto pos = t.find_first_of("*/", start);
    const double f = parse_factor(trim(t.substr(start, pos - start)), t);
    if (op == '*') {
      value *= f;
    } else {
      if (f == 0.0) throw Error(fmt::format("quantity '{}' divides by zero", t));
      value /= f;
    }
    if (pos == std::string_view::npos) break;
    op = t[pos];
    start = pos + 1;
  }
  if (!std::isfinite(value)) throw Error(fmt::format("quantity '{}' is not finite", t));
  return value;
}

std::vector<double> make_grid(double start, double step, double stop) {
  if (!std::isfinite(start) || !std::isfinite(step) || !std::isfinite(stop) || step == 0.0) {
    throw Error("grid: start, step and stop must be finite with step != 0");
  }
  const double span = (stop - start) / step;
  if (span < -1e-9) throw Error("grid: step points away from stop");
  const long n = std::lround(span);
  if (std::abs(span - static_cast<double>(n)) > 1e-6) {
    throw Error(fmt::format("grid: {} is not reached from {} in steps of {}", stop, start, step));
  }
  if (n > 1000000) throw Error("grid: too many points");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    out.push_back(n == 0 ? start : start + (stop - start) * static_cast<double>(i) / n);
  }
  return out;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view item : split(trim(text), ',')) {
    if (item.find(':') != std::string_view::npos) {
      const auto p = split(item, ':');
      if (p.size() != 3) throw Error(fmt::format("range '{}' must be start:step:stop", item));
      const auto g = make_grid(parse_quantity(p[0]), parse_quantity(p[1]), parse_quantity(p[2]));
      out.insert(out.end(), g.begin(), g.end());
    } else {
      out.push_back(parse_quantity(item));
    }
  }
  return out;
}

TwoLevelConfig ExperimentConfig::two_level() const {
  return TwoLevelConfig::from_omega_t(omega, omega_T_over_pi * kPi, sta, dt_contract);
}

void ExperimentConfig::validate() const {
  if (!std::isfinite(omega) || !(omega > 0.0)) throw Error("config: omega must be > 0");
  if (!std::isfinite(omega_T_over_pi) || !(omega_T_over_pi > 0.0)) {
    throw Error("config: omega_T must be > 0");
  }
  if (!std::isfinite(gamma) || gamma < 0.0) throw Error("config: gamma must be >= 0");
  if (!std::isfinite(h) || h < 0.0 || h >= 2.0) throw Error("config: h must lie in [0, 2)");
  if (!std::isfinite(dt_contract) || !(dt_contract > 0.0) || dt_contract > kMaxOmegaDt) {
    throw Error(fmt::format("config: dt_contract must lie in (0, {}]", kMaxOmegaDt));
  }
  if (!std::isfinite(noise_scale) || noise_scale < 0.0 || noise_scale > 1.0) {
    throw Error("config: noise_scale must lie in [0, 1]");
  }
  if (n_noise_points < 1) throw Error("config: n_noise_points must be >= 1");
  if (n_noise_repeats < 1) throw Error("config: n_noise_repeats must be >= 1");
  for (double k : kappa_grid) {
    if (!std::isfinite(k)) throw Error("config: kappa_grid entries must be finite");
  }
  for (double e : eta_grid) {
    if (!std::isfinite(e) || !(e > 0.0)) throw Error("config: eta_grid entries must be > 0");
  }
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "omega") {
    omega = parse_quantity(value);
  } else if (key == "omega_T") {
    omega_T_over_pi = parse_quantity(value) / kPi;
  } else if (key == "omega_T_over_pi") {
    omega_T_over_pi = parse_quantity(value);
  } else if (key == "gamma") {
    gamma = parse_quantity(value);
  } else if (key == "h") {
    h = parse_quantity(value);
  } else if (key == "kappa_grid") {
    kappa_grid = parse_list(value);
  } else if (key == "eta_grid") {
    eta_grid = parse_list(value);
  } else if (key == "n_noise_points") {
    n_noise_points = static_cast<int>(parse_integer(key, value));
  } else if (key == "n_noise_repeats") {
    n_noise_repeats = static_cast<int>(parse_integer(key, value));
  } else if (key == "seed") {
    const long s = parse_integer(key, value);
    if (s < 0) throw Error("seed must be non-negative");
    seed = static_cast<std::uint64_t>(s);
  } else if (key == "dt_contract") {
    dt_contract = parse_quantity(value);
  } else if (key == "noise_scale") {
    noise_scale = parse_quantity(value);
  } else if (key == "noise_on_aux") {
    noise_on_aux = parse_bool(key, value);
  } else if (key == "sta") {
    sta = parse_bool(key, value);
  } else {
    throw Error(fmt::format("unknown config key '{}'", key));
  }
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open config file {}", path.string()));
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = line;
    if (const auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos) {
      throw Error(fmt::format("{}:{}: expected 'key = value'", path.string(), lineno));
    }
    try {
      cfg.set(l.substr(0, eq), l.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(fmt::format("{}:{}: {}", path.string(), lineno, e.what()));
    }
  }
  cfg.validate();
  return cfg;
}

std::string ExperimentConfig::canonical() const {
  return fmt::format(
      "omega={};omega_T_over_pi={};gamma={};h={};kappa_grid={};eta_grid={};"
      "n_noise_points={};n_noise_repeats={};seed={};dt_contract={};noise_scale={};"
      "noise_on_aux={};sta={}",
      format_number(omega), format_number(omega_T_over_pi), format_number(gamma),
      format_number(h), join(kappa_grid), join(eta_grid), n_noise_points, n_noise_repeats,
      seed, format_number(dt_contract), format_number(noise_scale), noise_on_aux ? 1 : 0,
      sta ? 1 : 0);
}

std::uint64_t ExperimentConfig::hash() const {
  std::uint64_t h64 = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical()) {
    h64 ^= c;
    h64 *= 0x100000001b3ULL;
  }
  return h64;
}

RunRecord RunRecord::make(std::string_view scenario, const ExperimentConfig& cfg) {
  return RunRecord{std::string(scenario), cfg.hash(), std::string(version_string())};
}

void RunRecord::write(CsvWriter& out) const {
  out.comment(fmt::format("scenario: {}", scenario));
  out.comment(fmt::format("config_hash: {:016x}", config_hash));
  out.comment(fmt::format("version: geomgate {}", version));
  out.comment("units: hbar = 1, sigma_z|0> = +|0>");
}

// fig2 ---------------------------------------------------------------------

FlipGate parse_flip_gate(std::string_view name) {
  if (name == "x" || name == "sigma_x" || name == "sx") return FlipGate::sigma_x;
  if (name == "y" || name == "sigma_y" || name == "sy") return FlipGate::sigma_y;
  throw Error(fmt::format("unknown flip gate '{}' (expected sigma_x or sigma_y)", name));
}

Fig2Result run_fig2(FlipGate gate, const ExperimentConfig& cfg) {
  cfg.validate();
  const double phi0 = gate == FlipGate::sigma_x ? kPi / 2 : 0.0;
  const PulseSchedule sched = noncyclic_flip_schedule(phi0, cfg.T(), cfg.omega);
  const StateVector psi0 = StateVector::qubit(1.0, 1.0);
  const PureTrajectory traj = evolve_schrodinger(sched, psi0, cfg.two_level());

  Fig2Result r;
  r.gate = gate;
  r.rows.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const StateVector& s = traj.states[i];
    const BlochVector b = bloch_vector(s);
    const double chi = std::hypot(b.x, b.y) > 1e-9 ? relative_phase(s) / kPi : kNaN;
    r.rows.push_back({traj.times[i], s.population(0), s.population(1), chi});
  }
  r.final_state = traj.final_state();
  r.expected_state = ideal_gate(flip_spec(phi0, Scheme::noncyclic)).apply(psi0);
  r.final_fidelity = fidelity(r.final_state, r.expected_state);
  return r;
}

void write_fig2(const Fig2Result& r, const ExperimentConfig& cfg,
                const std::filesystem::path& dir) {
  const char* name = r.gate == FlipGate::sigma_x ? "fig2_sigma_x" : "fig2_sigma_y";
  CsvWriter out(csv_path(dir, name));
  RunRecord::make(name, cfg).write(out);
  out.comment(fmt::format("final_fidelity: {}", format_number(r.final_fidelity)));
  out.header("t_s,p0,p1,chi_over_pi");
  for (const auto& row : r.rows) out.row({row.t, row.p0, row.p1, row.chi_over_pi});
  out.close();
}

// fig3a --------------------------------------------------------------------

std::vector<Fig3aRow> run_fig3a(const ExperimentConfig& cfg) {
  cfg.validate();
  for (double e : cfg.eta_grid) {
    if (e < 0.8 - 1e-12 || e > 1.2 + 1e-12) {
      throw Error(fmt::format("fig3a: eta {} outside [0.8, 1.2]", e));
    }
  }
  const TwoLevelConfig tl = cfg.two_level();
  const GateSpec x_spec = flip_spec(kPi / 2, Scheme::noncyclic);
  const PulseSchedule nc = noncyclic_flip_schedule(kPi / 2, cfg.T(), cfg.omega);
  const PulseSchedule rabi = rabi_schedule(kPi / 2, cfg.omega, kPi);
  const PulseSchedule comp = composite_schedule(cfg.omega);
  const GateMatrix ideal_flip = ideal_gate(x_spec);
  const GateMatrix ideal_comp = ideal_gate(GateSpec{0.0, kPi / 2, Scheme::composite});
  const StateVector one = StateVector::basis(2, 1);

  std::vector<Fig3aRow> rows;
  for (double eta : cfg.eta_grid) {
    const SystematicError err{eta, false};
    const GateMatrix u_nc = integrate_gate(apply_systematic_error(nc, err), tl);
    const GateMatrix u_rabi = integrate_gate(apply_systematic_error(rabi, err), tl);
    const GateMatrix u_comp = integrate_gate(apply_systematic_error(comp, err), tl);
    rows.push_back({eta, state_fidelity_from(u_nc, ideal_flip, one),
                    state_fidelity_from(u_rabi, ideal_flip, one),
                    state_fidelity_from(u_comp, ideal_comp, one),
                    cardinal_average_fidelity(u_nc, ideal_flip),
                    cardinal_average_fidelity(u_rabi, ideal_flip),
                    cardinal_average_fidelity(u_comp, ideal_comp)});
  }
  return rows;
}

void write_fig3a(const std::vector<Fig3aRow>& rows, const ExperimentConfig& cfg,
                 const std::filesystem::path& dir) {
  CsvWriter out(csv_path(dir, "fig3a"));
  RunRecord::make("fig3a", cfg).write(out);
  out.comment("fidelities of sigma_x under Omega -> eta*Omega; f_* from |1>, avg6_* over cardinal states");
  out.header("eta,f_noncyclic,f_rabi,f_composite,avg6_noncyclic,avg6_rabi,avg6_composite");
  for (const auto& r : rows) {
    out.row({r.eta, r.noncyclic, r.rabi, r.composite, r.noncyclic_avg, r.rabi_avg,
             r.composite_avg});
  }
  out.close();
}

// fig3b --------------------------------------------------------------------

namespace {

Fig3bTrace decay_trace(std::string name, const PulseSchedule& sched, const GateSpec& spec,
                       const ExperimentConfig& cfg) {
  const TwoLevelConfig tl = cfg.two_level();
  const DensityMatrix rho0 = DensityMatrix::pure(StateVector::basis(2, 0));
  const DensityMatrix ideal = DensityMatrix::pure(ideal_gate(spec).apply(StateVector::basis(2, 0)));

  Fig3bTrace t;
  t.scheme = std::move(name);
  t.duration = sched.total_time();
  t.trajectory = evolve_lindblad(sched, rho0, tl, DecayConfig{cfg.gamma});
  t.fidelity = fidelity(t.trajectory.final_state(), ideal);
  t.fidelity_closed = fidelity(propagate_lindblad(sched, rho0, tl, DecayConfig{0.0}), ideal);
  for (const auto& rho : t.trajectory.states) {
    t.max_trace_drift = std::max(t.max_trace_drift, trace_drift(rho));
  }
  return t;
}

void write_decay_trace(const Fig3bTrace& t, const ExperimentConfig& cfg,
                       const std::filesystem::path& dir) {
  const std::string name = "fig3b_" + t.scheme;
  CsvWriter out(csv_path(dir, name));
  RunRecord::make(name, cfg).write(out);
  out.header("t_over_total,t_s,p0,p1,re_rho01,im_rho01");
  for (std::size_t i = 0; i < t.trajectory.size(); ++i) {
    const DensityMatrix& rho = t.trajectory.states[i];
    const double ts = t.trajectory.times[i];
    out.row({ts / t.duration, ts, rho.population(0), rho.population(1), rho(0, 1).real(),
             rho(0, 1).imag()});
  }
  out.close();
}

}  // namespace

Fig3bResult run_fig3b(const ExperimentConfig& cfg) {
  cfg.validate();
  Fig3bResult r;
  r.noncyclic = decay_trace("noncyclic",
                            noncyclic_rotation_schedule(kPi8Noncyclic, cfg.T(), cfg.omega),
                            kPi8Noncyclic, cfg);
  r.sgqg = decay_trace("sgqg", sgqg_schedule(kPi8Sgqg, cfg.T(), cfg.omega), kPi8Sgqg, cfg);
  return r;
}

void write_fig3b(const Fig3bResult& r, const ExperimentConfig& cfg,
                 const std::filesystem::path& dir) {
  write_decay_trace(r.noncyclic, cfg, dir);
  write_decay_trace(r.sgqg, cfg, dir);
  CsvWriter out(csv_path(dir, "fig3b_summary"));
  RunRecord::make("fig3b", cfg).write(out);
  out.comment("theta1 = pi/8 from |0>; fidelity = sqrt(Tr(rho_ideal rho))");
  out.header("scheme,duration_s,fidelity,fidelity_closed,max_trace_drift");
  for (const Fig3bTrace* t : {&r.noncyclic, &r.sgqg}) {
    out.row(t->scheme, {t->duration, t->fidelity, t->fidelity_closed, t->max_trace_drift});
  }
  out.close();
}

// fig3c --------------------------------------------------------------------

Fig3cRow leakage_point(double kappa, const ExperimentConfig& cfg) {
  cfg.validate();
  const ThreeLevelConfig c{cfg.two_level(), cfg.h, kappa};
  const StateVector zero = StateVector::basis(3, 0);
  const PulseSchedule nc = noncyclic_rotation_schedule(kPi8Noncyclic, cfg.T(), cfg.omega);
  const PulseSchedule sg = sgqg_schedule(kPi8Sgqg, cfg.T(), cfg.omega);
  Fig3cRow row;
  row.kappa = kappa;
  row.p2_noncyclic = leakage(propagate(nc, zero, c), kappa).p2;
  row.p2_sgqg = leakage(propagate(sg, zero, c), kappa).p2;
  row.ratio = row.p2_sgqg > 0.0 ? row.p2_noncyclic / row.p2_sgqg : kNaN;
  return row;
}

std::vector<Fig3cRow> run_fig3c(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.kappa_grid.empty()) throw Error("fig3c: kappa_grid is empty");
  std::vector<Fig3cRow> rows;
  for (double k : cfg.kappa_grid) rows.push_back(leakage_point(k, cfg));
  return rows;
}

void write_fig3c(const std::vector<Fig3cRow>& rows, const ExperimentConfig& cfg,
                 const std::filesystem::path& dir) {
  CsvWriter out(csv_path(dir, "fig3c"));
  RunRecord::make("fig3c", cfg).write(out);
  out.comment(fmt::format("theta1 = pi/8 from |0>, h = {}, Delta0 = kappa * Omega",
                          format_number(cfg.h)));
  out.header("kappa,p2_noncyclic,p2_sgqg,ratio");
  for (const auto& r : rows) out.row({r.kappa, r.p2_noncyclic, r.p2_sgqg, r.ratio});
  out.close();
}

// fig3d --------------------------------------------------------------------

Fig3dResult run_fig3d(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.n_noise_repeats < 2) throw Error("fig3d: n_noise_repeats must be >= 2");
  const TwoLevelConfig tl = cfg.two_level();
  const GateSpec x_nc = flip_spec(kPi / 2, Scheme::noncyclic);
  const GateSpec x_sg = flip_spec(kPi / 2, Scheme::cyclic_sgqg);
  const PulseSchedule nc = noncyclic_flip_schedule(kPi / 2, cfg.T(), cfg.omega);
  const PulseSchedule sg = sgqg_schedule(x_sg, cfg.T(), cfg.omega);
  const StateVector one = StateVector::basis(2, 1);
  const StateVector target_nc = ideal_gate(x_nc).apply(one);
  const StateVector target_sg = ideal_gate(x_sg).apply(one);

  Fig3dResult r;
  const int n = cfg.n_noise_points;
  r.noncyclic.scheme = "noncyclic";
  r.noncyclic.n_points = n;
  r.sgqg.scheme = "sgqg";
  r.sgqg.n_points = n;
  r.sgqg_matched.scheme = "sgqg_matched";
  r.sgqg_matched.n_points = 2 * n;
  std::vector<double> sq_nc, sq_sg, sq_m;

  auto run = [&](const PulseSchedule& s, const NoiseRealization& noise,
                 const StateVector& target, NoiseStats& stats, std::vector<double>& sq) {
    const double f = fidelity(propagate(apply_random_noise(s, noise), one, tl), target);
    stats.infidelity.push_back(1.0 - f);
    sq.push_back(1.0 - f * f);
  };

  for (int i = 0; i < cfg.n_noise_repeats; ++i) {
    const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
    r.seeds.push_back(seed);
    NoiseRealization single = NoiseRealization::generate(n, seed, cfg.noise_scale);
    NoiseRealization matched = NoiseRealization::generate(2 * n, seed, cfg.noise_scale);
    single.apply_to_aux = cfg.noise_on_aux;
    matched.apply_to_aux = cfg.noise_on_aux;
    run(nc, single, target_nc, r.noncyclic, sq_nc);
    run(sg, single, target_sg, r.sgqg, sq_sg);
    run(sg, matched, target_sg, r.sgqg_matched, sq_m);
  }
  finish_stats(r.noncyclic, sq_nc);
  finish_stats(r.sgqg, sq_sg);
  finish_stats(r.sgqg_matched, sq_m);
  return r;
}

void write_fig3d(const Fig3dResult& r, const ExperimentConfig& cfg,
                 const std::filesystem::path& dir) {
  {
    CsvWriter out(csv_path(dir, "fig3d"));
    RunRecord::make("fig3d", cfg).write(out);
    out.comment(fmt::format("sigma_x from |1>, {} repeats, amplitude noise bound {}",
                            r.seeds.size(), format_number(kNoiseBound * cfg.noise_scale)));
    out.header("scheme,n_points,mean_infidelity,stderr,mean_infidelity_sq,stderr_sq");
    for (const NoiseStats* s : {&r.noncyclic, &r.sgqg, &r.sgqg_matched}) {
      out.row(s->scheme, {static_cast<double>(s->n_points), s->mean, s->stderr_mean,
                          s->mean_sq, s->stderr_sq});
    }
    out.close();
  }
  CsvWriter out(csv_path(dir, "fig3d_samples"));
  RunRecord::make("fig3d", cfg).write(out);
  out.header("repeat,seed,noncyclic,sgqg,sgqg_matched");
  for (std::size_t i = 0; i < r.seeds.size(); ++i) {
    out.row(fmt::format("{},{}", i, r.seeds[i]),
            {r.noncyclic.infidelity[i], r.sgqg.infidelity[i], r.sgqg_matched.infidelity[i]});
  }
  out.close();
}

// fig4 ---------------------------------------------------------------------

std::vector<Fig4Trace> run_fig4(const ExperimentConfig& cfg) {
  cfg.validate();
  const double T = cfg.T();
  std::vector<Fig4Trace> traces;
  auto add = [&](std::string name, PulseSchedule s) {
    Fig4Trace t{std::move(name), std::move(s), {}};
    t.samples = sample_uniform(t.schedule, kFig4Samples);
    if (!cfg.sta) {
      for (auto& w : t.samples) w.theta_dot = 0.0;
    }
    traces.push_back(std::move(t));
  };
  add("noncyclic_sigma_x", noncyclic_flip_schedule(kPi / 2, T, cfg.omega));
  add("cyclic_sigma_x", sgqg_schedule(flip_spec(kPi / 2, Scheme::cyclic_sgqg), T, cfg.omega));
  add("noncyclic_pi8", noncyclic_rotation_schedule(kPi8Noncyclic, T, cfg.omega));
  add("cyclic_pi8", sgqg_schedule(kPi8Sgqg, T, cfg.omega));
  return traces;
}

void write_fig4(const std::vector<Fig4Trace>& traces, const ExperimentConfig& cfg,
                const std::filesystem::path& dir) {
  const double T = cfg.T();
  for (const auto& t : traces) {
    const std::string name = "fig4_" + t.name;
    CsvWriter out(csv_path(dir, name));
    RunRecord::make(name, cfg).write(out);
    out.comment(fmt::format("duration_over_T: {}", format_number(t.schedule.total_time() / T)));
    out.header("t_over_T,omega_m_over_omega,delta_over_omega,aux_over_omega,phi_rad");
    for (const auto& w : t.samples) {
      out.row({w.t / T, w.omega_m / cfg.omega, w.delta / cfg.omega, w.theta_dot / cfg.omega,
               w.phi});
    }
    out.close();
  }
}

}  // namespace geomgate
