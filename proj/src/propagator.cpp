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

#include "geomgate/propagator.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace geomgate {

namespace {

bool finite(const Mat& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

// Largest angular frequency present in a stage, used to size the step.
double stage_rate(const PulseStage& st, bool sta) {
  const double amp = st.omega * std::max({std::abs(st.drive_scale),
                                          std::abs(st.detuning_scale), 1.0});
  const double aux = sta && st.sta_enabled ? std::abs(st.aux_scale * st.theta_dot()) : 0.0;
  return amp + aux;
}

// Classical RK4 over every stage. `rhs(sample, y)` returns dy/dt; `visit(t, y)`
// sees the initial value and the value after each step. `extra_rate` widens the
// frequency scale used for the step-size contract (e.g. the |2> detuning).
template <class Y, class Rhs, class Visit>
Y integrate(const PulseSchedule& schedule, Y y, const TwoLevelConfig& cfg,
            double extra_rate, Rhs&& rhs, Visit&& visit) {
  cfg.validate();
  visit(0.0, y);
  double t0 = 0.0;
  for (const PulseStage& st : schedule.stages) {
    if (st.duration < 0.0 || !std::isfinite(st.duration)) {
      throw Error("integrator: stage with invalid duration");
    }
    if (st.duration == 0.0) continue;
    const double rate = std::max(cfg.omega, stage_rate(st, cfg.sta_enabled) + extra_rate);
    const double h_max = cfg.dt * cfg.omega / rate;
    const auto n = static_cast<long>(std::ceil(st.duration / h_max * (1.0 - 1e-12)));
    const long steps = std::max(1L, n);
    const double h = st.duration / static_cast<double>(steps);

    auto sample = [&](double local) {
      WaveformSample w = sample_stage(st, local, t0);
      if (!cfg.sta_enabled) w.theta_dot = 0.0;
      return w;
    };

    for (long i = 0; i < steps; ++i) {
      const double tl = h * static_cast<double>(i);
      const WaveformSample w0 = sample(tl);
      const WaveformSample wm = sample(tl + 0.5 * h);
      const WaveformSample w1 = sample(tl + h);
      const Y k1 = rhs(w0, y);
      const Y k2 = rhs(wm, Y(y + (0.5 * h) * k1));
      const Y k3 = rhs(wm, Y(y + (0.5 * h) * k2));
      const Y k4 = rhs(w1, Y(y + h * k3));
      y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      const double t = i + 1 == steps ? t0 + st.duration : t0 + tl + h;
      if (!finite(y)) {
        throw Error(fmt::format("integrator: non-finite state at t = {:.17g} s", t));
      }
      visit(t, y);
    }
    t0 += st.duration;
  }
  return y;
}

template <class Visit>
Vec run_schrodinger2(const PulseSchedule& s, const StateVector& psi0,
                     const TwoLevelConfig& cfg, Visit&& visit) {
  if (psi0.dim() != 2) throw Error("evolve_schrodinger: two-level run needs a qubit state");
  auto rhs = [](const WaveformSample& w, const Vec& y) -> Vec {
    return -kI * (hamiltonian2(w) * y);
  };
  return integrate(s, Vec(psi0.amplitudes()), cfg, 0.0, rhs, visit);
}

template <class Visit>
Vec run_schrodinger3(const PulseSchedule& s, const StateVector& psi0,
                     const ThreeLevelConfig& cfg, Visit&& visit) {
  cfg.validate();
  if (psi0.dim() != 3) throw Error("evolve_schrodinger: three-level run needs a qutrit state");
  auto rhs = [&cfg](const WaveformSample& w, const Vec& y) -> Vec {
    return -kI * (hamiltonian3(w, cfg) * y);
  };
  return integrate(s, Vec(psi0.amplitudes()), cfg.base, std::abs(cfg.delta0()), rhs, visit);
}

template <class Visit>
Mat run_lindblad(const PulseSchedule& s, const DensityMatrix& rho0, const TwoLevelConfig& cfg,
                 const DecayConfig& decay, Visit&& visit) {
  decay.validate();
  if (rho0.dim() != 2) throw Error("evolve_lindblad: two-level density matrix required");
  Mat2 L = Mat2::Zero();
  L(0, 1) = std::sqrt(decay.gamma);
  const Mat2 Ld = L.adjoint();
  const Mat2 LdL = Ld * L;
  auto rhs = [&](const WaveformSample& w, const Mat& rho) -> Mat {
    const Mat2 H = hamiltonian2(w);
    const Mat2 r = rho;
    const Mat2 out = -kI * (H * r - r * H) + 2.0 * (L * r * Ld) - LdL * r - r * LdL;
    return out;
  };
  return integrate(s, Mat(rho0.entries()), cfg, 0.0, rhs, visit);
}

Mat2 rotation_matrix(double theta1, double phi) {
  const double c = std::cos(theta1);
  const double s = std::sin(theta1);
  Mat2 m;
  m << c, -s * std::polar(1.0, -phi), s * std::polar(1.0, phi), c;
  return m;
}

}  // namespace

// ------------------------------------------------------------------- configs

TwoLevelConfig TwoLevelConfig::from_omega_t(double omega, double omega_t, bool sta,
                                            double omega_dt) {
  TwoLevelConfig c;
  c.omega = omega;
  c.T = omega_t / omega;
  c.sta_enabled = sta;
  c.dt = omega_dt / omega;
  c.validate();
  return c;
}

void TwoLevelConfig::validate() const {
  if (!std::isfinite(omega) || !(omega > 0.0)) throw Error("TwoLevelConfig: omega must be > 0");
  if (!std::isfinite(T) || !(T > 0.0)) throw Error("TwoLevelConfig: T must be > 0");
  if (!std::isfinite(dt) || !(dt > 0.0)) throw Error("TwoLevelConfig: dt must be > 0");
  if (omega * dt > kMaxOmegaDt * (1.0 + 1e-12)) {
    throw Error(fmt::format("step contract violated: omega*dt = {:.6g} > {}", omega * dt,
                            kMaxOmegaDt));
  }
}

void ThreeLevelConfig::validate() const {
  base.validate();
  if (!std::isfinite(h) || h < 0.0 || h >= 2.0) {
    throw Error(fmt::format("ThreeLevelConfig: h must lie in [0, 2), got {}", h));
  }
  if (!std::isfinite(kappa)) throw Error("ThreeLevelConfig: kappa must be finite");
}

void DecayConfig::validate() const {
  if (!std::isfinite(gamma) || gamma < 0.0) throw Error("DecayConfig: gamma must be >= 0");
}

// -------------------------------------------------------------- Hamiltonians

Mat2 hamiltonian2(const WaveformSample& w) {
  const Complex c = 0.5 * Complex(w.omega_m, -w.theta_dot) * std::polar(1.0, -w.phi);
  Mat2 H;
  H << 0.5 * w.delta, c, std::conj(c), -0.5 * w.delta;
  return H;
}

Mat3 hamiltonian3(const WaveformSample& w, const ThreeLevelConfig& cfg) {
  const Complex e = std::polar(1.0, -w.phi);
  const Complex c01 = 0.5 * Complex(w.omega_m, -w.theta_dot) * e;
  const Complex c12 = 0.5 * Complex(cfg.h * w.omega_m, -cfg.h * w.theta_dot) * e;
  const double delta_p = w.delta - cfg.delta0();
  Mat3 H;
  H << 0.0, c01, 0.0,
       std::conj(c01), -w.delta, c12,
       0.0, std::conj(c12), -delta_p;
  return H;
}

// ------------------------------------------------------- closed-form operators

TransportOperator transport_operator(double theta_a, double theta_b, double phi,
                                     double a_plus, double a_minus) {
  if (!std::isfinite(theta_a) || !std::isfinite(theta_b) || !std::isfinite(phi) ||
      !std::isfinite(a_plus) || !std::isfinite(a_minus)) {
    throw Error("transport_operator: non-finite input");
  }
  const double ca = std::cos(theta_a / 2.0), sa = std::sin(theta_a / 2.0);
  const double cb = std::cos(theta_b / 2.0), sb = std::sin(theta_b / 2.0);
  const Complex ep = std::polar(1.0, -a_plus);
  const Complex em = std::polar(1.0, -a_minus);
  const Complex eneg = std::polar(1.0, -phi);
  const Complex epos = std::polar(1.0, phi);
  Mat2 u;
  u(0, 0) = sb * sa * em + cb * ca * ep;
  u(0, 1) = -sb * ca * eneg * em + cb * sa * eneg * ep;
  u(1, 0) = -cb * sa * epos * em + sb * ca * epos * ep;
  u(1, 1) = cb * ca * em + sb * sa * ep;
  return {GateMatrix(u), a_plus, a_minus};
}

GateMatrix compose_flip(double theta1, double phi, double a_plus, double a_minus) {
  if (!std::isfinite(theta1) || theta1 < 0.0 || theta1 > kPi / 2.0) {
    throw Error("compose_flip: theta1 must lie in [0, pi/2]");
  }
  const auto out = transport_operator(0.0, theta1, phi, a_plus, a_minus);
  const auto back = transport_operator(theta1, 0.0, phi + kPi, a_plus, a_minus);
  return back.matrix * out.matrix;
}

GateMatrix compose_rotation(double theta1, double phi) {
  if (!std::isfinite(theta1) || theta1 < 0.0 || theta1 >= kPi / 2.0) {
    throw Error("compose_rotation: theta1 must lie in [0, pi/2)");
  }
  if (!std::isfinite(phi)) throw Error("compose_rotation: non-finite phi");
  return GateMatrix(rotation_matrix(theta1, phi));
}

GateMatrix ideal_gate(const GateSpec& spec) {
  spec.validate();
  if (spec.scheme == Scheme::composite) return GateMatrix(-kI * sigma_x());
  return GateMatrix(rotation_matrix(spec.theta1, spec.phi0));
}

std::pair<double, double> dynamical_phase(const PulseStage& stage) {
  if (stage.drive_scale != 1.0 || stage.detuning_scale != 1.0) {
    throw Error("dynamical_phase: stage field magnitude is not constant");
  }
  const double a = 0.5 * stage.omega * stage.duration;
  return {a, -a};
}

// ---------------------------------------------------------------- evolution

PureTrajectory evolve_schrodinger(const PulseSchedule& schedule, const StateVector& psi0,
                                  const TwoLevelConfig& cfg) {
  PureTrajectory tr;
  run_schrodinger2(schedule, psi0, cfg, [&](double t, const Vec& y) {
    tr.times.push_back(t);
    tr.states.emplace_back(y);
  });
  return tr;
}

PureTrajectory evolve_schrodinger(const PulseSchedule& schedule, const StateVector& psi0,
                                  const ThreeLevelConfig& cfg) {
  PureTrajectory tr;
  run_schrodinger3(schedule, psi0, cfg, [&](double t, const Vec& y) {
    tr.times.push_back(t);
    tr.states.emplace_back(y);
  });
  return tr;
}

StateVector propagate(const PulseSchedule& schedule, const StateVector& psi0,
                      const TwoLevelConfig& cfg) {
  return StateVector(run_schrodinger2(schedule, psi0, cfg, [](double, const Vec&) {}));
}

StateVector propagate(const PulseSchedule& schedule, const StateVector& psi0,
                      const ThreeLevelConfig& cfg) {
  return StateVector(run_schrodinger3(schedule, psi0, cfg, [](double, const Vec&) {}));
}

GateMatrix integrate_gate(const PulseSchedule& schedule, const TwoLevelConfig& cfg) {
  const StateVector c0 = propagate(schedule, StateVector::basis(2, 0), cfg);
  const StateVector c1 = propagate(schedule, StateVector::basis(2, 1), cfg);
  Mat2 u;
  u.col(0) = c0.amplitudes();
  u.col(1) = c1.amplitudes();
  return GateMatrix(u);
}

MixedTrajectory evolve_lindblad(const PulseSchedule& schedule, const DensityMatrix& rho0,
                                const TwoLevelConfig& cfg, const DecayConfig& decay) {
  MixedTrajectory tr;
  run_lindblad(schedule, rho0, cfg, decay, [&](double t, const Mat& rho) {
    tr.times.push_back(t);
    tr.states.emplace_back(rho);
  });
  return tr;
}

DensityMatrix propagate_lindblad(const PulseSchedule& schedule, const DensityMatrix& rho0,
                                 const TwoLevelConfig& cfg, const DecayConfig& decay) {
  return DensityMatrix(run_lindblad(schedule, rho0, cfg, decay, [](double, const Mat&) {}));
}

}  // namespace geomgate
