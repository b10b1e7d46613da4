// Reference computations that avoid the library's integrator and gate algebra.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "geomgate/schedule.hpp"

namespace oracle {

using C = std::complex<double>;
using M2 = Eigen::Matrix2cd;

/// exp(-i angle/2 (n . sigma)) for a unit axis n, written out by hand.
M2 rotation(double angle, double nx, double ny, double nz);

/// Target gate: rotation by 2*theta1 about (-sin phi, cos phi, 0).
M2 target(double theta1, double phi);

/// 1 - |Tr(a^dag b)| / 2.
double phase_distance(const M2& a, const M2& b);

/// Piecewise exponential midpoint propagator over every stage with n_per_stage
/// slices, using the drive written directly from the stage fields.
M2 exp_midpoint(const geomgate::PulseSchedule& s, int n_per_stage, bool sta = true);

/// Population of |1> under pure decay at rate 2*gamma.
double decayed_population(double gamma, double t);

/// |1> fidelity of a resonant pi pulse with amplitude scaled by eta.
double rabi_flip_fidelity(double eta);

}  // namespace oracle
