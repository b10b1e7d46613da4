#include <doctest.h>

#include <cmath>
#include <random>

#include "geomgate/quantum_core.hpp"
#include "oracles.hpp"

using namespace geomgate;

namespace {

Vec vec2(Complex a, Complex b) {
  Vec v(2);
  v << a, b;
  return v;
}

StateVector random_qubit(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return StateVector::qubit({n(rng), n(rng)}, {n(rng), n(rng)});
}

}  // namespace

TEST_SUITE("quantum_core") {

TEST_CASE("pauli convention: sigma_z |0> = +|0>") {
  const Vec zero = StateVector::basis(2, 0).amplitudes();
  CHECK(std::abs((sigma_z() * zero)(0) - 1.0) < 1e-15);
  CHECK(std::abs((sigma_x() * sigma_y() - kI * sigma_z()).norm()) < 1e-15);
}

TEST_CASE("state vector validation") {
  CHECK_THROWS_AS(StateVector(vec2(1.0, 1.0)), Error);
  CHECK_THROWS_AS(StateVector::normalized(vec2(0.0, 0.0)), Error);
  CHECK_THROWS_AS(StateVector::basis(4, 0), Error);
  CHECK_THROWS_AS(StateVector::basis(2, 2), Error);
  CHECK_THROWS_AS(StateVector::qubit(std::nan(""), 1.0), Error);
  CHECK_NOTHROW(StateVector(vec2(1.0, 1e-10)));
  const StateVector plus = StateVector::qubit(1.0, 1.0);
  CHECK(plus.population(0) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("truncate_to_qubit") {
  Vec v(3);
  v << 0.6, 0.0, 0.8;
  const StateVector q = StateVector(v).truncate_to_qubit();
  CHECK(q.dim() == 2);
  CHECK(q.population(0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(StateVector::basis(3, 2).truncate_to_qubit(), Error);
}

TEST_CASE("density matrix validation") {
  Mat m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  CHECK_NOTHROW(DensityMatrix{m});
  Mat not_hermitian = m;
  not_hermitian(0, 1) = Complex(0.5, 0.1);
  CHECK_THROWS_AS(DensityMatrix{not_hermitian}, Error);
  Mat bad_trace = m * 1.1;
  CHECK_THROWS_AS(DensityMatrix{bad_trace}, Error);
  Mat negative(2, 2);
  negative << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(DensityMatrix{negative}, Error);
}

TEST_CASE("gate matrix rejects non-unitary input") {
  Mat2 m;
  m << 1.0, 0.1, 0.0, 1.0;
  CHECK_THROWS_AS(GateMatrix{m}, Error);
  CHECK(unitarity_residual(Mat2::Identity()) == 0.0);
}

TEST_CASE("eigenframe: eigenvectors, energies and orthogonality") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> th(0.0, kPi), ph(-kPi, kPi);
  const double omega = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double theta = th(rng), phi = ph(rng);
    const EigenFrame f = eigenframe(theta, phi, omega);
    Mat2 h;
    h << omega * std::cos(theta), omega * std::sin(theta) * std::polar(1.0, -phi),
        omega * std::sin(theta) * std::polar(1.0, phi), -omega * std::cos(theta);
    h /= 2.0;
    const Vec lm = f.lambda_minus.amplitudes(), lp = f.lambda_plus.amplitudes();
    CHECK((h * lm - f.energy_minus * lm).norm() < 1e-12);
    CHECK((h * lp - f.energy_plus * lp).norm() < 1e-12);
    CHECK(std::abs(lm.dot(lp)) < 1e-12);
    CHECK(f.energy_plus == doctest::Approx(omega / 2));
    CHECK(f.energy_minus == doctest::Approx(-omega / 2));
    // The upper eigenstate points along the field on the Bloch sphere.
    const BlochVector b = bloch_vector(f.lambda_plus), n = f.field_direction();
    CHECK(std::abs(b.x - n.x) + std::abs(b.y - n.y) + std::abs(b.z - n.z) < 1e-12);
  }
}

TEST_CASE("eigenframe argument checks") {
  CHECK_THROWS_AS(eigenframe(-0.1, 0.0, 1.0), Error);
  CHECK_THROWS_AS(eigenframe(kPi + 0.1, 0.0, 1.0), Error);
  CHECK_THROWS_AS(eigenframe(1.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(eigenframe(std::nan(""), 0.0, 1.0), Error);
  CHECK_NOTHROW(eigenframe(0.0, 0.0, 1.0));
  CHECK_NOTHROW(eigenframe(kPi, 0.0, 1.0));
}

TEST_CASE("bloch vector of cardinal states") {
  const double r = 1 / std::sqrt(2.0);
  auto near = [](BlochVector b, double x, double y, double z) {
    return std::abs(b.x - x) + std::abs(b.y - y) + std::abs(b.z - z) < 1e-14;
  };
  CHECK(near(bloch_vector(StateVector::basis(2, 0)), 0, 0, 1));
  CHECK(near(bloch_vector(StateVector::basis(2, 1)), 0, 0, -1));
  CHECK(near(bloch_vector(StateVector::qubit(r, r)), 1, 0, 0));
  CHECK(near(bloch_vector(StateVector::qubit(r, kI * r)), 0, 1, 0));
  CHECK_THROWS_AS(bloch_vector(StateVector::basis(3, 0)), Error);
}

TEST_CASE("bloch vector has unit length for pure states") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    CHECK(bloch_vector(random_qubit(rng)).norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("gate distance ignores global phase and is symmetric") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 100; ++i) {
    const GateMatrix a = axis_rotation({0.0, 0.0, 1.0}, u(rng));
    const GateMatrix b = GateMatrix(std::polar(1.0, u(rng)) * a.matrix());
    CHECK(gate_distance(a, b) < 1e-14);
    const GateMatrix c = axis_rotation({1.0, 0.0, 0.0}, u(rng));
    CHECK(gate_distance(a, c) == doctest::Approx(gate_distance(c, a)).epsilon(1e-12));
    CHECK(gate_distance(a, c) >= 0.0);
  }
  CHECK(gate_distance(GateMatrix(sigma_x()), GateMatrix(sigma_y())) == doctest::Approx(1.0));
}

TEST_CASE("axis rotation matches the hand-written exponential") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> a(-2 * kPi, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    double x = n(rng), y = n(rng), z = n(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    x /= r, y /= r, z /= r;
    const double angle = a(rng);
    const GateMatrix g = axis_rotation({x, y, z}, angle);
    CHECK((g.matrix() - oracle::rotation(angle, x, y, z)).norm() < 1e-13);
  }
  CHECK_THROWS_AS(axis_rotation({0.0, 0.0, 0.0}, 1.0), Error);
}

TEST_CASE("fidelity of pure states and projectors agree") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const StateVector a = random_qubit(rng), b = random_qubit(rng);
    const double fs = fidelity(a, b);
    const double fr = fidelity(DensityMatrix::pure(a), DensityMatrix::pure(b));
    CHECK(fs == doctest::Approx(fr).epsilon(1e-9));
    CHECK(fs <= 1.0);
    CHECK(fidelity(a, a) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

}  // TEST_SUITE
