#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qsl/evolution.hpp"
#include "qsl/harness.hpp"

using namespace qsl;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

// H = -eps*sz + d1*sx + d2*sy
Matrix two_level(double eps, double d1, double d2) {
  Matrix h(2, 2);
  h(0, 0) = Complex(-eps, 0);
  h(1, 1) = Complex(eps, 0);
  h(0, 1) = Complex(d1, -d2);
  h(1, 0) = Complex(d1, d2);
  return h;
}

Matrix symmetric_two_level() {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = Complex(1, 0);
  h(1, 1) = Complex(-1, 0);
  return h;
}
}  // namespace

TEST_CASE("evolve at time zero is the identity") {
  auto engine = oracle::seeded_engine(8001);
  const HamiltonianSystem system = spectral_decompose(random_hermitian(engine, 5));
  const QuantumState psi = random_state(engine, 5);
  const QuantumState same = evolve(system, psi, 0.0);
  CHECK((same.amplitudes() - psi.amplitudes()).norm() < 1e-14);
}

TEST_CASE("eigenstates only pick up a phase") {
  const HamiltonianSystem system =
      spectral_decompose(two_level(0.7, 0.0, 0.0));
  const QuantumState psi = QuantumState::basis(2, 1);
  for (const double t : {0.3, 1.7, 12.0, 250.0}) {
    CHECK(angle(psi, evolve(system, psi, t)).theta < 1e-12);
    CHECK(overlap(system, psi, t).theta < 1e-7);  // population route
  }
}

TEST_CASE("two-level evolution matches the closed form and a series oracle") {
  const double eps = 0.3, d1 = 0.4, d2 = 0.3;
  const Matrix h = two_level(eps, d1, d2);
  const HamiltonianSystem system = spectral_decompose(h);
  const QuantumState psi = QuantumState::basis(2, 0);
  const double omega = std::hypot(eps, std::hypot(d1, d2));

  for (int k = 1; k <= 20; ++k) {
    const double t = 0.1 * k;
    const QuantumState evolved = evolve(system, psi, t);

    // <0|psi(t)> = cos(w t) + i (eps/w) sin(w t)
    const Complex expected(std::cos(omega * t), eps / omega * std::sin(omega * t));
    CHECK(std::abs(evolved.amplitudes()(0) - expected) < 1e-12);

    const Vector reference = oracle::series_evolve(h, psi.amplitudes(), t);
    CHECK((evolved.amplitudes() - reference).norm() < 1e-10);

    const OverlapSample sample = overlap(system, psi, t);
    CHECK(std::abs(Complex(sample.s_real, sample.s_imag) - expected) < 1e-12);
  }
}

TEST_CASE("overlap via populations equals the inner product with evolve") {
  auto engine = oracle::seeded_engine(8002);
  const HamiltonianSystem system = spectral_decompose(random_hermitian(engine, 5));
  const QuantumState psi = random_state(engine, 5);
  const OverlapModel model(psi, system);
  for (int k = 0; k < 50; ++k) {
    const double t = 0.37 * k;
    const Complex direct = psi.amplitudes().dot(evolve(system, psi, t).amplitudes());
    const OverlapSample sample = model.at(t);
    CHECK(std::abs(Complex(sample.s_real, sample.s_imag) - direct) < 1e-12);
    CHECK(sample.s_real * sample.s_real + sample.s_imag * sample.s_imag <= 1.0 + 1e-12);
    CHECK(std::abs(std::cos(sample.theta) -
                   std::abs(Complex(sample.s_real, sample.s_imag))) < 1e-12);
  }
}

TEST_CASE("evolution conserves norm, energy statistics, and composes") {
  auto engine = oracle::seeded_engine(8003);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + static_cast<int>(engine() % 7);
    const HamiltonianSystem system = spectral_decompose(random_hermitian(engine, dim));
    const QuantumState psi = random_state(engine, dim);
    const EnergyStats before = energy_stats(psi, system);

    const double t1 = 0.8 + 0.1 * trial;
    const double t2 = 1.9;
    const QuantumState one = evolve(system, psi, t1);
    const QuantumState direct = evolve(system, psi, t1 + t2);
    const QuantumState chained = evolve(system, one, t2);

    CHECK(std::abs(one.amplitudes().norm() - 1.0) < 1e-12);
    CHECK((direct.amplitudes() - chained.amplitudes()).norm() < 1e-11);

    const EnergyStats after = energy_stats(one, system);
    CHECK(after.mean == doctest::Approx(before.mean).epsilon(1e-10));
    CHECK(after.spread == doctest::Approx(before.spread).epsilon(1e-10));
  }
}

TEST_CASE("first_passage on the symmetric two-level clock") {
  // Spectrum {-1, +1}, equal populations: theta(t) = t up to pi/2.
  const HamiltonianSystem system = spectral_decompose(symmetric_two_level());
  Vector amps(2);
  amps << Complex(1, 0), Complex(1, 0);
  const QuantumState psi = QuantumState::normalized(amps);

  // Stops short of pi/2: there |S| = |cos t| only touches zero tangentially,
  // which a sign-change bracket cannot capture.
  for (const double target : {0.2, kPi / 4, 1.2, 1.5}) {
    const double t = first_passage(system, psi, target);
    CHECK(t == doctest::Approx(target).epsilon(1e-9));
    // Minimality: no earlier point reaches the target angle.
    const OverlapModel model(psi, system);
    for (int k = 1; k <= 1000; ++k) {
      const double probe = t * (k / 1000.0) - 1e-9;
      if (probe > 0) {
        CHECK(model.at(probe).theta < target);
      }
    }
  }
  CHECK(first_passage(system, psi, 0.0) == 0.0);
}

TEST_CASE("first_passage error conditions") {
  const HamiltonianSystem system = spectral_decompose(symmetric_two_level());
  CHECK_THROWS_AS(first_passage(system, QuantumState::basis(2, 0), kPi / 4), ZeroSpread);
  Vector amps(2);
  amps << Complex(1, 0), Complex(1, 0);
  const QuantumState psi = QuantumState::normalized(amps);
  CHECK_THROWS_AS(first_passage(system, psi, 2.0), OutOfRange);
  CHECK_THROWS_AS(first_passage(system, psi, -0.1), OutOfRange);

  // Lopsided populations keep |S| >= 0.8: a pi/2 target is never reached.
  Vector lopsided(2);
  lopsided << Complex(3, 0), Complex(1, 0);
  const QuantumState biased = QuantumState::normalized(lopsided);
  CHECK_THROWS_AS(first_passage(system, biased, kPi / 2, 50.0), NotReached);
}

TEST_CASE("default_t_max follows the gap policy") {
  const HamiltonianSystem clock = spectral_decompose(symmetric_two_level());
  CHECK(default_t_max(clock) == doctest::Approx(4 * kPi * 2 / 2.0));

  Matrix flat = 2.0 * Matrix::Identity(3, 3);
  CHECK(default_t_max(spectral_decompose(flat)) == doctest::Approx(1e6));

  Matrix tight = Matrix::Zero(2, 2);
  tight(1, 1) = 1e-9;  // tiny gap: policy hits the cap
  CHECK(default_t_max(spectral_decompose(tight)) == doctest::Approx(1e6));
}
