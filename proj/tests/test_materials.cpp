#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "cqed/constants.hpp"
#include "cqed/materials.hpp"
#include "oracles.hpp"

using namespace cqed;
using materials::DrudeMetal;
using materials::Medium;
using Complex = std::complex<double>;

TEST_CASE("drude permittivity vanishes at the plasma frequency for a lossless metal") {
  const DrudeMetal metal{6e15, 0.0};
  const auto eps = materials::drude_permittivity(metal, 6e15);
  CHECK(std::abs(eps) < 1e-12);
}

TEST_CASE("drude permittivity approaches 1 at high frequency") {
  const DrudeMetal metal{6e15, 3e14};
  const auto eps = materials::drude_permittivity(metal, 6e18);
  CHECK(std::abs(eps - 1.0) < 1e-5);
}

TEST_CASE("drude permittivity at the plasmon resonance") {
  const DrudeMetal metal;
  const Medium medium;
  const double w_sp = materials::lspr_frequency(metal, medium);
  const auto eps = materials::drude_permittivity(metal, w_sp);
  // Re eps = -2 eps_b is what defines the resonance; the imaginary part
  // follows from the scalar evaluation Im = omega_p^2 gamma / (w (w^2+g^2)).
  CHECK(eps.real() == doctest::Approx(-2.0).epsilon(1e-12));
  const double im_expected =
      metal.omega_p * metal.omega_p * metal.gamma_m /
      (w_sp * (w_sp * w_sp + metal.gamma_m * metal.gamma_m));
  CHECK(eps.imag() == doctest::Approx(im_expected).epsilon(1e-12));
  CHECK(eps.imag() == doctest::Approx(0.26079).epsilon(1e-4));
}

TEST_CASE("drude permittivity rejects non-positive frequency") {
  CHECK_THROWS_AS(materials::drude_permittivity(DrudeMetal{}, 0.0), ValidationError);
  CHECK_THROWS_AS(materials::drude_permittivity(DrudeMetal{}, -1e15), ValidationError);
}

TEST_CASE("drude imaginary part is positive for lossy metal at any positive frequency") {
  oracles::Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const DrudeMetal metal{rng.uniform(1e15, 1e16), rng.uniform(1e12, 5e14)};
    const double w = rng.uniform(1e13, 1e17);
    CHECK(materials::drude_permittivity(metal, w).imag() > 0.0);
  }
}

TEST_CASE("beta coefficient limits") {
  const Medium medium;
  CHECK(std::abs(materials::beta_coefficient(Complex(1.0, 0.0), medium)) == 0.0);
  // near-conductor limit
  const auto b = materials::beta_coefficient(Complex(1e9, 0.0), medium);
  CHECK(b.real() == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("beta coefficient at resonance reproduces |beta| = 11.5") {
  const Medium medium;
  const auto b = materials::beta_coefficient(Complex(-2.0, 0.2607874145), medium);
  // exact at Re eps = -2 eps_b: beta = 1 + 3i / Im eps
  CHECK(b.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.imag() == doctest::Approx(3.0 / 0.2607874145).epsilon(1e-12));
  CHECK(std::abs(b) == doctest::Approx(11.5).epsilon(0.01));
}

TEST_CASE("beta coefficient throws at the exact lossless pole") {
  CHECK_THROWS_AS(materials::beta_coefficient(Complex(-2.0, 0.0), Medium{}), NumericalError);
}

TEST_CASE("beta magnitude blows up monotonically approaching the resonance") {
  const Medium medium;
  const double im = 0.26;
  double prev = 0.0;
  for (double re : {-1.0, -1.5, -1.8, -1.95, -1.99}) {
    const double mag = std::abs(materials::beta_coefficient(Complex(re, im), medium));
    CHECK(mag > prev);
    prev = mag;
  }
  prev = 0.0;
  for (double re : {-3.0, -2.5, -2.2, -2.05, -2.01}) {
    const double mag = std::abs(materials::beta_coefficient(Complex(re, im), medium));
    CHECK(mag > prev);
    prev = mag;
  }
}

TEST_CASE("lspr frequency closed form") {
  SUBCASE("undamped metal in vacuum: omega_p / sqrt(3)") {
    const double w = materials::lspr_frequency(DrudeMetal{6e15, 0.0}, Medium{});
    CHECK(w == doctest::Approx(6e15 / std::sqrt(3.0)).epsilon(1e-14));
  }
  SUBCASE("undamped metal in eps_b = 2: omega_p / sqrt(5)") {
    const double w = materials::lspr_frequency(DrudeMetal{6e15, 0.0}, Medium{2.0});
    CHECK(w == doctest::Approx(6e15 / std::sqrt(5.0)).epsilon(1e-14));
  }
  SUBCASE("default gold agrees with the bisection oracle") {
    const DrudeMetal metal;
    const Medium medium;
    const double w = materials::lspr_frequency(metal, medium);
    const double w_oracle = oracles::lspr_bisection(metal, medium, 1e15, 6e15);
    CHECK(w == doctest::Approx(w_oracle).epsilon(1e-9));
    CHECK(w == doctest::Approx(3.451086785e15).epsilon(1e-9));
    // vacuum wavelength near 546 nm
    const double lambda = constants::two_pi * constants::c_light / w;
    CHECK(lambda == doctest::Approx(545.814e-9).epsilon(1e-4));
  }
  SUBCASE("overdamped metal has no resonance") {
    CHECK_THROWS_AS(materials::lspr_frequency((DrudeMetal{6e15, 4e15}), Medium{}),
                    ValidationError);
  }
}

TEST_CASE("lspr root satisfies the defining equation to 1e-9 relative") {
  oracles::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const DrudeMetal metal{rng.uniform(2e15, 1e16), rng.uniform(0.0, 3e14)};
    const Medium medium{rng.uniform(1.0, 3.0)};
    const double w = materials::lspr_frequency(metal, medium);
    const double residual =
        materials::drude_permittivity(metal, w).real() + 2.0 * medium.eps_b;
    CHECK(std::abs(residual) < 1e-9 * 2.0 * medium.eps_b);
  }
}

TEST_CASE("beta at resonance is 1 + 3i/Im(eps) to first order for default gold") {
  const DrudeMetal metal;
  const Medium medium;
  const double w_sp = materials::lspr_frequency(metal, medium);
  const auto b =
      materials::beta_coefficient(materials::drude_permittivity(metal, w_sp), medium);
  const double im_eps = materials::drude_permittivity(metal, w_sp).imag();
  CHECK(b.real() == doctest::Approx(1.0).epsilon(0.02));
  CHECK(b.imag() == doctest::Approx(3.0 / im_eps).epsilon(0.02));
}

TEST_CASE("polarizability") {
  CHECK(std::abs(materials::polarizability(5e-9, Complex(0.0, 0.0))) == 0.0);
  // 4 pi (12 nm)^3 = 2.171468842e-23 m^3
  const auto a = materials::polarizability(12e-9, Complex(1.0, 0.0));
  CHECK(a.real() == doctest::Approx(2.171468842e-23).epsilon(1e-9));
  const auto ac = materials::polarizability(12e-9, Complex(1.0, 11.5));
  CHECK(ac.real() == doctest::Approx(2.171468842e-23).epsilon(1e-9));
  CHECK(ac.imag() == doctest::Approx(11.5 * 2.171468842e-23).epsilon(1e-9));
  CHECK_THROWS_AS(materials::polarizability(0.0, Complex(1.0, 0.0)), ValidationError);
}

TEST_CASE("struct invariants are enforced") {
  CHECK_THROWS_AS((DrudeMetal{0.0, 0.0}).validate(), ValidationError);
  CHECK_THROWS_AS((DrudeMetal{1e15, -1.0}).validate(), ValidationError);
  CHECK_THROWS_AS((DrudeMetal{1e15, 2e15}).validate(), ValidationError);
  CHECK_THROWS_AS(Medium{0.5}.validate(), ValidationError);
  CHECK_NOTHROW(DrudeMetal{}.validate());
  CHECK_NOTHROW(Medium{}.validate());
}
