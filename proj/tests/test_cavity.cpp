#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cqed/cavity.hpp"
#include "oracles.hpp"

using namespace cqed;
using cavity::CavityConfig;
using cavity::EmitterConfig;
using materials::Medium;

TEST_CASE("kappa_0 is omega_c over Q0") {
  CavityConfig cav;
  cav.omega_c = 3.451086785e15;
  cav.Q0 = 1e7;
  const double k0 = cavity::kappa_0(cav);
  CHECK(k0 == doctest::Approx(3.451086785e8).epsilon(1e-12));
  CHECK(k0 / constants::two_pi == doctest::Approx(55e6).epsilon(0.01));

  CavityConfig unit;
  unit.omega_c = constants::two_pi * 3e14;
  unit.Q0 = constants::two_pi * 3e14;
  CHECK(cavity::kappa_0(unit) == doctest::Approx(1.0).epsilon(1e-14));

  CavityConfig doubled = cav;
  doubled.Q0 = 2.0 * cav.Q0;
  CHECK(cavity::kappa_0(doubled) == doctest::Approx(0.5 * k0).epsilon(1e-14));
}

TEST_CASE("kappa_0 times Q0 recovers omega_c to the last bit pair") {
  oracles::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    CavityConfig cav;
    cav.omega_c = rng.uniform(1e14, 1e16);
    cav.Q0 = rng.uniform(1e4, 1e9);
    CHECK(cavity::kappa_0(cav) * cav.Q0 ==
          doctest::Approx(cav.omega_c).epsilon(1e-15));
  }
}

TEST_CASE("kappa_1 follows the loading ratio") {
  CavityConfig cav;
  CHECK(cavity::kappa_1(cav) == doctest::Approx(5.0 * cavity::kappa_0(cav)).epsilon(1e-14));
}

TEST_CASE("bare coupling reproduces 760 MHz at the reference point") {
  const CavityConfig cav;  // tuned to the default plasmon resonance
  const EmitterConfig emitter;
  const double G = cavity::g_bare(cav, emitter);
  // from an independent scalar evaluation of the formula
  CHECK(G / constants::two_pi / 1e6 == doctest::Approx(759.6615148).epsilon(1e-7));
  CHECK(G / constants::two_pi == doctest::Approx(760e6).epsilon(0.05));
}

TEST_CASE("bare coupling scaling") {
  CavityConfig cav;
  EmitterConfig emitter;
  const double G = cavity::g_bare(cav, emitter);

  SUBCASE("field node gives zero") {
    cav.f_c0 = 0.0;
    CHECK(cavity::g_bare(cav, emitter) == 0.0);
  }
  SUBCASE("quadrupled mode volume halves the coupling") {
    cav.V_c *= 4.0;
    CHECK(cavity::g_bare(cav, emitter) == doctest::Approx(0.5 * G).epsilon(1e-12));
  }
  SUBCASE("linear in mu and f_c0") {
    oracles::Rng rng(11);
    for (int i = 0; i < 50; ++i) {
      const double a = rng.uniform(0.1, 3.0);
      const double b = rng.uniform(0.1, 3.0);
      CavityConfig c2 = cav;
      EmitterConfig e2 = emitter;
      c2.f_c0 = cav.f_c0 * b;
      e2.mu = emitter.mu * a;
      CHECK(cavity::g_bare(c2, e2) == doctest::Approx(a * b * G).epsilon(1e-12));
    }
  }
}

TEST_CASE("spontaneous emission rate") {
  const EmitterConfig emitter;
  const Medium medium;
  const double w_e = 3.451086785e15;
  const double gs = cavity::gamma_s(emitter, medium, w_e);
  CHECK(gs / constants::two_pi == doctest::Approx(1.6e9).epsilon(0.03));
  CHECK(gs / constants::two_pi / 1e6 == doctest::Approx(1589.1033).epsilon(1e-6));

  SUBCASE("zero dipole moment gives zero") {
    EmitterConfig nil = emitter;
    nil.mu = 0.0;
    CHECK(cavity::gamma_s(nil, medium, w_e) == 0.0);
  }
  SUBCASE("cubic frequency scaling") {
    CHECK(cavity::gamma_s(emitter, medium, 2.0 * w_e) ==
          doctest::Approx(8.0 * gs).epsilon(1e-12));
  }
  SUBCASE("rejects non-positive frequency") {
    CHECK_THROWS_AS(cavity::gamma_s(emitter, medium, 0.0), ValidationError);
  }
}

TEST_CASE("config invariants") {
  CavityConfig cav;
  CHECK_NOTHROW(cav.validate());
  cav.f_c0 = 1.5;
  CHECK_THROWS_AS(cav.validate(), ValidationError);
  cav.f_c0 = 0.3;
  cav.Q0 = 0.5;
  CHECK_THROWS_AS(cav.validate(), ValidationError);

  EmitterConfig em;
  CHECK_NOTHROW(em.validate());
  em.mu = 0.0;
  CHECK_THROWS_AS(em.validate(), ValidationError);
}

TEST_CASE("wavelength accessor inverts the frequency") {
  CavityConfig cav;
  CHECK(cav.lambda_c() ==
        doctest::Approx(constants::two_pi * constants::c_light / cav.omega_c).epsilon(1e-15));
}
