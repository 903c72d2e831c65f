#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>

#include "cqed/sweeps.hpp"
#include "oracles.hpp"

using namespace cqed;
using config::SystemConfig;

namespace {
const SystemConfig kBase{};
const double kGamma = kBase.metal.gamma_m;
}  // namespace

TEST_CASE("reference point gains more than two orders of magnitude") {
  CHECK(sweeps::enhancement(kBase, 12e-9, 3e-9, 0.0) > 100.0);
}

TEST_CASE("large gaps lose against the particle-induced decay") {
  const double e = sweeps::enhancement(kBase, 12e-9, 50e-9, 0.0);
  CHECK(e < 1.0);
  CHECK(e == doctest::Approx(0.7937).epsilon(0.01));
}

TEST_CASE("enhancement is non-increasing in the gap at fixed radius") {
  double prev = 1e9;
  for (double d = 1e-9; d <= 50e-9; d += 1e-9) {
    const double e = sweeps::enhancement(kBase, 12e-9, d, 0.0);
    CHECK(e <= prev + 1e-12);
    prev = e;
  }
}

TEST_CASE("a vanishing particle leaves the cooperativity unchanged") {
  // convergence is gap-limited: at a 10 nm gap the 0.5 nm and 1 nm spheres
  // are within 1% and 10% of unity, and the trend toward 1 is monotone
  // even at the reference 3 nm gap
  CHECK(std::abs(sweeps::enhancement(kBase, 0.5e-9, 10e-9, 0.0) - 1.0) < 0.01);
  CHECK(std::abs(sweeps::enhancement(kBase, 1e-9, 10e-9, 0.0) - 1.0) < 0.1);
  const double e1 = std::abs(sweeps::enhancement(kBase, 1e-9, 3e-9, 0.0) - 1.0);
  const double e05 = std::abs(sweeps::enhancement(kBase, 0.5e-9, 3e-9, 0.0) - 1.0);
  const double e025 = std::abs(sweeps::enhancement(kBase, 0.25e-9, 3e-9, 0.0) - 1.0);
  CHECK(e025 < e05);
  CHECK(e05 < e1);
}

TEST_CASE("rm-d grid sweep") {
  sweeps::SweepSpec spec;
  spec.base = kBase;
  spec.r_m_range = {1e-9, 30e-9, 30};
  spec.d_range = {1e-9, 30e-9, 30};
  const auto res = sweeps::sweep_rm_d(spec);
  REQUIRE(res.rows.size() == 30);
  REQUIRE(res.cols.size() == 30);
  REQUIRE(res.values.size() == 900);
  for (const double v : res.values) {
    CHECK(std::isfinite(v));
    CHECK(v > 0.0);
  }
  CHECK(res.max_value == res.at(res.argmax_row, res.argmax_col));
  // the best point beats the reference point
  CHECK(res.max_value > 100.0);
}

TEST_CASE("grid sweeps are bit-identical for any thread count") {
  sweeps::SweepSpec spec;
  spec.base = kBase;
  spec.r_m_range = {1e-9, 30e-9, 17};
  spec.d_range = {1e-9, 20e-9, 13};
  spec.threads = 1;
  const auto serial = sweeps::sweep_rm_d(spec);
  spec.threads = 4;
  const auto parallel = sweeps::sweep_rm_d(spec);
  REQUIRE(serial.values.size() == parallel.values.size());
  CHECK(std::memcmp(serial.values.data(), parallel.values.data(),
                    serial.values.size() * sizeof(double)) == 0);

  spec.delta_sp_range = {-6.0, 4.0, 101};
  spec.threads = 1;
  const auto det_serial = sweeps::sweep_detuning(spec, {20e-9});
  spec.threads = 4;
  const auto det_parallel = sweeps::sweep_detuning(spec, {20e-9});
  CHECK(std::memcmp(det_serial[0].values.data(), det_parallel[0].values.data(),
                    det_serial[0].values.size() * sizeof(double)) == 0);
}

TEST_CASE("invalid sweep ranges are rejected") {
  sweeps::SweepSpec spec;
  spec.base = kBase;
  SUBCASE("too few steps") {
    spec.r_m_range = {1e-9, 10e-9, 1};
    CHECK_THROWS_AS(sweeps::sweep_rm_d(spec), ValidationError);
  }
  SUBCASE("inverted range") {
    spec.d_range = {10e-9, 1e-9, 5};
    CHECK_THROWS_AS(sweeps::sweep_rm_d(spec), ValidationError);
  }
  SUBCASE("radius beyond the quasi-static bound") {
    spec.r_m_range = {1e-9, 80e-9, 5};
    CHECK_THROWS_AS(sweeps::sweep_rm_d(spec), ValidationError);
  }
  SUBCASE("gap below the tunneling bound") {
    spec.d_range = {0.2e-9, 10e-9, 5};
    CHECK_THROWS_AS(sweeps::sweep_rm_d(spec), ValidationError);
  }
  SUBCASE("detuning grid outside Drude validity") {
    spec.delta_sp_range = {-13.0, 4.0, 11};  // omega_c would go negative
    CHECK_THROWS_AS(sweeps::sweep_detuning(spec, {20e-9}), ValidationError);
  }
}

TEST_CASE("detuning sweep shapes") {
  SUBCASE("large sphere has a local minimum at zero detuning") {
    const double e0 = sweeps::enhancement(kBase, 20e-9, 3e-9, 0.0);
    const double em = sweeps::enhancement(kBase, 20e-9, 3e-9, -0.5 * kGamma);
    const double ep = sweeps::enhancement(kBase, 20e-9, 3e-9, +0.5 * kGamma);
    CHECK(e0 < em);
    CHECK(e0 < ep);
  }
  SUBCASE("r_m = 30 nm peak value (regression of the measured model output)") {
    sweeps::SweepSpec spec;
    spec.base = kBase;
    spec.delta_sp_range = {-6.0, 4.0, 2001};
    const auto res = sweeps::sweep_detuning(spec, {30e-9});
    CHECK(res[0].max_value == doctest::Approx(28.25).epsilon(0.02));
    CHECK(res[0].rows[res[0].argmax_row] / kGamma == doctest::Approx(-1.42).epsilon(0.02));
  }
  SUBCASE("tiny sphere gives a flat curve near 1 far from resonance") {
    for (double u : {-6.0, -5.0, -4.0, 3.0, 4.0})
      CHECK(std::abs(sweeps::enhancement(kBase, 1e-9, 3e-9, u * kGamma) - 1.0) < 0.15);
    const double a = sweeps::enhancement(kBase, 1e-9, 3e-9, -6.0 * kGamma);
    const double b = sweeps::enhancement(kBase, 1e-9, 3e-9, -4.0 * kGamma);
    CHECK(std::abs(a - b) < 0.05);
  }
}

TEST_CASE("detuning optimizer") {
  SUBCASE("r_m = 20 nm optimum sits off resonance, against the dense-grid oracle") {
    const auto opt = sweeps::optimize_detuning(kBase, 20e-9);
    CHECK(std::abs(opt.delta_sp) > 0.5 * kGamma);

    // brute-force oracle: dense grid over the same window
    double best = 0.0, best_x = 0.0;
    for (int i = 0; i <= 100000; ++i) {
      const double x = -6.0 * kGamma + 10.0 * kGamma * i / 100000.0;
      const double v = sweeps::enhancement(kBase, 20e-9, 3e-9, x);
      if (v > best) {
        best = v;
        best_x = x;
      }
    }
    CHECK(opt.delta_sp == doctest::Approx(best_x).epsilon(1e-3));
    CHECK(opt.enhancement >= best - 1e-6 * best);
  }
  SUBCASE("r_m = 5 nm optimum is near-resonant") {
    const auto opt = sweeps::optimize_detuning(kBase, 5e-9);
    CHECK(std::abs(opt.delta_sp) < kGamma);
  }
  SUBCASE("refinement never loses to its own coarse grid") {
    for (double rm : {5e-9, 12e-9, 20e-9, 30e-9}) {
      const auto opt = sweeps::optimize_detuning(kBase, rm, 201);
      double coarse_best = 0.0;
      for (int i = 0; i < 201; ++i) {
        const double x = -6.0 * kGamma + 10.0 * kGamma * i / 200.0;
        coarse_best = std::max(coarse_best, sweeps::enhancement(kBase, rm, 3e-9, x));
      }
      CHECK(opt.enhancement >= coarse_best * (1.0 - 1e-12));
    }
  }
}

TEST_CASE("regime curves") {
  const auto curves = sweeps::regime_curves(kBase, 20e-9, sweeps::RangeSpec{-6.0, 4.0, 101});
  REQUIRE(curves.delta_sp.size() == 101);

  SUBCASE("harmonic identity holds on every grid point") {
    for (std::size_t i = 0; i < curves.delta_sp.size(); ++i) {
      const double lhs = 1.0 / curves.C_cm[i];
      const double rhs = 1.0 / curves.C_I[i] + 1.0 / curves.C_II[i];
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), std::abs(rhs)));
    }
  }
  SUBCASE("near resonance the particle loss dominates") {
    // delta_sp = 0 sits at index 60 of the [-6, 4] grid with 101 points
    const std::size_t i0 = 60;
    CHECK(std::abs(curves.delta_sp[i0]) < 1e-6 * kGamma);
    const double ratio = curves.C_cm[i0] / curves.C_I[i0];
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 1.0);
  }
  SUBCASE("far off resonance the loaded cavity loss dominates") {
    const double ratio = curves.C_cm.front() / curves.C_II.front();
    CHECK(ratio >= 0.5);
    CHECK(ratio <= 1.0);
  }
}
