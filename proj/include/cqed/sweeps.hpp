#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "cqed/config.hpp"
#include "cqed/errors.hpp"
#include "cqed/util.hpp"

// Parameter sweeps over sphere radius, gap and cavity-particle detuning,
// plus the 1-D detuning optimizer. Detuning sweeps move the cavity
// frequency across the fixed plasmon band (omega_c = omega_sp + delta_sp)
// and re-evaluate every omega_c-dependent quantity, including the sphere
// response beta at omega_c.

namespace cqed::sweeps {

/// Inclusive linear range with steps >= 2.
struct RangeSpec {
  double min = 0.0;
  double max = 0.0;
  std::size_t steps = 2;

  void validate(const char* name) const {
    if (steps < 2) throw ValidationError(std::string(name) + ": steps must be >= 2");
    if (!(min < max)) throw ValidationError(std::string(name) + ": min must be below max");
  }
  std::vector<double> values() const { return util::linspace(min, max, steps); }
};

/// Sweep description. delta_sp_range is in units of the metal damping
/// gamma_m; r_m_range/d_range are in meters and must stay inside the
/// configuration bounds (r_m <= 50 nm, d >= 1 nm).
struct SweepSpec {
  RangeSpec r_m_range{1e-9, 50e-9, 50};
  RangeSpec d_range{1e-9, 50e-9, 50};
  RangeSpec delta_sp_range{-6.0, 4.0, 201};
  config::SystemConfig base;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// Row-major grid of cooperativity enhancements with the argmax location.
struct SweepResult {
  std::vector<double> rows;    ///< first axis coordinates
  std::vector<double> cols;    ///< second axis coordinates
  std::vector<double> values;  ///< rows.size() x cols.size(), row-major
  std::size_t argmax_row = 0;
  std::size_t argmax_col = 0;
  double max_value = 0.0;

  double at(std::size_t i, std::size_t j) const { return values[i * cols.size() + j]; }

  void locate_argmax() {
    const auto it = std::max_element(values.begin(), values.end());
    const std::size_t flat = static_cast<std::size_t>(it - values.begin());
    argmax_row = flat / cols.size();
    argmax_col = flat % cols.size();
    max_value = *it;
  }
};

/// Cooperativity enhancement C_cm/C_c for one scenario point.
inline double enhancement(const config::SystemConfig& base, double r_m, double d,
                          double delta_sp) {
  config::SystemConfig cfg = base;
  cfg.geometry.r_m = r_m;
  cfg.geometry.d = d;
  cfg.delta_sp = delta_sp;
  cfg.omega_c_explicit = false;
  const auto p = config::derive_all(cfg);
  return p.C_cm / p.C_c;
}

/// Enhancement grid over (r_m, d) at the base config's detuning.
inline SweepResult sweep_rm_d(const SweepSpec& spec) {
  spec.r_m_range.validate("r_m_range");
  spec.d_range.validate("d_range");
  if (spec.r_m_range.min <= 0.0 || spec.r_m_range.max > config::kMaxSphereRadius)
    throw ValidationError("r_m_range: outside (0, 50 nm] quasi-static bound");
  if (spec.d_range.min < config::kMinGap)
    throw ValidationError("d_range: below 1 nm tunneling bound");

  SweepResult out;
  out.rows = spec.r_m_range.values();
  out.cols = spec.d_range.values();
  out.values.resize(out.rows.size() * out.cols.size());
  const std::size_t ncols = out.cols.size();
  util::parallel_for(
      out.values.size(),
      [&](std::size_t idx) {
        const std::size_t i = idx / ncols;
        const std::size_t j = idx % ncols;
        out.values[idx] =
            enhancement(spec.base, out.rows[i], out.cols[j], spec.base.delta_sp);
      },
      spec.threads);
  out.locate_argmax();
  return out;
}

/// Enhancement vs delta_sp, one result per sphere radius. Rows are the
/// detuning grid (rad/s); the single column records r_m.
inline std::vector<SweepResult> sweep_detuning(const SweepSpec& spec,
                                               const std::vector<double>& r_m_list) {
  spec.delta_sp_range.validate("delta_sp_range");
  if (r_m_list.empty()) throw ValidationError("sweep_detuning: r_m_list is empty");
  const double gamma_m = spec.base.metal.gamma_m;
  if (!(gamma_m > 0.0))
    throw ValidationError("sweep_detuning: gamma_m must be positive to scale the grid");
  const double omega_sp = materials::lspr_frequency(spec.base.metal, spec.base.medium);
  if (!(omega_sp + spec.delta_sp_range.min * gamma_m > 0.0))
    throw ValidationError("delta_sp_range: grid drives omega_c non-positive");

  std::vector<SweepResult> results;
  results.reserve(r_m_list.size());
  for (const double r_m : r_m_list) {
    SweepResult res;
    const auto units = spec.delta_sp_range.values();
    res.rows.resize(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) res.rows[i] = units[i] * gamma_m;
    res.cols = {r_m};
    res.values.resize(res.rows.size());
    util::parallel_for(
        res.values.size(),
        [&](std::size_t i) {
          res.values[i] = enhancement(spec.base, r_m, spec.base.geometry.d, res.rows[i]);
        },
        spec.threads);
    res.locate_argmax();
    results.push_back(std::move(res));
  }
  return results;
}

struct DetuningOptimum {
  double delta_sp = 0.0;
  double enhancement = 0.0;
};

/// Best detuning in [-6, +4] gamma_m: coarse grid (>= 101 points), then
/// golden-section refinement of the bracketing interval down to
/// 1e-4 gamma_m resolution on delta_sp.
inline DetuningOptimum optimize_detuning(const config::SystemConfig& base, double r_m,
                                         std::size_t coarse_points = 201) {
  if (coarse_points < 101) coarse_points = 101;
  const double gamma_m = base.metal.gamma_m;
  if (!(gamma_m > 0.0)) throw ValidationError("optimize_detuning: gamma_m must be positive");
  const double lo = -6.0 * gamma_m;
  const double hi = 4.0 * gamma_m;
  const double d = base.geometry.d;

  auto f = [&](double dsp) { return enhancement(base, r_m, d, dsp); };

  const auto grid = util::linspace(lo, hi, coarse_points);
  std::size_t best = 0;
  double fbest = f(grid[0]);
  std::vector<double> fvals(grid.size());
  fvals[0] = fbest;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    fvals[i] = f(grid[i]);
    if (fvals[i] > fbest) {
      fbest = fvals[i];
      best = i;
    }
  }

  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[best + 1 < grid.size() ? best + 1 : best];
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  const double tol = 1e-4 * gamma_m;
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    }
  }
  DetuningOptimum opt;
  opt.delta_sp = f1 > f2 ? x1 : x2;
  opt.enhancement = std::max({f1, f2, fbest});
  if (fbest >= f1 && fbest >= f2) opt.delta_sp = grid[best];
  return opt;
}

/// The three cooperativity curves of the detuning scan: total C_cm plus
/// its near-resonance (C^I) and off-resonance (C^II) limits. Exactly
/// 1/C_cm = 1/C^I + 1/C^II holds on every point.
struct RegimeCurves {
  std::vector<double> delta_sp;  ///< rad/s
  std::vector<double> C_cm;
  std::vector<double> C_I;
  std::vector<double> C_II;
};

inline RegimeCurves regime_curves(const config::SystemConfig& base, double r_m,
                                  const RangeSpec& delta_sp_range = RangeSpec{-6.0, 4.0, 201},
                                  unsigned threads = 0) {
  delta_sp_range.validate("delta_sp_range");
  const double gamma_m = base.metal.gamma_m;
  RegimeCurves out;
  const auto units = delta_sp_range.values();
  out.delta_sp.resize(units.size());
  for (std::size_t i = 0; i < units.size(); ++i) out.delta_sp[i] = units[i] * gamma_m;
  out.C_cm.resize(units.size());
  out.C_I.resize(units.size());
  out.C_II.resize(units.size());
  util::parallel_for(
      units.size(),
      [&](std::size_t i) {
        config::SystemConfig cfg = base;
        cfg.geometry.r_m = r_m;
        cfg.delta_sp = out.delta_sp[i];
        cfg.omega_c_explicit = false;
        const auto p = config::derive_all(cfg);
        out.C_cm[i] = p.C_cm;
        out.C_I[i] = hybrid::cooperativity_near_resonance(p);
        out.C_II[i] = hybrid::cooperativity_off_resonance(p);
      },
      threads);
  return out;
}

}  // namespace cqed::sweeps
