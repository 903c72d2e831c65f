#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "cqed/errors.hpp"
#include "cqed/hybrid.hpp"
#include "cqed/linalg.hpp"

// Steady-state taper transmission of the weakly driven system: two
// counter-propagating cavity modes, optionally mixed by the particle and
// coupled to the dipole, solved in linear response via input-output
// theory.

namespace cqed::spectra {

using Complex = std::complex<double>;

/// Linear-response model on a probe-detuning grid. Delta = omega - omega_c
/// in rad/s. The grid must be strictly increasing and span at least
/// [-3, +3] x max(G, kappa_total) around zero, with G the coupling in
/// play (0 when the dipole is excluded).
struct LinearSystemModel {
  std::vector<double> delta_grid;
  hybrid::HybridParams rates;
  bool include_mnp = true;
  bool include_dipole = true;
  double delta_ec = 0.0;

  double coupling() const { return include_mnp ? rates.G_cm : rates.G_c; }

  double kappa_total() const {
    return rates.kappa_0 + rates.kappa_1 +
           (include_mnp ? rates.kappa_R + rates.kappa_m : 0.0);
  }

  void validate() const {
    if (delta_grid.size() < 2)
      throw ValidationError("LinearSystemModel: grid needs at least 2 points");
    for (std::size_t i = 1; i < delta_grid.size(); ++i)
      if (!(delta_grid[i] > delta_grid[i - 1]))
        throw ValidationError("LinearSystemModel: grid must be strictly increasing");
    const double scale = std::max(include_dipole ? coupling() : 0.0, kappa_total());
    if (delta_grid.front() > -3.0 * scale || delta_grid.back() < 3.0 * scale)
      throw ValidationError("LinearSystemModel: grid must span [-3,+3] x max(G, kappa_total)");
  }
};

/// Transmission trace with extracted dip locations. coarse_grid flags a
/// grid with fewer than 5 points across the narrowest line.
struct SpectrumTrace {
  std::vector<double> delta;
  std::vector<double> transmission;
  std::vector<double> dip_positions;
  bool coarse_grid = false;
};

/// Steady-state transmission at probe detuning delta. Solves the 3x3
/// complex system for (a_cw, a_ccw, sigma-) with a unit drive entering
/// the cw mode through the taper; the transmitted amplitude is
/// a_in - sqrt(kappa_1) a_cw. Both particle channels damp and mix the
/// two traveling modes equally (diagonal and cross terms alike), so each
/// mode carries shift h and decay kappa_R + kappa_m plus equal
/// cross-coupling.
inline double steady_state_transmission(const LinearSystemModel& model, double delta) {
  const auto& p = model.rates;
  const double m = model.include_mnp ? 1.0 : 0.0;
  const double dip = model.include_dipole ? 1.0 : 0.0;
  const double G = model.coupling();
  const double kx = p.kappa_R + p.kappa_m;
  const double kt = p.kappa_0 + p.kappa_1 + kx * m;
  const Complex I(0.0, 1.0);

  std::vector<Complex> A = {
      I * (-delta + p.h * m) + kt / 2.0, (I * p.h + kx / 2.0) * m, I * G * dip,
      (I * p.h + kx / 2.0) * m, I * (-delta + p.h * m) + kt / 2.0, I * G * dip,
      I * G * dip, I * G * dip, I * (-delta + model.delta_ec) + p.gamma_s / 2.0};
  const double drive = std::sqrt(p.kappa_1);
  std::vector<Complex> b = {drive, 0.0, 0.0};

  const auto x = linalg::solve_dense(std::move(A), std::move(b), 3);
  const Complex out = 1.0 - drive * x[0];
  const double T = std::norm(out);
  if (!std::isfinite(T)) throw NumericalError("steady_state_transmission: non-finite result");
  return T;
}

/// Normal-mode frequencies of the driven system relative to the bare
/// cavity: Re = spectral line position in Delta, -2 Im = full linewidth.
/// Computed in the symmetric/antisymmetric traveling-wave basis, where
/// the problem is block diagonal: the antisymmetric combination keeps the
/// bare loaded linewidth, the symmetric one carries the 2h shift and the
/// doubled particle decay and couples to the dipole with sqrt(2) G.
/// Returns 1, 2 or 3 values depending on the active couplings, sorted by
/// real part.
inline std::vector<Complex> dynamical_matrix_eigenvalues(const LinearSystemModel& model) {
  const auto& p = model.rates;
  const Complex I(0.0, 1.0);
  const double kx = p.kappa_R + p.kappa_m;
  const double kbare = p.kappa_0 + p.kappa_1;

  const Complex antisym = -I * kbare / 2.0;
  std::vector<Complex> out;
  if (!model.include_mnp && !model.include_dipole) {
    out = {antisym};
  } else if (!model.include_dipole) {
    const Complex sym = 2.0 * p.h - I * (kbare + 2.0 * kx) / 2.0;
    out = {antisym, sym};
  } else {
    const double m = model.include_mnp ? 1.0 : 0.0;
    const Complex sym = 2.0 * p.h * m - I * (kbare + 2.0 * kx * m) / 2.0;
    const Complex emitter = model.delta_ec - I * p.gamma_s / 2.0;
    const double G = model.coupling();
    const Complex half_diff = (sym - emitter) / 2.0;
    const Complex rad = std::sqrt(half_diff * half_diff + 2.0 * G * G);
    out = {antisym, (sym + emitter) / 2.0 + rad, (sym + emitter) / 2.0 - rad};
  }
  std::sort(out.begin(), out.end(),
            [](const Complex& a, const Complex& b) { return a.real() < b.real(); });
  return out;
}

namespace detail {

/// Vertex of the parabola through three points; falls back to the middle
/// abscissa when the points are collinear.
inline double parabola_vertex(double x0, double y0, double x1, double y1, double x2,
                              double y2) {
  const double d01 = x1 - x0;
  const double d12 = x1 - x2;
  const double num = d01 * d01 * (y1 - y2) - d12 * d12 * (y1 - y0);
  const double den = d01 * (y1 - y2) - d12 * (y1 - y0);
  if (den == 0.0) return x1;
  const double v = x1 - 0.5 * num / den;
  return std::clamp(v, std::min(x0, x2), std::max(x0, x2));
}

}  // namespace detail

/// Evaluate the transmission on the model grid and locate local minima
/// (three-point comparison with parabolic refinement of each one).
inline SpectrumTrace sweep_spectrum(const LinearSystemModel& model) {
  model.validate();
  SpectrumTrace trace;
  trace.delta = model.delta_grid;
  trace.transmission.resize(trace.delta.size());
  for (std::size_t i = 0; i < trace.delta.size(); ++i)
    trace.transmission[i] = steady_state_transmission(model, trace.delta[i]);

  for (std::size_t i = 1; i + 1 < trace.delta.size(); ++i) {
    if (trace.transmission[i] < trace.transmission[i - 1] &&
        trace.transmission[i] < trace.transmission[i + 1]) {
      trace.dip_positions.push_back(detail::parabola_vertex(
          trace.delta[i - 1], trace.transmission[i - 1], trace.delta[i],
          trace.transmission[i], trace.delta[i + 1], trace.transmission[i + 1]));
    }
  }

  double min_fwhm = 0.0;
  for (const auto& ev : dynamical_matrix_eigenvalues(model)) {
    const double fwhm = -2.0 * ev.imag();
    if (min_fwhm == 0.0 || (fwhm > 0.0 && fwhm < min_fwhm)) min_fwhm = fwhm;
  }
  double max_step = 0.0;
  for (std::size_t i = 1; i < trace.delta.size(); ++i)
    max_step = std::max(max_step, trace.delta[i] - trace.delta[i - 1]);
  trace.coarse_grid = min_fwhm > 0.0 && max_step > min_fwhm / 5.0;
  return trace;
}

}  // namespace cqed::spectra
