#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "cqed/constants.hpp"
#include "cqed/errors.hpp"
#include "cqed/linalg.hpp"
#include "cqed/util.hpp"

// Dispersive-regime collective-spin dynamics in the symmetric (Dicke)
// subspace: one-axis-twisting evolution under H = chi (J_z - J_z^2),
// collective rotations, the pulse-twist-pulse maximally-entangled-state
// protocol and the spin-squeezing parameter.
//
// Conventions: amplitudes are indexed by k = 0..N with J_z eigenvalue
// m = k - N/2; all spins ground is k = 0. Rotations are exp(-i angle J),
// with the y generator sign fixed so that a +pi/2 pulse about y takes
// |g...g> to the (|g>+|e>)/sqrt(2) product state (the Bloch vector moves
// to +x).

namespace cqed::dynamics {

using Complex = std::complex<double>;

/// Normalized state of N identical two-level emitters in the symmetric
/// subspace, dimension N+1.
struct DickeState {
  int n_spins = 1;
  std::vector<Complex> amplitudes;

  double j() const { return 0.5 * n_spins; }
  double m_value(std::size_t k) const { return static_cast<double>(k) - j(); }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
  }

  void validate() const {
    if (n_spins < 1) throw ValidationError("DickeState: n_spins must be >= 1");
    if (amplitudes.size() != static_cast<std::size_t>(n_spins) + 1)
      throw ValidationError("DickeState: amplitude vector must have length N+1");
    for (const auto& a : amplitudes)
      if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
        throw ValidationError("DickeState: non-finite amplitude");
    if (std::abs(norm() - 1.0) > 1e-12)
      throw ValidationError("DickeState: state is not normalized");
  }

  static DickeState all_ground(int n_spins) {
    DickeState s;
    s.n_spins = n_spins;
    s.amplitudes.assign(static_cast<std::size_t>(n_spins) + 1, Complex(0.0, 0.0));
    s.amplitudes[0] = 1.0;
    return s;
  }
};

/// Twisting rate chi = 2 G_cm^2 / (delta_ec - N h) of the dispersively
/// eliminated cavity.
inline double chi_rate(double G_cm, double delta_ec, int n_spins, double h) {
  const double denom = delta_ec - static_cast<double>(n_spins) * h;
  if (denom == 0.0) throw NumericalError("chi_rate: delta_ec - N h vanishes");
  return 2.0 * G_cm * G_cm / denom;
}

/// The dispersive elimination behind chi_rate is trustworthy only for
/// |delta_ec| >= 10 G_cm.
inline bool dispersive_valid(double delta_ec, double G_cm) {
  return std::abs(delta_ec) >= 10.0 * G_cm;
}

struct TwistingModel {
  double chi = 0.0;
  int n_spins = 1;
  double delta_ec = 0.0;
  double h = 0.0;

  void validate() const {
    if (n_spins < 1) throw ValidationError("TwistingModel: n_spins must be >= 1");
    if (delta_ec - static_cast<double>(n_spins) * h == 0.0)
      throw ValidationError("TwistingModel: delta_ec - N h vanishes");
  }
};

/// Exact diagonal evolution under H = chi (J_z - J_z^2): amplitude at m
/// picks up exp(-i chi t (m - m^2)). No time stepping involved.
inline DickeState evolve_twisting(const DickeState& state, double chi, double t) {
  state.validate();
  DickeState out = state;
  for (std::size_t k = 0; k < out.amplitudes.size(); ++k) {
    const double m = out.m_value(k);
    out.amplitudes[k] *= std::exp(Complex(0.0, -chi * t * (m - m * m)));
  }
  return out;
}

enum class Axis { x, y };

namespace detail {

/// Raising coefficient sqrt(j(j+1) - m(m+1)).
inline double ladder_up(double j, double m) {
  const double v = j * (j + 1.0) - m * (m + 1.0);
  return v > 0.0 ? std::sqrt(v) : 0.0;
}

/// Dense rotation matrix exp(-i angle J_x) via eigendecomposition of the
/// real symmetric tridiagonal J_x.
inline std::vector<Complex> rotation_x_matrix(int n_spins, double angle) {
  const std::size_t dim = static_cast<std::size_t>(n_spins) + 1;
  const double j = 0.5 * n_spins;
  std::vector<double> Jx(dim * dim, 0.0);
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    const double c = 0.5 * ladder_up(j, static_cast<double>(k) - j);
    Jx[(k + 1) * dim + k] = c;
    Jx[k * dim + (k + 1)] = c;
  }
  const auto eig = linalg::jacobi_eigh(std::move(Jx), dim);
  std::vector<Complex> phases(dim);
  for (std::size_t k = 0; k < dim; ++k)
    phases[k] = std::exp(Complex(0.0, -angle * eig.w[k]));
  std::vector<Complex> R(dim * dim, Complex(0.0, 0.0));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      Complex sum(0.0, 0.0);
      for (std::size_t k = 0; k < dim; ++k)
        sum += eig.V[a * dim + k] * phases[k] * eig.V[b * dim + k];
      R[a * dim + b] = sum;
    }
  return R;
}

inline DickeState apply_matrix(const DickeState& state, const std::vector<Complex>& R) {
  const std::size_t dim = state.amplitudes.size();
  DickeState out = state;
  for (std::size_t a = 0; a < dim; ++a) {
    Complex sum(0.0, 0.0);
    for (std::size_t b = 0; b < dim; ++b) sum += R[a * dim + b] * state.amplitudes[b];
    out.amplitudes[a] = sum;
  }
  return out;
}

inline void z_phase(DickeState& state, double alpha) {
  for (std::size_t k = 0; k < state.amplitudes.size(); ++k)
    state.amplitudes[k] *= std::exp(Complex(0.0, alpha * state.m_value(k)));
}

}  // namespace detail

/// Collective rotation exp(-i angle J_phi) about the equatorial axis at
/// azimuth phi (phi = 0 is x, phi = pi/2 is y).
inline DickeState rotate_equatorial(const DickeState& state, double phi, double angle) {
  state.validate();
  DickeState v = state;
  detail::z_phase(v, -phi);
  v = detail::apply_matrix(v, detail::rotation_x_matrix(state.n_spins, angle));
  detail::z_phase(v, phi);
  return v;
}

/// Collective rotation exp(-i angle J_axis), axis in {x, y}.
inline DickeState collective_rotation(const DickeState& state, Axis axis, double angle) {
  return rotate_equatorial(state, axis == Axis::x ? 0.0 : 0.5 * constants::pi, angle);
}

namespace detail {

inline std::vector<Complex> apply_jx(const DickeState& s) {
  const std::size_t dim = s.amplitudes.size();
  std::vector<Complex> out(dim, Complex(0.0, 0.0));
  const double j = s.j();
  for (std::size_t k = 0; k < dim; ++k) {
    const double m = s.m_value(k);
    if (k + 1 < dim) out[k + 1] += 0.5 * ladder_up(j, m) * s.amplitudes[k];
    if (k > 0) out[k - 1] += 0.5 * ladder_up(j, m - 1.0) * s.amplitudes[k];
  }
  return out;
}

/// J_y in this module's sign convention, i (J- - J+)/2.
inline std::vector<Complex> apply_jy(const DickeState& s) {
  const std::size_t dim = s.amplitudes.size();
  std::vector<Complex> out(dim, Complex(0.0, 0.0));
  const double j = s.j();
  const Complex I(0.0, 1.0);
  for (std::size_t k = 0; k < dim; ++k) {
    const double m = s.m_value(k);
    if (k + 1 < dim) out[k + 1] += -0.5 * I * ladder_up(j, m) * s.amplitudes[k];
    if (k > 0) out[k - 1] += 0.5 * I * ladder_up(j, m - 1.0) * s.amplitudes[k];
  }
  return out;
}

inline std::vector<Complex> apply_jz(const DickeState& s) {
  std::vector<Complex> out(s.amplitudes.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = s.m_value(k) * s.amplitudes[k];
  return out;
}

inline Complex inner(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace detail

/// Spin-squeezing parameter xi^2 = 4 min_perp <Delta J_perp^2> / N, the
/// minimal variance over directions perpendicular to the mean spin
/// (2x2 covariance diagonalized in closed form). 1 for a coherent spin
/// state; < 1 means squeezing. Requires a nonvanishing mean spin.
inline double squeezing_parameter(const DickeState& state) {
  state.validate();
  const auto jx = detail::apply_jx(state);
  const auto jy = detail::apply_jy(state);
  const auto jz = detail::apply_jz(state);
  const std::vector<Complex>* ops[3] = {&jx, &jy, &jz};

  double mean[3];
  for (int a = 0; a < 3; ++a)
    mean[a] = detail::inner(state.amplitudes, *ops[a]).real();
  const double len = std::sqrt(mean[0] * mean[0] + mean[1] * mean[1] + mean[2] * mean[2]);
  if (len < 1e-12 * state.j())
    throw NumericalError("squeezing_parameter: mean spin vanishes, direction undefined");

  const double n[3] = {mean[0] / len, mean[1] / len, mean[2] / len};
  // orthonormal basis of the plane perpendicular to n
  double a0[3] = {1.0, 0.0, 0.0};
  if (std::abs(n[0]) > 0.9) {
    a0[0] = 0.0;
    a0[1] = 1.0;
  }
  double e1[3] = {n[1] * a0[2] - n[2] * a0[1], n[2] * a0[0] - n[0] * a0[2],
                  n[0] * a0[1] - n[1] * a0[0]};
  const double e1len = std::sqrt(e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]);
  for (auto& v : e1) v /= e1len;
  const double e2[3] = {n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2],
                        n[0] * e1[1] - n[1] * e1[0]};

  const std::size_t dim = state.amplitudes.size();
  std::vector<Complex> v1(dim, Complex(0.0, 0.0)), v2(dim, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < dim; ++i) {
    for (int a = 0; a < 3; ++a) {
      v1[i] += e1[a] * (*ops[a])[i];
      v2[i] += e2[a] * (*ops[a])[i];
    }
  }
  const double var11 = detail::inner(v1, v1).real();
  const double var22 = detail::inner(v2, v2).real();
  const double var12 = detail::inner(v1, v2).real();  // Re<J1 J2> = symmetrized moment
  const double mid = 0.5 * (var11 + var22);
  const double rad = std::sqrt(0.25 * (var11 - var22) * (var11 - var22) + var12 * var12);
  return 4.0 * (mid - rad) / static_cast<double>(state.n_spins);
}

struct NoonResult {
  double fidelity = 0.0;
  double optimal_phase = 0.0;  ///< azimuth of the second pulse axis, rad
};

namespace detail {

/// Overlap with the two-branch extremal state, maximized over the
/// branches' relative phase: (|a_{m=-j}| + |a_{m=+j}|)^2 / 2.
inline double noon_overlap(double amp_ground, double amp_excited) {
  const double s = amp_ground + amp_excited;
  return 0.5 * s * s;
}

}  // namespace detail

/// Pulse - twist - pulse protocol: a +pi/2 pulse about y prepares the
/// (|g>+|e>)^N product state, free evolution runs to chi t = pi/2, and a
/// second pi/2 pulse about an equatorial axis closes the sequence. The
/// reported fidelity against (|g...g> + e^{i phase}|e...e>)/sqrt(2) is
/// maximized over the second pulse's azimuth (1e-3 rad scan plus
/// golden-section refinement) and over the target's relative phase.
inline NoonResult noon_protocol(int n_spins, double chi) {
  if (n_spins < 2) throw ValidationError("noon_protocol: N must be >= 2");
  DickeState state = collective_rotation(DickeState::all_ground(n_spins), Axis::y,
                                         0.5 * constants::pi);
  if (chi != 0.0) state = evolve_twisting(state, chi, 0.5 * constants::pi / chi);

  const std::size_t dim = state.amplitudes.size();
  const auto R = detail::rotation_x_matrix(n_spins, 0.5 * constants::pi);
  // only the extreme components of the rotated state are needed
  auto fidelity_at = [&](double phi) {
    Complex lo(0.0, 0.0), hi(0.0, 0.0);
    for (std::size_t b = 0; b < dim; ++b) {
      const Complex v = std::exp(Complex(0.0, -phi * state.m_value(b))) * state.amplitudes[b];
      lo += R[0 * dim + b] * v;
      hi += R[(dim - 1) * dim + b] * v;
    }
    return detail::noon_overlap(std::abs(lo), std::abs(hi));
  };

  const double step = 1e-3;
  double best_phi = 0.0;
  double best = fidelity_at(0.0);
  for (double phi = step; phi < constants::two_pi; phi += step) {
    const double f = fidelity_at(phi);
    if (f > best) {
      best = f;
      best_phi = phi;
    }
  }
  // golden-section refinement of the scan winner
  double a = best_phi - step;
  double b = best_phi + step;
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = fidelity_at(x1);
  double f2 = fidelity_at(x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = fidelity_at(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = fidelity_at(x1);
    }
  }
  NoonResult out;
  out.fidelity = std::max({best, f1, f2});
  out.optimal_phase = f1 > f2 ? x1 : x2;
  if (best >= f1 && best >= f2) out.optimal_phase = best_phi;
  if (out.optimal_phase < 0.0) out.optimal_phase += constants::two_pi;
  return out;
}

struct SqueezingOptimum {
  double xi2 = 1.0;
  double chi_t = 0.0;
};

/// Minimal xi^2 over twisting phases chi t in (0, pi/2], by scan plus
/// golden-section refinement. Phases where the mean spin vanishes (the
/// cat-state end of the scan) have no squeezing direction and are skipped.
inline SqueezingOptimum optimal_squeezing(int n_spins, std::size_t scan_points = 801) {
  if (n_spins < 2) throw ValidationError("optimal_squeezing: N must be >= 2");
  if (scan_points < 16) scan_points = 16;
  const DickeState css =
      collective_rotation(DickeState::all_ground(n_spins), Axis::y, 0.5 * constants::pi);

  auto xi2_at = [&](double chit) {
    try {
      return squeezing_parameter(evolve_twisting(css, 1.0, chit));
    } catch (const NumericalError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  const double lo = 0.5 * constants::pi / static_cast<double>(scan_points);
  const auto grid = util::linspace(lo, 0.5 * constants::pi, scan_points);
  std::size_t best = 0;
  double fbest = xi2_at(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v = xi2_at(grid[i]);
    if (v < fbest) {
      fbest = v;
      best = i;
    }
  }
  double a = grid[best == 0 ? 0 : best - 1];
  double b = grid[best + 1 < grid.size() ? best + 1 : best];
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - invphi * (b - a);
  double x2 = a + invphi * (b - a);
  double f1 = xi2_at(x1);
  double f2 = xi2_at(x2);
  while (b - a > 1e-10) {
    if (f1 > f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = xi2_at(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = xi2_at(x1);
    }
  }
  SqueezingOptimum out;
  if (f1 <= f2 && f1 <= fbest) {
    out.xi2 = f1;
    out.chi_t = x1;
  } else if (f2 <= fbest) {
    out.xi2 = f2;
    out.chi_t = x2;
  } else {
    out.xi2 = fbest;
    out.chi_t = grid[best];
  }
  return out;
}

}  // namespace cqed::dynamics
