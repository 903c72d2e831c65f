#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "cqed/errors.hpp"

// Metal dispersion, quasi-static sphere response and plasmon-resonance
// solving. All frequencies are angular (rad/s).

namespace cqed::materials {

using Permittivity = std::complex<double>;

/// Free-electron (Drude) metal.
///
///   eps_m(omega) = 1 - omega_p^2 / [omega (omega + i gamma_m)]
///
/// omega_p is the bulk plasma frequency and gamma_m the ohmic damping
/// rate, both in rad/s. Defaults describe the gold nanoparticle used
/// throughout: omega_p = 6e15 rad/s, gamma_m = 3e14 rad/s.
struct DrudeMetal {
  double omega_p = 6.0e15;
  double gamma_m = 3.0e14;

  void validate() const {
    if (!(omega_p > 0.0))
      throw ValidationError("DrudeMetal: omega_p must be positive");
    if (gamma_m < 0.0)
      throw ValidationError("DrudeMetal: gamma_m must be non-negative");
    if (!(gamma_m < omega_p))
      throw ValidationError("DrudeMetal: gamma_m must be below omega_p");
  }
};

/// Non-dispersive host medium with relative permittivity eps_b >= 1.
struct Medium {
  double eps_b = 1.0;

  void validate() const {
    if (!(eps_b >= 1.0))
      throw ValidationError("Medium: eps_b must be >= 1");
  }
};

/// Complex relative permittivity of the metal at angular frequency omega.
/// Im eps_m > 0 for gamma_m > 0 (passive metal).
inline Permittivity drude_permittivity(const DrudeMetal& metal, double omega) {
  if (!(omega > 0.0))
    throw ValidationError("drude_permittivity: omega must be positive");
  const std::complex<double> denom(omega * omega, omega * metal.gamma_m);
  return 1.0 - metal.omega_p * metal.omega_p / denom;
}

/// Clausius-Mossotti factor of a quasi-static sphere,
///
///   beta = (eps_m - eps_b) / (eps_m + 2 eps_b).
///
/// |beta| >> 1 near the dipolar plasmon resonance. Throws if the
/// denominator vanishes exactly (lossless metal at exact resonance).
inline std::complex<double> beta_coefficient(Permittivity eps_m, const Medium& medium) {
  const std::complex<double> denom = eps_m + 2.0 * medium.eps_b;
  if (std::abs(denom) == 0.0)
    throw NumericalError("beta_coefficient: eps_m + 2 eps_b vanishes (lossless pole)");
  return (eps_m - medium.eps_b) / denom;
}

/// Dipolar plasmon resonance frequency, the exact root of
/// Re eps_m(omega) = -2 eps_b under the Drude model:
///
///   omega_sp = sqrt(omega_p^2 / (1 + 2 eps_b) - gamma_m^2)
///
/// Throws if the metal is too lossy to support the resonance.
inline double lspr_frequency(const DrudeMetal& metal, const Medium& medium) {
  const double arg = metal.omega_p * metal.omega_p / (1.0 + 2.0 * medium.eps_b) -
                     metal.gamma_m * metal.gamma_m;
  if (!(arg > 0.0))
    throw ValidationError("lspr_frequency: omega_p^2 <= (1+2 eps_b) gamma_m^2, no resonance");
  return std::sqrt(arg);
}

/// Quasi-static polarizability of a sphere of radius r_m (m^3):
/// alpha = 4 pi r_m^3 beta.
inline std::complex<double> polarizability(double r_m, std::complex<double> beta) {
  if (!(r_m > 0.0))
    throw ValidationError("polarizability: r_m must be positive");
  return 4.0 * 3.14159265358979323846 * r_m * r_m * r_m * beta;
}

}  // namespace cqed::materials
