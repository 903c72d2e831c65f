#pragma once

#include <cmath>

#include "cqed/constants.hpp"
#include "cqed/errors.hpp"
#include "cqed/materials.hpp"

// Bare whispering-gallery-mode cavity and dipole emitter: decay rates,
// vacuum Rabi frequency, free-space spontaneous emission.

namespace cqed::cavity {

/// Resonance frequency used as the default cavity tuning: the plasmon
/// resonance of the default gold sphere in vacuum (zero cavity-particle
/// detuning baseline).
inline double default_omega_c() {
  return materials::lspr_frequency(materials::DrudeMetal{}, materials::Medium{});
}

/// Whispering-gallery-mode cavity. The mode volume V_c and the
/// normalized field amplitude f_c0 at the particle site are external
/// inputs (from full-wave simulation); this module attaches no geometry
/// to them.
struct CavityConfig {
  double omega_c = default_omega_c();  ///< resonance, rad/s
  double eps_c = 1.45 * 1.45;          ///< cavity material permittivity
  double V_c = 200e-18;                ///< mode volume, m^3
  double f_c0 = 0.3;                   ///< normalized field at the particle, in (0,1]
  double Q0 = 1.0e7;                   ///< intrinsic quality factor
  double kappa1_ratio = 5.0;           ///< taper loading kappa_1/kappa_0

  double lambda_c() const { return constants::two_pi * constants::c_light / omega_c; }

  void validate() const {
    if (!(omega_c > 0.0)) throw ValidationError("CavityConfig: omega_c must be positive");
    if (!(eps_c > 0.0)) throw ValidationError("CavityConfig: eps_c must be positive");
    if (!(V_c > 0.0)) throw ValidationError("CavityConfig: V_c must be positive");
    if (!(f_c0 > 0.0 && f_c0 <= 1.0))
      throw ValidationError("CavityConfig: f_c0 must be in (0, 1]");
    if (!(Q0 >= 1.0)) throw ValidationError("CavityConfig: Q0 must be >= 1");
    if (!(kappa1_ratio > 0.0))
      throw ValidationError("CavityConfig: kappa1_ratio must be positive");
  }
};

/// Dipole emitter with moment mu (C m) and emitter-cavity detuning
/// delta_ec = omega_e - omega_c (rad/s).
struct EmitterConfig {
  double mu = 2.4e-28;
  double delta_ec = 0.0;

  void validate() const {
    if (!(mu > 0.0)) throw ValidationError("EmitterConfig: mu must be positive");
  }
};

/// Intrinsic energy decay rate of the cavity field, kappa_0 = omega_c/Q0.
inline double kappa_0(const CavityConfig& cavity) { return cavity.omega_c / cavity.Q0; }

/// Taper-loading decay rate kappa_1 = kappa1_ratio * kappa_0.
inline double kappa_1(const CavityConfig& cavity) {
  return cavity.kappa1_ratio * kappa_0(cavity);
}

/// Single-photon coupling strength (vacuum Rabi frequency) of the bare
/// cavity,
///
///   G_c = mu f_c0 sqrt( omega_c / (2 hbar eps0 eps_c V_c) ).
inline double g_bare(const CavityConfig& cavity, const EmitterConfig& emitter) {
  const double denom = 2.0 * constants::hbar * constants::eps0 * cavity.eps_c * cavity.V_c;
  return emitter.mu * cavity.f_c0 * std::sqrt(cavity.omega_c / denom);
}

/// Free-space spontaneous emission rate in the host medium,
///
///   gamma_s = sqrt(eps_b) mu^2 omega_e^3 / (3 pi eps0 hbar c^3).
inline double gamma_s(const EmitterConfig& emitter, const materials::Medium& medium,
                      double omega_e) {
  if (!(omega_e > 0.0)) throw ValidationError("gamma_s: omega_e must be positive");
  const double c3 = constants::c_light * constants::c_light * constants::c_light;
  return std::sqrt(medium.eps_b) * emitter.mu * emitter.mu * omega_e * omega_e * omega_e /
         (3.0 * constants::pi * constants::eps0 * constants::hbar * c3);
}

}  // namespace cqed::cavity
