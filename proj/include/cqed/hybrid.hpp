#pragma once

#include <cmath>
#include <complex>

#include "cqed/cavity.hpp"
#include "cqed/constants.hpp"
#include "cqed/errors.hpp"
#include "cqed/materials.hpp"

// Everything the nanoparticle adds to the bare cavity: local-field
// profile, hybrid mode volume, enhanced coupling, mode mixing, the two
// particle-induced decay channels, and cooperativities.

namespace cqed::hybrid {

/// Sphere radius r_m and emitter-surface gap d (both m). The emitter
/// sits on the sphere axis aligned with the cavity polarization, at
/// distance r = r_m + d from the center. A finite gap is required; the
/// quasi-static description needs r_m well below the wavelength (the
/// configuration-level bounds enforce r_m <= 50 nm, d >= 1 nm).
struct NanoGeometry {
  double r_m = 12e-9;
  double d = 3e-9;

  double center_distance() const { return r_m + d; }

  void validate() const {
    if (!(r_m > 0.0)) throw ValidationError("NanoGeometry: r_m must be positive");
    if (!(d > 0.0)) throw ValidationError("NanoGeometry: d must be positive");
  }
};

/// Complete derived rate set for one scenario. All rates are angular
/// (rad/s); cooperativities are dimensionless.
struct HybridParams {
  std::complex<double> beta;  ///< sphere response at omega_c
  double G_c = 0.0;           ///< bare coupling
  double G_cm = 0.0;          ///< particle-enhanced coupling
  double h = 0.0;             ///< scattering mode-mixing strength
  double kappa_0 = 0.0;       ///< intrinsic cavity decay
  double kappa_1 = 0.0;       ///< taper loading
  double kappa_R = 0.0;       ///< particle scattering decay
  double kappa_m = 0.0;       ///< particle absorption decay
  double gamma_s = 0.0;       ///< emitter spontaneous emission
  double V_cm = 0.0;          ///< hybrid mode volume, m^3
  double C_c = 0.0;           ///< bare cooperativity
  double C_cm = 0.0;          ///< hybrid cooperativity
  // context carried along for spectra/sweeps and reports
  double omega_c = 0.0;
  double omega_sp = 0.0;
  double omega_e = 0.0;
};

/// Co-polarized complex field-enhancement factor at distance r from the
/// sphere center and polar angle theta from the driving polarization,
/// relative to the unperturbed cavity field.
///
/// Interior (r <= r_m): uniform factor (1 - beta). Exterior: the dipole
/// field of the induced moment composes with the driving field,
///
///   factor = cos^2(theta) (1 + 2 beta t) + sin^2(theta) (1 - beta t),
///   t = r_m^3 / r^3,
///
/// which reduces to 1 + 2 beta t on the axis (theta = 0) and to
/// 1 - beta t transverse to it (theta = pi/2). Continuous across the
/// surface along theta = pi/2; the theta = 0 jump is the normal-field
/// boundary condition.
inline std::complex<double> field_profile(std::complex<double> beta, double r_m, double r,
                                          double theta) {
  if (r < 0.0) throw ValidationError("field_profile: r must be non-negative");
  if (!(r_m > 0.0)) throw ValidationError("field_profile: r_m must be positive");
  if (r <= r_m) return 1.0 - beta;
  const double t = (r_m / r) * (r_m / r) * (r_m / r);
  const std::complex<double> radial = 1.0 + 2.0 * beta * t;
  const std::complex<double> tangential = 1.0 - beta * t;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return c * c * radial + s * s * tangential;
}

/// Mode volume of the hybrid photonic-plasmonic mode,
///
///   V_cm = eps_c V_c / ( eps_b |1 + 2 beta|^2 f_c0^2 ),
///
/// roughly |beta|^2 times smaller than the bare V_c near resonance.
inline double mode_volume_hybrid(const cavity::CavityConfig& cavity,
                                 const materials::Medium& medium,
                                 std::complex<double> beta) {
  const double denom_factor = std::abs(1.0 + 2.0 * beta);
  if (denom_factor == 0.0)
    throw NumericalError("mode_volume_hybrid: 1 + 2 beta vanishes");
  return cavity.eps_c * cavity.V_c /
         (medium.eps_b * denom_factor * denom_factor * cavity.f_c0 * cavity.f_c0);
}

/// Particle-enhanced coupling for an emitter on the axis,
/// G_cm = G_c |1 + 2 beta r_m^3 / (r_m + d)^3|.
inline double g_hybrid(double G_c, std::complex<double> beta, const NanoGeometry& geometry) {
  geometry.validate();
  const double r = geometry.center_distance();
  const double t = (geometry.r_m / r) * (geometry.r_m / r) * (geometry.r_m / r);
  return G_c * std::abs(1.0 + 2.0 * beta * t);
}

/// Scattering-induced mixing of the two counter-propagating modes,
///
///   h = 2 pi r_m^3 eps_b omega_c |beta|^2 f_c0^2 / (eps_c V_c).
inline double mixing_strength_h(const cavity::CavityConfig& cavity,
                                const materials::Medium& medium,
                                std::complex<double> beta, double r_m) {
  const double b2 = std::norm(beta);
  return constants::two_pi * r_m * r_m * r_m * medium.eps_b * cavity.omega_c * b2 *
         cavity.f_c0 * cavity.f_c0 / (cavity.eps_c * cavity.V_c);
}

/// Radiation (Rayleigh scattering) energy decay of the cavity modes,
///
///   kappa_R = eps_b^(5/2) (4 pi r_m^3)^2 |beta|^4 omega_c^4 f_c0^2
///             / (6 pi c^3 eps_c V_c).
inline double kappa_R(const cavity::CavityConfig& cavity, const materials::Medium& medium,
                      std::complex<double> beta, double r_m) {
  const double alpha_geom = 4.0 * constants::pi * r_m * r_m * r_m;
  const double b2 = std::norm(beta);
  const double w = cavity.omega_c;
  const double c3 = constants::c_light * constants::c_light * constants::c_light;
  return std::pow(medium.eps_b, 2.5) * alpha_geom * alpha_geom * b2 * b2 * w * w * w * w *
         cavity.f_c0 * cavity.f_c0 / (6.0 * constants::pi * c3 * cavity.eps_c * cavity.V_c);
}

/// Ohmic absorption decay inside the metal,
///
///   kappa_m = 4 pi r_m^3 |1 - beta|^2 omega_p^2 gamma_m f_c0^2
///             / (3 eps_c omega_c^2 V_c).
inline double kappa_m(const cavity::CavityConfig& cavity, const materials::DrudeMetal& metal,
                      std::complex<double> beta, double r_m) {
  const double interior = std::norm(1.0 - beta);
  return 4.0 * constants::pi * r_m * r_m * r_m * interior * metal.omega_p * metal.omega_p *
         metal.gamma_m * cavity.f_c0 * cavity.f_c0 /
         (3.0 * cavity.eps_c * cavity.omega_c * cavity.omega_c * cavity.V_c);
}

/// Cooperativity C = 2 G^2 / (kappa gamma_s) with the loaded total decay.
/// With the particle: C_cm = 2 G_cm^2 / [gamma_s (k0 + k1 + kR + km)];
/// without: C_c = 2 G_c^2 / [gamma_s (k0 + k1)].
inline double cooperativity(const HybridParams& p, bool include_mnp) {
  const double kappa = include_mnp
                           ? p.kappa_0 + p.kappa_1 + p.kappa_R + p.kappa_m
                           : p.kappa_0 + p.kappa_1;
  const double G = include_mnp ? p.G_cm : p.G_c;
  if (!(kappa > 0.0) || !(p.gamma_s > 0.0))
    throw ValidationError("cooperativity: decay rates must be positive");
  return 2.0 * G * G / (p.gamma_s * kappa);
}

/// Near-resonance limit C^I = 2 G_cm^2 / [gamma_s (kR + km)], where the
/// particle-induced loss dominates.
inline double cooperativity_near_resonance(const HybridParams& p) {
  const double kappa = p.kappa_R + p.kappa_m;
  if (!(kappa > 0.0) || !(p.gamma_s > 0.0))
    throw ValidationError("cooperativity_near_resonance: decay rates must be positive");
  return 2.0 * p.G_cm * p.G_cm / (p.gamma_s * kappa);
}

/// Off-resonance limit C^II = 2 G_cm^2 / [gamma_s (k0 + k1)], where the
/// loaded cavity loss dominates. Note 1/C_cm = 1/C^I + 1/C^II exactly.
inline double cooperativity_off_resonance(const HybridParams& p) {
  const double kappa = p.kappa_0 + p.kappa_1;
  if (!(kappa > 0.0) || !(p.gamma_s > 0.0))
    throw ValidationError("cooperativity_off_resonance: decay rates must be positive");
  return 2.0 * p.G_cm * p.G_cm / (p.gamma_s * kappa);
}

}  // namespace cqed::hybrid
