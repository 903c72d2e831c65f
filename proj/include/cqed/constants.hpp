#pragma once

// Physical constants (CODATA 2018), SI units throughout.

namespace cqed::constants {

/// Reduced Planck constant (J s).
inline constexpr double hbar = 1.054571817e-34;

/// Vacuum permittivity (F/m).
inline constexpr double eps0 = 8.8541878128e-12;

/// Speed of light in vacuum (m/s).
inline constexpr double c_light = 299792458.0;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

}  // namespace cqed::constants
