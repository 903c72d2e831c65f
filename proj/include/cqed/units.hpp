#pragma once

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>

#include "cqed/constants.hpp"
#include "cqed/errors.hpp"

// Unit-tagged quantity parsing. Dimensional config fields are written as
// "<number> <unit>", e.g. "12 nm", "6e15 rad/s", "200 um3". Power-of-ten
// unit scaling is merged into the decimal exponent of the number before a
// single strtod call, so the same physical value expressed in different
// units parses to bit-identical doubles. Hz-family rates are ordinary
// frequencies and are converted to angular frequency (x 2 pi); "rad/s"
// values are taken as-is.

namespace cqed::units {

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

struct SplitQuantity {
  std::string mantissa;  // numeric part without any exponent
  int exp10 = 0;         // decimal exponent carried by the number itself
  std::string unit;      // remainder, trimmed
};

inline SplitQuantity split(const std::string& text, const std::string& field) {
  const std::string t = trim(text);
  std::size_t i = 0;
  if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
  bool digits = false;
  while (i < t.size() && (std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '.')) {
    if (std::isdigit(static_cast<unsigned char>(t[i]))) digits = true;
    ++i;
  }
  if (!digits)
    throw ValidationError(field + ": cannot parse quantity '" + t + "'");
  SplitQuantity out;
  out.mantissa = t.substr(0, i);
  if (i < t.size() && (t[i] == 'e' || t[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < t.size() && (t[j] == '+' || t[j] == '-')) ++j;
    std::size_t k = j;
    while (k < t.size() && std::isdigit(static_cast<unsigned char>(t[k]))) ++k;
    if (k > j) {
      out.exp10 = std::atoi(t.substr(i + 1, k - i - 1).c_str());
      i = k;
    }
  }
  out.unit = trim(std::string_view(t).substr(i));
  return out;
}

/// One correctly-rounded decimal -> double conversion of
/// mantissa x 10^exp10.
inline double compose(const std::string& mantissa, int exp10, const std::string& field) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%se%d", mantissa.c_str(), exp10);
  char* end = nullptr;
  const double v = std::strtod(buf, &end);
  if (end == buf || *end != '\0')
    throw ValidationError(field + ": cannot parse number '" + mantissa + "'");
  return v;
}

}  // namespace detail

/// Length in meters. Units: nm, um (or µm), m.
inline double parse_length(const std::string& text, const std::string& field) {
  const auto q = detail::split(text, field);
  int scale = 0;
  if (q.unit == "m") scale = 0;
  else if (q.unit == "um" || q.unit == "µm") scale = -6;
  else if (q.unit == "nm") scale = -9;
  else
    throw ValidationError(field + ": expected a length unit (nm, um, m), got '" + q.unit + "'");
  return detail::compose(q.mantissa, q.exp10 + scale, field);
}

/// Rate or frequency, returned as angular frequency in rad/s.
/// Units: Hz, MHz, GHz, THz (ordinary frequency, multiplied by 2 pi)
/// or rad/s (taken as-is).
inline double parse_rate(const std::string& text, const std::string& field) {
  const auto q = detail::split(text, field);
  if (q.unit == "rad/s") return detail::compose(q.mantissa, q.exp10, field);
  int scale = 0;
  if (q.unit == "Hz") scale = 0;
  else if (q.unit == "MHz") scale = 6;
  else if (q.unit == "GHz") scale = 9;
  else if (q.unit == "THz") scale = 12;
  else
    throw ValidationError(field +
                          ": expected a rate unit (Hz, MHz, GHz, THz, rad/s), got '" +
                          q.unit + "'");
  return constants::two_pi * detail::compose(q.mantissa, q.exp10 + scale, field);
}

/// Volume in m^3. Units: nm3, um3, m3 (caret forms nm^3 etc. accepted).
inline double parse_volume(const std::string& text, const std::string& field) {
  const auto q = detail::split(text, field);
  int scale = 0;
  if (q.unit == "m3" || q.unit == "m^3") scale = 0;
  else if (q.unit == "um3" || q.unit == "um^3" || q.unit == "µm3" || q.unit == "µm^3")
    scale = -18;
  else if (q.unit == "nm3" || q.unit == "nm^3") scale = -27;
  else
    throw ValidationError(field + ": expected a volume unit (nm3, um3, m3), got '" + q.unit +
                          "'");
  return detail::compose(q.mantissa, q.exp10 + scale, field);
}

/// Dipole moment in C m. Unit tag: C*m (also C.m or Cm).
inline double parse_dipole_moment(const std::string& text, const std::string& field) {
  const auto q = detail::split(text, field);
  if (q.unit != "C*m" && q.unit != "C.m" && q.unit != "Cm" && q.unit != "C·m")
    throw ValidationError(field + ": expected dipole moment unit C*m, got '" + q.unit + "'");
  return detail::compose(q.mantissa, q.exp10, field);
}

/// Plain dimensionless number (no unit tag allowed).
inline double parse_number(const std::string& text, const std::string& field) {
  const auto q = detail::split(text, field);
  if (!q.unit.empty())
    throw ValidationError(field + ": dimensionless field must not carry a unit ('" + q.unit +
                          "')");
  return detail::compose(q.mantissa, q.exp10, field);
}

}  // namespace cqed::units
