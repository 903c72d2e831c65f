#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "cqed/cavity.hpp"
#include "cqed/errors.hpp"
#include "cqed/hybrid.hpp"
#include "cqed/materials.hpp"
#include "cqed/units.hpp"
#include "cqed/version.hpp"

// Scenario ingestion, validation, unit normalization and derivation of
// the full rate set. The config document is JSON with unit-tagged strings
// for dimensional fields; an empty document yields the reference scenario
// (gold sphere r_m = 12 nm, gap d = 3 nm, cavity tuned to the plasmon
// resonance).

namespace cqed::config {

inline constexpr int kSchemaVersion = 1;
inline constexpr double kMaxSphereRadius = 50e-9;  // quasi-static validity
inline constexpr double kMinGap = 1e-9;            // keeps tunneling negligible

/// Full physical scenario. delta_sp = omega_c - omega_sp is the
/// cavity-particle detuning; the cavity frequency is derived from it
/// unless the document pinned omega_c (or lambda_c) explicitly.
struct SystemConfig {
  materials::DrudeMetal metal;
  materials::Medium medium;
  cavity::CavityConfig cavity;
  cavity::EmitterConfig emitter;
  hybrid::NanoGeometry geometry;
  double delta_sp = 0.0;
  bool omega_c_explicit = false;

  /// Resolved copy in normal form: omega_c and delta_sp consistent with
  /// omega_sp, all invariants checked.
  SystemConfig normalized() const {
    SystemConfig out = *this;
    out.metal.validate();
    out.medium.validate();
    const double omega_sp = materials::lspr_frequency(out.metal, out.medium);
    if (out.omega_c_explicit) {
      out.delta_sp = out.cavity.omega_c - omega_sp;
      out.omega_c_explicit = false;
    } else {
      out.cavity.omega_c = omega_sp + out.delta_sp;
    }
    if (!(out.cavity.omega_c > 0.0))
      throw ValidationError("delta_sp: resulting omega_c is non-positive (outside Drude validity)");
    out.cavity.validate();
    out.emitter.validate();
    out.geometry.validate();
    if (out.geometry.r_m > kMaxSphereRadius)
      throw ValidationError("geometry.r_m: exceeds 50 nm quasi-static bound");
    if (out.geometry.d < kMinGap)
      throw ValidationError("geometry.d: below 1 nm tunneling bound");
    if (!(out.emitter.delta_ec + out.cavity.omega_c > 0.0))
      throw ValidationError("emitter.delta_ec: resulting omega_e is non-positive");
    return out;
  }
};

namespace detail {

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

inline void reject_unknown_keys(const nlohmann::json& obj, const char* path,
                                std::initializer_list<const char*> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok)
      throw ValidationError(std::string("unknown config key '") + path + it.key() + "'");
  }
}

inline std::string require_string(const nlohmann::json& v, const std::string& field) {
  if (!v.is_string())
    throw ValidationError(field + ": expected a unit-tagged string, e.g. \"12 nm\"");
  return v.get<std::string>();
}

inline double require_number(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number())
    throw ValidationError(field + ": expected a plain number");
  return v.get<double>();
}

}  // namespace detail

/// Parse a config document without validating; an empty document yields
/// the defaults. Overrides may be applied before normalized().
inline SystemConfig parse_config_document(const std::string& text) {
  SystemConfig cfg;
  std::string body = units::detail::trim(text);
  if (body.empty()) return cfg;

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("config parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("config: top level must be a JSON object");

  detail::reject_unknown_keys(doc, "",
                              {"schema_version", "metal", "medium", "cavity", "emitter",
                               "geometry", "delta_sp"});

  if (doc.contains("schema_version")) {
    const int v = doc["schema_version"].get<int>();
    if (v != kSchemaVersion)
      throw ValidationError("schema_version: unsupported version " + std::to_string(v));
  }
  if (doc.contains("metal")) {
    const auto& m = doc["metal"];
    detail::reject_unknown_keys(m, "metal.", {"omega_p", "gamma_m"});
    if (m.contains("omega_p"))
      cfg.metal.omega_p = units::parse_rate(detail::require_string(m["omega_p"], "metal.omega_p"),
                                            "metal.omega_p");
    if (m.contains("gamma_m"))
      cfg.metal.gamma_m = units::parse_rate(detail::require_string(m["gamma_m"], "metal.gamma_m"),
                                            "metal.gamma_m");
  }
  if (doc.contains("medium")) {
    const auto& m = doc["medium"];
    detail::reject_unknown_keys(m, "medium.", {"eps_b"});
    if (m.contains("eps_b")) cfg.medium.eps_b = detail::require_number(m["eps_b"], "medium.eps_b");
  }
  if (doc.contains("cavity")) {
    const auto& cv = doc["cavity"];
    detail::reject_unknown_keys(
        cv, "cavity.", {"omega_c", "lambda_c", "eps_c", "V_c", "f_c0", "Q0", "kappa1_ratio"});
    if (cv.contains("omega_c") && cv.contains("lambda_c"))
      throw ValidationError("cavity: give omega_c or lambda_c, not both");
    if (cv.contains("omega_c")) {
      cfg.cavity.omega_c = units::parse_rate(
          detail::require_string(cv["omega_c"], "cavity.omega_c"), "cavity.omega_c");
      cfg.omega_c_explicit = true;
    }
    if (cv.contains("lambda_c")) {
      const double lambda = units::parse_length(
          detail::require_string(cv["lambda_c"], "cavity.lambda_c"), "cavity.lambda_c");
      if (!(lambda > 0.0)) throw ValidationError("cavity.lambda_c: must be positive");
      cfg.cavity.omega_c = constants::two_pi * constants::c_light / lambda;
      cfg.omega_c_explicit = true;
    }
    if (cv.contains("eps_c")) cfg.cavity.eps_c = detail::require_number(cv["eps_c"], "cavity.eps_c");
    if (cv.contains("V_c"))
      cfg.cavity.V_c =
          units::parse_volume(detail::require_string(cv["V_c"], "cavity.V_c"), "cavity.V_c");
    if (cv.contains("f_c0")) cfg.cavity.f_c0 = detail::require_number(cv["f_c0"], "cavity.f_c0");
    if (cv.contains("Q0")) cfg.cavity.Q0 = detail::require_number(cv["Q0"], "cavity.Q0");
    if (cv.contains("kappa1_ratio"))
      cfg.cavity.kappa1_ratio = detail::require_number(cv["kappa1_ratio"], "cavity.kappa1_ratio");
  }
  if (doc.contains("emitter")) {
    const auto& em = doc["emitter"];
    detail::reject_unknown_keys(em, "emitter.", {"mu", "delta_ec"});
    if (em.contains("mu"))
      cfg.emitter.mu = units::parse_dipole_moment(detail::require_string(em["mu"], "emitter.mu"),
                                                  "emitter.mu");
    if (em.contains("delta_ec"))
      cfg.emitter.delta_ec = units::parse_rate(
          detail::require_string(em["delta_ec"], "emitter.delta_ec"), "emitter.delta_ec");
  }
  if (doc.contains("geometry")) {
    const auto& g = doc["geometry"];
    detail::reject_unknown_keys(g, "geometry.", {"r_m", "d"});
    if (g.contains("r_m"))
      cfg.geometry.r_m =
          units::parse_length(detail::require_string(g["r_m"], "geometry.r_m"), "geometry.r_m");
    if (g.contains("d"))
      cfg.geometry.d =
          units::parse_length(detail::require_string(g["d"], "geometry.d"), "geometry.d");
  }
  if (doc.contains("delta_sp")) {
    if (cfg.omega_c_explicit)
      throw ValidationError("delta_sp: over-determined, cavity.omega_c/lambda_c already given");
    cfg.delta_sp =
        units::parse_rate(detail::require_string(doc["delta_sp"], "delta_sp"), "delta_sp");
  }
  return cfg;
}

/// Parse + validate in one step.
inline SystemConfig load_config(const std::string& text) {
  return parse_config_document(text).normalized();
}

/// Apply one dotted-path override, e.g. ("geometry.r_m", "20nm").
/// Setting cavity.omega_c/lambda_c pins the cavity frequency; setting
/// delta_sp un-pins it again (last write wins).
inline void apply_override(SystemConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "metal.omega_p") cfg.metal.omega_p = units::parse_rate(value, key);
  else if (key == "metal.gamma_m") cfg.metal.gamma_m = units::parse_rate(value, key);
  else if (key == "medium.eps_b") cfg.medium.eps_b = units::parse_number(value, key);
  else if (key == "cavity.omega_c") {
    cfg.cavity.omega_c = units::parse_rate(value, key);
    cfg.omega_c_explicit = true;
  } else if (key == "cavity.lambda_c") {
    const double lambda = units::parse_length(value, key);
    if (!(lambda > 0.0)) throw ValidationError(key + ": must be positive");
    cfg.cavity.omega_c = constants::two_pi * constants::c_light / lambda;
    cfg.omega_c_explicit = true;
  } else if (key == "cavity.eps_c") cfg.cavity.eps_c = units::parse_number(value, key);
  else if (key == "cavity.V_c") cfg.cavity.V_c = units::parse_volume(value, key);
  else if (key == "cavity.f_c0") cfg.cavity.f_c0 = units::parse_number(value, key);
  else if (key == "cavity.Q0") cfg.cavity.Q0 = units::parse_number(value, key);
  else if (key == "cavity.kappa1_ratio") cfg.cavity.kappa1_ratio = units::parse_number(value, key);
  else if (key == "emitter.mu") cfg.emitter.mu = units::parse_dipole_moment(value, key);
  else if (key == "emitter.delta_ec") cfg.emitter.delta_ec = units::parse_rate(value, key);
  else if (key == "geometry.r_m") cfg.geometry.r_m = units::parse_length(value, key);
  else if (key == "geometry.d") cfg.geometry.d = units::parse_length(value, key);
  else if (key == "delta_sp") {
    cfg.delta_sp = units::parse_rate(value, key);
    cfg.omega_c_explicit = false;
  } else
    throw ValidationError("unknown config key '" + key + "'");
}

/// Canonical serialized form: SI values, rad/s rates, delta_sp instead of
/// an explicit omega_c. serialize(load(doc)) is idempotent.
inline std::string serialize(const SystemConfig& config) {
  const SystemConfig cfg = config.normalized();
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["metal"] = {{"omega_p", detail::fmt17(cfg.metal.omega_p) + " rad/s"},
                  {"gamma_m", detail::fmt17(cfg.metal.gamma_m) + " rad/s"}};
  doc["medium"] = {{"eps_b", cfg.medium.eps_b}};
  doc["cavity"] = {{"eps_c", cfg.cavity.eps_c},
                   {"V_c", detail::fmt17(cfg.cavity.V_c) + " m3"},
                   {"f_c0", cfg.cavity.f_c0},
                   {"Q0", cfg.cavity.Q0},
                   {"kappa1_ratio", cfg.cavity.kappa1_ratio}};
  doc["emitter"] = {{"mu", detail::fmt17(cfg.emitter.mu) + " C*m"},
                    {"delta_ec", detail::fmt17(cfg.emitter.delta_ec) + " rad/s"}};
  doc["geometry"] = {{"r_m", detail::fmt17(cfg.geometry.r_m) + " m"},
                     {"d", detail::fmt17(cfg.geometry.d) + " m"}};
  doc["delta_sp"] = detail::fmt17(cfg.delta_sp) + " rad/s";
  return doc.dump(2) + "\n";
}

/// FNV-1a 64-bit content hash of the canonical serialization.
inline std::string input_digest(const SystemConfig& cfg) {
  const std::string text = serialize(cfg);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

/// Compute the complete derived rate set for one scenario.
inline hybrid::HybridParams derive_all(const SystemConfig& config) {
  const SystemConfig cfg = config.normalized();
  hybrid::HybridParams p;
  p.omega_sp = materials::lspr_frequency(cfg.metal, cfg.medium);
  p.omega_c = cfg.cavity.omega_c;
  p.omega_e = cfg.cavity.omega_c + cfg.emitter.delta_ec;

  const auto eps_m = materials::drude_permittivity(cfg.metal, p.omega_c);
  p.beta = materials::beta_coefficient(eps_m, cfg.medium);

  p.G_c = cavity::g_bare(cfg.cavity, cfg.emitter);
  p.kappa_0 = cavity::kappa_0(cfg.cavity);
  p.kappa_1 = cavity::kappa_1(cfg.cavity);
  p.gamma_s = cavity::gamma_s(cfg.emitter, cfg.medium, p.omega_e);

  p.G_cm = hybrid::g_hybrid(p.G_c, p.beta, cfg.geometry);
  p.h = hybrid::mixing_strength_h(cfg.cavity, cfg.medium, p.beta, cfg.geometry.r_m);
  p.kappa_R = hybrid::kappa_R(cfg.cavity, cfg.medium, p.beta, cfg.geometry.r_m);
  p.kappa_m = hybrid::kappa_m(cfg.cavity, cfg.metal, p.beta, cfg.geometry.r_m);
  p.V_cm = hybrid::mode_volume_hybrid(cfg.cavity, cfg.medium, p.beta);

  p.C_c = hybrid::cooperativity(p, false);
  p.C_cm = hybrid::cooperativity(p, true);
  return p;
}

/// Parameter report: config echo, derived rates, provenance. Contains no
/// wall-clock information so identical inputs yield identical bytes.
struct RunReport {
  SystemConfig config;
  hybrid::HybridParams params;
  std::string input_digest;
  std::string tool_version;
};

inline RunReport make_run_report(const SystemConfig& config) {
  RunReport r;
  r.config = config.normalized();
  r.params = derive_all(r.config);
  r.input_digest = input_digest(r.config);
  r.tool_version = kToolVersion;
  return r;
}

inline std::string format_report(const RunReport& r) {
  const auto& p = r.params;
  auto mhz = [](double w) { return w / constants::two_pi / 1e6; };
  std::string out;
  char buf[160];
  auto line = [&](const char* fmt, auto... args) {
    std::snprintf(buf, sizeof(buf), fmt, args...);
    out += buf;
    out += '\n';
  };
  line("# %s %s parameter report", kToolName, r.tool_version.c_str());
  line("# input_digest %s", r.input_digest.c_str());
  out += "[config]\n";
  out += serialize(r.config);
  out += "[derived]\n";
  line("omega_sp     = %.9e rad/s  (lambda_sp = %.3f nm)", p.omega_sp,
       constants::two_pi * constants::c_light / p.omega_sp * 1e9);
  line("omega_c      = %.9e rad/s  (lambda_c  = %.3f nm)", p.omega_c,
       constants::two_pi * constants::c_light / p.omega_c * 1e9);
  line("beta         = %.9e %+.9e i  (|beta| = %.4f)", p.beta.real(), p.beta.imag(),
       std::abs(p.beta));
  line("G_c/2pi      = %.4f MHz", mhz(p.G_c));
  line("G_cm/2pi     = %.4f MHz", mhz(p.G_cm));
  line("h/2pi        = %.4f MHz", mhz(p.h));
  line("kappa_0/2pi  = %.4f MHz", mhz(p.kappa_0));
  line("kappa_1/2pi  = %.4f MHz", mhz(p.kappa_1));
  line("kappa_R/2pi  = %.4f MHz", mhz(p.kappa_R));
  line("kappa_m/2pi  = %.4f MHz", mhz(p.kappa_m));
  line("gamma_s/2pi  = %.4f MHz", mhz(p.gamma_s));
  line("V_cm         = %.9e m3", p.V_cm);
  line("C_c          = %.6f", p.C_c);
  line("C_cm         = %.6f", p.C_cm);
  line("C_cm/C_c     = %.6f", p.C_cm / p.C_c);
  return out;
}

}  // namespace cqed::config
