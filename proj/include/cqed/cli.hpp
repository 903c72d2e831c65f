#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cqed/config.hpp"
#include "cqed/dynamics.hpp"
#include "cqed/io.hpp"
#include "cqed/spectra.hpp"
#include "cqed/sweeps.hpp"
#include "cqed/version.hpp"

// Command-line front end. Every subcommand consumes the same config
// document (defaults when absent), applies dotted-path overrides, and
// writes reproducible artifacts: identical invocation and config give
// byte-identical files.

namespace cqed::cli {

namespace detail {

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out;
  bool verbose = false;
};

inline void add_common(CLI::App* sub, CommonArgs& args, const std::string& default_out) {
  args.out = default_out;
  sub->add_option("-c,--config", args.config_path, "Config document (JSON); defaults when absent");
  sub->add_option("-s,--set", args.overrides,
                  "Override a config field, dotted path: geometry.r_m=20nm");
  sub->add_option("-o,--out", args.out, "Output path" + (default_out.empty()
                                                             ? std::string(" (default: stdout)")
                                                             : " (default: " + default_out + ")"));
  sub->add_flag("-v,--verbose", args.verbose, "Progress notes on stderr");
}

inline config::SystemConfig load(const CommonArgs& args) {
  config::SystemConfig cfg;
  if (!args.config_path.empty())
    cfg = config::parse_config_document(io::read_text_file(args.config_path));
  for (const auto& ov : args.overrides) {
    const auto eq = ov.find('=');
    if (eq == std::string::npos)
      throw ValidationError("--set expects key=value, got '" + ov + "'");
    config::apply_override(cfg, ov.substr(0, eq), ov.substr(eq + 1));
  }
  return cfg.normalized();
}

inline void emit(const CommonArgs& args, const std::string& content) {
  if (args.out.empty()) {
    std::cout << content;
    return;
  }
  io::write_text_file(args.out, content);
  if (args.verbose) std::cerr << "wrote " << args.out << "\n";
}

inline void emit_to(const CommonArgs& args, const std::filesystem::path& path,
                    const std::string& content) {
  io::write_text_file(path, content);
  if (args.verbose) std::cerr << "wrote " << path.string() << "\n";
}

inline std::filesystem::path sibling(const std::string& out, const char* suffix) {
  std::filesystem::path p(out);
  p.replace_extension(suffix);
  return p;
}

inline double hz(double omega) { return omega / constants::two_pi; }

/// delta_ec used by the dispersive protocol: the configured value, or
/// 10 G_cm when the config keeps the emitter on resonance.
inline double dispersive_delta_ec(const config::SystemConfig& cfg,
                                  const hybrid::HybridParams& p, bool verbose) {
  if (cfg.emitter.delta_ec != 0.0) return cfg.emitter.delta_ec;
  if (verbose)
    std::cerr << "delta_ec = 0 in config; using the dispersive threshold 10*G_cm\n";
  return 10.0 * p.G_cm;
}

// ---- subcommand bodies ----

inline void run_params(const CommonArgs& args) {
  const auto cfg = load(args);
  emit(args, config::format_report(config::make_run_report(cfg)));
}

inline void run_field_profile(const CommonArgs& args, const std::string& rmax_text,
                              std::size_t points) {
  const auto cfg = load(args);
  const auto p = config::derive_all(cfg);
  const double r_m = cfg.geometry.r_m;
  const double rmax =
      rmax_text.empty() ? 4.0 * r_m : units::parse_length(rmax_text, "--rmax");
  if (!(rmax > 0.0)) throw ValidationError("--rmax: must be positive");
  if (points < 2) throw ValidationError("--points: need at least 2");

  io::CsvWriter csv;
  csv.comment(std::string(kToolName) + " field-profile");
  csv.comment("input_digest " + config::input_digest(cfg));
  csv.comment("r_m " + io::sci(r_m) + " m, beta " + io::sci(p.beta.real()) + " " +
              io::sci(p.beta.imag()) + " i");
  csv.header({"r_meters", "enh_theta_0", "enh_theta_pi_2"});
  const auto rs = util::linspace(0.0, rmax, points);
  for (const double r : rs) {
    const double e0 = std::abs(hybrid::field_profile(p.beta, r_m, r, 0.0));
    const double e90 =
        std::abs(hybrid::field_profile(p.beta, r_m, r, 0.5 * constants::pi));
    csv.row({r, e0, e90});
  }
  emit(args, csv.str());
}

inline void run_sweep_rm_d(const CommonArgs& args, sweeps::SweepSpec spec) {
  spec.base = load(args);
  const auto result = sweeps::sweep_rm_d(spec);
  const std::string digest = config::input_digest(spec.base);

  io::CsvWriter csv;
  csv.comment(std::string(kToolName) + " sweep-rm-d");
  csv.comment("input_digest " + digest);
  csv.comment("rows: r_m (m); cols: d (m); values: C_cm/C_c");
  std::vector<std::string> head{"r_m_over_d"};
  for (const double d : result.cols) head.push_back(io::sci(d));
  csv.mixed_row(head);
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    std::vector<std::string> cells{io::sci(result.rows[i])};
    for (std::size_t jj = 0; jj < result.cols.size(); ++jj)
      cells.push_back(io::sci(result.at(i, jj)));
    csv.mixed_row(cells);
  }
  emit(args, csv.str());

  nlohmann::ordered_json summary;
  summary["tool"] = std::string(kToolName) + " " + kToolVersion;
  summary["input_digest"] = digest;
  summary["argmax"] = {{"r_m_m", result.rows[result.argmax_row]},
                       {"d_m", result.cols[result.argmax_col]},
                       {"enhancement", result.max_value}};
  emit_to(args, sibling(args.out, ".summary.json"), summary.dump(2) + "\n");
}

inline void run_sweep_detuning(const CommonArgs& args, const std::vector<std::string>& rm_texts,
                               sweeps::SweepSpec spec) {
  spec.base = load(args);
  std::vector<double> rms;
  for (const auto& t : rm_texts) rms.push_back(units::parse_length(t, "--rm"));
  const auto results = sweeps::sweep_detuning(spec, rms);
  const std::string digest = config::input_digest(spec.base);
  const double gamma_m = spec.base.metal.gamma_m;

  io::CsvWriter csv;
  csv.comment(std::string(kToolName) + " sweep-detuning");
  csv.comment("input_digest " + digest);
  std::vector<std::string> head{"delta_sp_over_gamma_m", "delta_sp_rad_s"};
  for (const double rm : rms) head.push_back("enh[rm=" + io::sci(rm) + "]");
  csv.mixed_row(head);
  for (std::size_t i = 0; i < results.front().rows.size(); ++i) {
    std::vector<std::string> cells{io::sci(results.front().rows[i] / gamma_m),
                                   io::sci(results.front().rows[i])};
    for (const auto& res : results) cells.push_back(io::sci(res.values[i]));
    csv.mixed_row(cells);
  }
  emit(args, csv.str());

  nlohmann::ordered_json summary;
  summary["tool"] = std::string(kToolName) + " " + kToolVersion;
  summary["input_digest"] = digest;
  summary["argmax"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < results.size(); ++k) {
    summary["argmax"].push_back({{"r_m_m", rms[k]},
                                 {"delta_sp_rad_s", results[k].rows[results[k].argmax_row]},
                                 {"delta_sp_over_gamma_m",
                                  results[k].rows[results[k].argmax_row] / gamma_m},
                                 {"enhancement", results[k].max_value}});
  }
  emit_to(args, sibling(args.out, ".summary.json"), summary.dump(2) + "\n");
}

inline void run_optimize(const CommonArgs& args, const std::string& rm_text,
                         std::size_t coarse_points) {
  const auto cfg = load(args);
  const double r_m = units::parse_length(rm_text, "--rm");
  const auto opt = sweeps::optimize_detuning(cfg, r_m, coarse_points);
  nlohmann::ordered_json out;
  out["tool"] = std::string(kToolName) + " " + kToolVersion;
  out["input_digest"] = config::input_digest(cfg);
  out["r_m_m"] = r_m;
  out["gamma_m_rad_s"] = cfg.metal.gamma_m;
  out["delta_sp_opt_rad_s"] = opt.delta_sp;
  out["delta_sp_opt_over_gamma_m"] = opt.delta_sp / cfg.metal.gamma_m;
  out["enhancement"] = opt.enhancement;
  emit(args, out.dump(2) + "\n");
}

inline void run_spectrum(const CommonArgs& args, bool no_mnp, bool no_dipole,
                         std::size_t points, double span) {
  const auto cfg = load(args);
  spectra::LinearSystemModel model;
  model.rates = config::derive_all(cfg);
  model.include_mnp = !no_mnp;
  model.include_dipole = !no_dipole;
  model.delta_ec = cfg.emitter.delta_ec;
  const double scale = std::max(model.include_dipole ? model.coupling() : 0.0,
                                model.kappa_total());
  if (points < 16) throw ValidationError("--points: need at least 16");
  if (!(span >= 3.0)) throw ValidationError("--span: must be >= 3");
  model.delta_grid = util::linspace(-span * scale, span * scale, points);

  const auto trace = spectra::sweep_spectrum(model);
  const std::string digest = config::input_digest(cfg);

  io::CsvWriter csv;
  csv.comment(std::string(kToolName) + " spectrum");
  csv.comment("input_digest " + digest);
  csv.comment(std::string("include_mnp ") + (model.include_mnp ? "1" : "0") +
              ", include_dipole " + (model.include_dipole ? "1" : "0"));
  csv.header({"delta_hz", "transmission"});
  for (std::size_t i = 0; i < trace.delta.size(); ++i)
    csv.row({hz(trace.delta[i]), trace.transmission[i]});
  emit(args, csv.str());

  nlohmann::ordered_json dips;
  dips["tool"] = std::string(kToolName) + " " + kToolVersion;
  dips["input_digest"] = digest;
  dips["include_mnp"] = model.include_mnp;
  dips["include_dipole"] = model.include_dipole;
  dips["coarse_grid"] = trace.coarse_grid;
  dips["dips"] = nlohmann::ordered_json::array();
  for (const double d : trace.dip_positions)
    dips["dips"].push_back({{"delta_rad_s", d}, {"delta_hz", hz(d)}});
  dips["modes"] = nlohmann::ordered_json::array();
  for (const auto& ev : spectra::dynamical_matrix_eigenvalues(model))
    dips["modes"].push_back({{"position_rad_s", ev.real()},
                             {"position_hz", hz(ev.real())},
                             {"fwhm_rad_s", -2.0 * ev.imag()},
                             {"fwhm_hz", hz(-2.0 * ev.imag())}});
  emit_to(args, sibling(args.out, ".dips.json"), dips.dump(2) + "\n");
}

inline void run_regimes(const CommonArgs& args, const std::string& rm_text,
                        std::size_t steps) {
  const auto cfg = load(args);
  const double r_m = units::parse_length(rm_text, "--rm");
  const auto curves =
      sweeps::regime_curves(cfg, r_m, sweeps::RangeSpec{-6.0, 4.0, steps});
  io::CsvWriter csv;
  csv.comment(std::string(kToolName) + " regimes, r_m " + io::sci(r_m) + " m");
  csv.comment("input_digest " + config::input_digest(cfg));
  csv.header({"delta_sp_over_gamma_m", "delta_sp_rad_s", "C_cm", "C_I", "C_II"});
  for (std::size_t i = 0; i < curves.delta_sp.size(); ++i)
    csv.row({curves.delta_sp[i] / cfg.metal.gamma_m, curves.delta_sp[i], curves.C_cm[i],
             curves.C_I[i], curves.C_II[i]});
  emit(args, csv.str());
}

inline void run_noon(const CommonArgs& args, int n_spins) {
  const auto cfg = load(args);
  const auto p = config::derive_all(cfg);
  const double delta_ec = dispersive_delta_ec(cfg, p, args.verbose);
  const double chi = dynamics::chi_rate(p.G_cm, delta_ec, n_spins, p.h);
  const auto res = dynamics::noon_protocol(n_spins, chi);
  nlohmann::ordered_json out;
  out["tool"] = std::string(kToolName) + " " + kToolVersion;
  out["input_digest"] = config::input_digest(cfg);
  out["N"] = n_spins;
  out["delta_ec_rad_s"] = delta_ec;
  out["chi_rad_s"] = chi;
  out["chi_hz"] = hz(chi);
  out["t_s"] = 0.5 * constants::pi / chi;
  out["fidelity"] = res.fidelity;
  out["optimal_phase_rad"] = res.optimal_phase;
  out["dispersive_valid"] = dynamics::dispersive_valid(delta_ec, p.G_cm);
  emit(args, out.dump(2) + "\n");
}

inline void run_squeeze(const CommonArgs& args, int n_spins, std::size_t scan_points) {
  const auto cfg = load(args);
  const auto p = config::derive_all(cfg);
  const double delta_ec = dispersive_delta_ec(cfg, p, args.verbose);
  const double chi = dynamics::chi_rate(p.G_cm, delta_ec, n_spins, p.h);
  const auto res = dynamics::optimal_squeezing(n_spins, scan_points);
  nlohmann::ordered_json out;
  out["tool"] = std::string(kToolName) + " " + kToolVersion;
  out["input_digest"] = config::input_digest(cfg);
  out["N"] = n_spins;
  out["delta_ec_rad_s"] = delta_ec;
  out["chi_rad_s"] = chi;
  out["chi_hz"] = hz(chi);
  out["xi2_min"] = res.xi2;
  out["chi_t_opt"] = res.chi_t;
  out["t_opt_s"] = res.chi_t / chi;
  out["dispersive_valid"] = dynamics::dispersive_valid(delta_ec, p.G_cm);
  emit(args, out.dump(2) + "\n");
}

}  // namespace detail

/// Run the tool with argv-style arguments (program name excluded).
/// Exit codes: 0 success, 1 config/validation error, 2 numerical error.
inline int run(std::vector<std::string> args) {
  CLI::App app{std::string(kToolName) +
               " - hybrid photonic-plasmonic cavity QED modeling toolkit"};
  app.require_subcommand(1);

  detail::CommonArgs params_args, profile_args, rmd_args, det_args, opt_args, spec_args,
      reg_args, noon_args, squeeze_args;

  auto* sub_params = app.add_subcommand("params", "Derived rate set report");
  detail::add_common(sub_params, params_args, "");

  auto* sub_profile =
      app.add_subcommand("field-profile", "|enhancement| vs distance for theta = 0, pi/2");
  detail::add_common(sub_profile, profile_args, "field_profile.csv");
  std::string profile_rmax;
  std::size_t profile_points = 401;
  sub_profile->add_option("--rmax", profile_rmax, "Largest radius, e.g. '60 nm' (default 4 r_m)");
  sub_profile->add_option("--points", profile_points, "Grid points (default 401)");

  auto* sub_rmd = app.add_subcommand("sweep-rm-d", "Enhancement grid over (r_m, d)");
  detail::add_common(sub_rmd, rmd_args, "sweep_rm_d.csv");
  std::string rm_min = "1 nm", rm_max = "50 nm", d_min = "1 nm", d_max = "50 nm";
  sweeps::SweepSpec rmd_spec;
  sub_rmd->add_option("--rm-min", rm_min, "Smallest r_m (default 1 nm)");
  sub_rmd->add_option("--rm-max", rm_max, "Largest r_m (default 50 nm)");
  sub_rmd->add_option("--rm-steps", rmd_spec.r_m_range.steps, "r_m steps (default 50)");
  sub_rmd->add_option("--d-min", d_min, "Smallest gap (default 1 nm)");
  sub_rmd->add_option("--d-max", d_max, "Largest gap (default 50 nm)");
  sub_rmd->add_option("--d-steps", rmd_spec.d_range.steps, "d steps (default 50)");
  sub_rmd->add_option("--threads", rmd_spec.threads, "Worker threads (default hardware)");

  auto* sub_det = app.add_subcommand("sweep-detuning", "Enhancement vs cavity-particle detuning");
  detail::add_common(sub_det, det_args, "sweep_detuning.csv");
  std::vector<std::string> det_rms;
  sweeps::SweepSpec det_spec;
  sub_det->add_option("--rm", det_rms, "Sphere radii, e.g. --rm 20nm (default 5,12,20,30 nm)");
  sub_det->add_option("--steps", det_spec.delta_sp_range.steps, "Grid points (default 201)");
  sub_det->add_option("--dsp-min", det_spec.delta_sp_range.min,
                      "Window start in gamma_m units (default -6)");
  sub_det->add_option("--dsp-max", det_spec.delta_sp_range.max,
                      "Window end in gamma_m units (default +4)");
  sub_det->add_option("--threads", det_spec.threads, "Worker threads (default hardware)");

  auto* sub_opt = app.add_subcommand("optimize", "Best detuning in [-6, +4] gamma_m");
  detail::add_common(sub_opt, opt_args, "");
  std::string opt_rm = "12 nm";
  std::size_t opt_points = 201;
  sub_opt->add_option("--rm", opt_rm, "Sphere radius (default 12 nm)");
  sub_opt->add_option("--coarse-points", opt_points, "Coarse grid points (default 201)");

  auto* sub_spec = app.add_subcommand("spectrum", "Steady-state taper transmission trace");
  detail::add_common(sub_spec, spec_args, "spectrum.csv");
  bool no_mnp = false, no_dipole = false;
  std::size_t spec_points = 4001;
  double spec_span = 3.0;
  sub_spec->add_flag("--no-mnp", no_mnp, "Remove the nanoparticle");
  sub_spec->add_flag("--no-dipole", no_dipole, "Remove the dipole emitter");
  sub_spec->add_option("--points", spec_points, "Grid points (default 4001)");
  sub_spec->add_option("--span", spec_span, "Half-span in units of max(G, kappa) (default 3)");

  auto* sub_reg = app.add_subcommand("regimes", "C_cm with its near/off-resonance limits");
  detail::add_common(sub_reg, reg_args, "regimes.csv");
  std::string reg_rm = "20 nm";
  std::size_t reg_steps = 201;
  sub_reg->add_option("--rm", reg_rm, "Sphere radius (default 20 nm)");
  sub_reg->add_option("--steps", reg_steps, "Grid points (default 201)");

  auto* sub_noon = app.add_subcommand("noon", "Pulse-twist-pulse entangling protocol");
  detail::add_common(sub_noon, noon_args, "");
  int noon_n = 4;
  sub_noon->add_option("--N", noon_n, "Number of emitters (default 4)");

  auto* sub_squeeze = app.add_subcommand("squeeze", "Optimal one-axis-twisting squeezing");
  detail::add_common(sub_squeeze, squeeze_args, "");
  int squeeze_n = 10;
  std::size_t squeeze_points = 801;
  sub_squeeze->add_option("--N", squeeze_n, "Number of emitters (default 10)");
  sub_squeeze->add_option("--scan-points", squeeze_points, "chi t scan points (default 801)");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (sub_params->parsed()) detail::run_params(params_args);
    else if (sub_profile->parsed())
      detail::run_field_profile(profile_args, profile_rmax, profile_points);
    else if (sub_rmd->parsed()) {
      rmd_spec.r_m_range.min = units::parse_length(rm_min, "--rm-min");
      rmd_spec.r_m_range.max = units::parse_length(rm_max, "--rm-max");
      rmd_spec.d_range.min = units::parse_length(d_min, "--d-min");
      rmd_spec.d_range.max = units::parse_length(d_max, "--d-max");
      detail::run_sweep_rm_d(rmd_args, rmd_spec);
    } else if (sub_det->parsed()) {
      if (det_rms.empty()) det_rms = {"5 nm", "12 nm", "20 nm", "30 nm"};
      detail::run_sweep_detuning(det_args, det_rms, det_spec);
    } else if (sub_opt->parsed())
      detail::run_optimize(opt_args, opt_rm, opt_points);
    else if (sub_spec->parsed())
      detail::run_spectrum(spec_args, no_mnp, no_dipole, spec_points, spec_span);
    else if (sub_reg->parsed())
      detail::run_regimes(reg_args, reg_rm, reg_steps);
    else if (sub_noon->parsed())
      detail::run_noon(noon_args, noon_n);
    else if (sub_squeeze->parsed())
      detail::run_squeeze(squeeze_args, squeeze_n, squeeze_points);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace cqed::cli
