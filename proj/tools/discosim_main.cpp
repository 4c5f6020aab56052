// discosim - simulator for RIS-jammed ISAC downlinks
// Copyright (C) 2026 The discosim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "discosim/config.hpp"
#include "discosim/dris.hpp"
#include "discosim/experiments.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::string output;
  bool quiet = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path,
                  "configuration file with key = value lines ('#' comments)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--set", flags.overrides,
                  "override a configuration key, e.g. --set dris.n_h=64 "
                  "(repeatable; later values win)");
  cmd->add_option("--seed", flags.seed, "master seed (applied after --set)");
  cmd->add_option("--trials", flags.trials,
                  "Monte-Carlo trials per sweep point (sample count for verify prop1)");
  cmd->add_option("--output", flags.output, "output CSV path");
  cmd->add_flag("--quiet", flags.quiet, "suppress progress lines on stderr");
}

std::string trimmed(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t");
  return text.substr(begin, end - begin + 1);
}

discosim::SimConfig build_config(const CommonFlags& flags) {
  discosim::SimConfig config = flags.config_path.empty()
                                   ? discosim::default_config()
                                   : discosim::load_config(flags.config_path);
  for (const std::string& pair : flags.overrides) {
    const auto eq = pair.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--set expects key=value, got '" + pair + "'");
    discosim::apply_override(config, trimmed(pair.substr(0, eq)),
                             trimmed(pair.substr(eq + 1)));
  }
  if (flags.seed) config.scene.master_seed = *flags.seed;
  if (flags.trials) config.experiment.trials_per_point = *flags.trials;
  return config;
}

std::string resolve_output(const CommonFlags& flags, const discosim::SimConfig& config,
                           const std::string& fallback) {
  if (!flags.output.empty()) return flags.output;
  if (!config.experiment.output_path.empty()) return config.experiment.output_path;
  return fallback;
}

int run_simulate(const CommonFlags& flags, const std::string& kind_arg) {
  const discosim::SimConfig config = build_config(flags);
  discosim::SweepKind kind;
  if (!kind_arg.empty())
    kind = discosim::sweep_kind_from_string(kind_arg);
  else if (config.experiment.kind)
    kind = *config.experiment.kind;
  else
    throw std::invalid_argument(
        "simulate: no experiment kind given (positional argument or experiment.kind)");

  discosim::SweepSpec spec = discosim::make_sweep_spec(
      config, kind, resolve_output(flags, config, discosim::to_string(kind) + ".csv"));
  spec.quiet = flags.quiet;
  discosim::run_sweep(spec);
  if (!flags.quiet) std::printf("wrote %s\n", spec.output_path.c_str());
  return 0;
}

int run_verify(const CommonFlags& flags, const std::string& which) {
  const discosim::SimConfig config = build_config(flags);
  if (which == "prop1") {
    const std::size_t n_samples =
        config.experiment.trials_per_point > 0
            ? static_cast<std::size_t>(config.experiment.trials_per_point)
            : 100000;
    const discosim::Prop1Report report = discosim::verify_prop1(config, n_samples);
    std::printf("samples                 %zu\n", report.n_samples);
    std::printf("entry mean              %.6g%+.6gi  (%.3g standard errors)\n",
                report.entry_mean.real(), report.entry_mean.imag(), report.mean_abs_z);
    std::printf("variance ratio          %.9g\n", report.variance_ratio);
    std::printf("skew (re, im)           %.3g, %.3g\n", report.skew_re, report.skew_im);
    std::printf("excess kurtosis (re, im) %.3g, %.3g\n", report.excess_kurtosis_re,
                report.excess_kurtosis_im);
    std::printf("mean check              %s\n", report.pass_mean ? "PASS" : "FAIL");
    std::printf("variance check          %s\n", report.pass_variance ? "PASS" : "FAIL");
    return 0;
  }
  if (which == "thm1") {
    const int trials =
        config.experiment.trials_per_point > 0 ? config.experiment.trials_per_point : 500;
    const discosim::Thm1Report report = discosim::verify_thm1(config, trials);
    std::printf("trials %d\n", report.trials);
    for (int k = 0; k < config.scene.n_users; ++k) {
      const bool flagged = std::find(report.flagged_users.begin(),
                                     report.flagged_users.end(),
                                     k) != report.flagged_users.end();
      std::printf("user %d  mean sinr %.6g  bound %.6g  %s\n", k, report.mean_sinr(k),
                  report.mean_bound(k), flagged ? "VIOLATION" : "ok");
    }
    std::printf("violations %zu\n", report.flagged_users.size());
    std::printf("bound check %s\n", report.flagged_users.empty() ? "PASS" : "FAIL");
    return 0;
  }
  throw std::invalid_argument("verify: unknown report '" + which +
                              "' (expected prop1 or thm1)");
}

int run_mu_bar(const CommonFlags& flags) {
  const discosim::SimConfig config = build_config(flags);
  config.dris.validate();
  std::printf("%.10g\n", discosim::mean_mu_bar(config.dris));
  return 0;
}

int run_spectrum(const CommonFlags& flags) {
  const discosim::SimConfig config = build_config(flags);
  const std::string output = resolve_output(flags, config, "spectrum.csv");
  discosim::RandomStream stream =
      discosim::derive_stream(config.scene.master_seed, "spectrum", 0);
  const discosim::TrialSpectra spectra = discosim::trial_spectra(config, stream);

  std::ofstream out(output, std::ios::binary);
  if (!out) throw std::runtime_error("spectrum: cannot open output path '" + output + "'");
  out << "angle_deg,clean,jammed\n";
  char buf[128];
  for (std::size_t i = 0; i < spectra.clean.grid_deg.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g\n", spectra.clean.grid_deg[i],
                  spectra.clean.values[i], spectra.jammed.values[i]);
    out << buf;
  }
  if (!out) throw std::runtime_error("spectrum: write failed for '" + output + "'");

  if (!flags.quiet) {
    std::printf("true angle %.9g deg\n", config.scene.target_angle_deg);
    std::printf("clean peak %.9g deg (bias %.9g deg)\n",
                spectra.record.clean_peak_angle_deg, spectra.record.clean_bias_deg);
    std::printf("jammed peak %.9g deg (bias %.9g deg)\n",
                spectra.record.jammed_peak_angle_deg, spectra.record.jammed_bias_deg);
    std::printf("peak loss %.9g dB\n", spectra.record.peak_loss_db);
    std::printf("wrote %s\n", output.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discosim: downlink ISAC simulator with a reconfiguring passive jammer"};
  app.require_subcommand(1);
  app.footer("Configuration keys (for --set and config files):\n" +
             discosim::config_key_help());

  CommonFlags flags;

  std::string simulate_kind;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "run a Monte-Carlo sweep and write the per-curve CSV");
  simulate->add_option("kind", simulate_kind,
                       "sweep kind: sumrate_vs_power | sumrate_vs_nd | "
                       "music_comparison | verify_prop1 | verify_thm1");
  add_common(simulate, flags);

  std::string verify_which;
  CLI::App* verify = app.add_subcommand(
      "verify", "print a statistics (prop1) or bound (thm1) verification report");
  verify->add_option("report", verify_which, "prop1 | thm1")->required();
  add_common(verify, flags);

  CLI::App* mu_bar = app.add_subcommand(
      "mu-bar", "print the reflection-profile scattering constant");
  add_common(mu_bar, flags);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "write clean/jammed MUSIC spectra for one trial");
  add_common(spectrum, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // bad flags are validation errors
  }

  try {
    if (simulate->parsed()) return run_simulate(flags, simulate_kind);
    if (verify->parsed()) return run_verify(flags, verify_which);
    if (mu_bar->parsed()) return run_mu_bar(flags);
    if (spectrum->parsed()) return run_spectrum(flags);
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
