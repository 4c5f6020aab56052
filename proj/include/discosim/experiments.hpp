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

#pragma once

#include <armadillo>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discosim/config.hpp"
#include "discosim/sensing.hpp"

namespace discosim {

// One fully-resolved Monte-Carlo sweep.  Per-trial substreams are
// derive_stream(master_seed, kind name, point_index * 10^6 + trial_index),
// and aggregation reduces in trial order, so results are bit-identical
// regardless of scheduling (thread count comes from DISCOSIM_THREADS).
struct SweepSpec {
  SweepKind kind = SweepKind::sumrate_vs_power;
  std::vector<double> sweep_values;
  int trials_per_point = 0;
  SimConfig config;
  std::string output_path;
  bool quiet = true;

  void validate() const;
};

// Point-level knobs a sweep applies on top of the base configuration.
struct SweepOverrides {
  std::optional<double> p0_dbm;
  std::optional<int> n_d;  // square grid when n_d is a perfect square, else n_h = n_d, n_v = 1
  bool with_sensing = false;
};

// Everything measured in one end-to-end pipeline pass.  "tradeoff" rows use
// the weighted waveform at the configured kappa, "strict" rows the pure
// sensing waveform X0; "jammed"/"jamfree" differ only in whether the aging
// term is applied, over the same channels and symbols.
struct TrialRecord {
  int trial_index = 0;
  double sweep_value = 0.0;
  double rate_upper = 0.0;
  double rate_tradeoff_jamfree = 0.0;
  double rate_tradeoff_jammed = 0.0;
  double rate_tradeoff_bound = 0.0;
  double rate_strict_jamfree = 0.0;
  double rate_strict_jammed = 0.0;
  double rate_strict_bound = 0.0;
  arma::vec sinr_jammed;        // trade-off waveform, per user
  arma::vec sinr_bound;         // analytic bound for the trade-off waveform
  arma::vec sinr_bound_strict;  // analytic bound for the pure sensing waveform
  // Sensing metrics, filled when the sweep asks for them.
  bool has_sensing = false;
  double clean_peak_angle_deg = 0.0;
  double jammed_peak_angle_deg = 0.0;
  double clean_bias_deg = 0.0;
  double jammed_bias_deg = 0.0;
  double peak_loss_db = 0.0;
};

// One pipeline pass: place users, draw channels and the probing-phase
// reflection, compose the pilot estimate, build symbols, solve both waveform
// problems, draw the transmission-phase reflection, evaluate communication
// metrics for both waveforms with and without aging, and (optionally) run
// the echo/MUSIC chain.  Draw order from `stream` is fixed and documented in
// the implementation; identical inputs give identical records.
TrialRecord run_trial(const SimConfig& config, const SweepOverrides& overrides,
                      RandomStream& stream);

// Same pipeline as a sensing-enabled run_trial, but also hands back the two
// MUSIC spectra so they can be exported for plotting.
struct TrialSpectra {
  MusicSpectrum clean;
  MusicSpectrum jammed;
  TrialRecord record;
};
TrialSpectra trial_spectra(const SimConfig& config, RandomStream& stream);

// Proposition-level check of the aging channel's entry statistics: pools
// normalized entries across fresh small-scale/reflection draws at a fixed
// placement and compares against the predicted variance l_cas * N_D * mu_bar.
struct Prop1Report {
  std::size_t n_samples = 0;
  std::complex<double> entry_mean;   // of normalized entries; ~0
  double mean_abs_z = 0.0;           // |entry_mean| in standard-error units
  double entry_variance = 0.0;       // of normalized entries; ~1
  double variance_ratio = 0.0;       // empirical / predicted
  double skew_re = 0.0, excess_kurtosis_re = 0.0;
  double skew_im = 0.0, excess_kurtosis_im = 0.0;
  bool pass_mean = false;      // |mean| below 3 standard errors
  bool pass_variance = false;  // ratio within 5%
};
Prop1Report verify_prop1(const SimConfig& config, std::size_t n_samples);

// Bound check: per user, mean achieved SINR across trials against the mean
// analytic bound; a user is flagged when mean < bound * (1 - 0.02).
struct Thm1Report {
  int trials = 0;
  arma::vec mean_sinr;   // per user
  arma::vec mean_bound;  // per user
  std::vector<int> flagged_users;
};
Thm1Report verify_thm1(const SimConfig& config, int trials);

// Fills in per-kind default sweep grid and trial count where the experiment
// config left them empty, then validates.
SweepSpec make_sweep_spec(const SimConfig& config, SweepKind kind,
                          const std::string& output_path);

// Runs the sweep and writes the CSV: header sweep_value,curve_name,mean,
// stderr,trials; LF endings, '.' decimals, 9 significant digits.  Curve
// names per kind are listed in the README.  Byte-identical across reruns
// with the same spec and master seed.
void run_sweep(const SweepSpec& spec);

}  // namespace discosim
