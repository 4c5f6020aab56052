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

#include "discosim/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "discosim/channels.hpp"
#include "discosim/comm_metrics.hpp"
#include "discosim/sensing.hpp"
#include "discosim/waveform.hpp"

namespace discosim {

namespace {

int thread_count() {
  if (const char* env = std::getenv("DISCOSIM_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// Runs body(0..n-1) on the configured number of threads.  Callers store
// results in per-index slots and reduce in index order afterwards, so the
// outcome does not depend on scheduling.
void parallel_for(int n, const std::function<void(int)>& body) {
  const int threads = std::min(thread_count(), n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

SimConfig apply_point_overrides(SimConfig config, const SweepOverrides& overrides) {
  if (overrides.p0_dbm) config.scene.p0_dbm = *overrides.p0_dbm;
  if (overrides.n_d) {
    const int n_d = *overrides.n_d;
    if (n_d < 0) throw std::invalid_argument("sweep: element count must be >= 0");
    const int side = static_cast<int>(std::llround(std::sqrt(static_cast<double>(n_d))));
    if (side * side == n_d) {
      config.dris.n_h = side;
      config.dris.n_v = side;
    } else {
      config.dris.n_h = n_d;
      config.dris.n_v = 1;
    }
  }
  return config;
}

struct CsvRow {
  double sweep_value = 0.0;
  std::string curve_name;
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  long long trials = 0;
};

void write_csv(const std::string& path, const std::vector<CsvRow>& rows) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) throw std::runtime_error("run_sweep: cannot open output path '" + path + "'");
  out << "sweep_value,curve_name,mean,stderr,trials\n";
  char buf[160];
  for (const CsvRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.9g,%s,%.9g,%.9g,%lld\n", row.sweep_value,
                  row.curve_name.c_str(), row.mean, row.stderr_of_mean, row.trials);
    out << buf;
  }
  if (!out) throw std::runtime_error("run_sweep: write failed for '" + path + "'");
}

std::pair<double, double> mean_stderr(const std::vector<double>& samples) {
  const auto n = static_cast<double>(samples.size());
  double mean = 0.0;
  for (double v : samples) mean += v;
  mean /= n;
  if (samples.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / (n - 1.0) / n)};
}

bool is_nd_valued(SweepKind kind) { return kind != SweepKind::sumrate_vs_power; }

std::vector<TrialRecord> run_point(const SweepSpec& spec, std::size_t point,
                                   const SweepOverrides& overrides) {
  std::vector<TrialRecord> records(spec.trials_per_point);
  parallel_for(spec.trials_per_point, [&](int t) {
    try {
      RandomStream stream =
          derive_stream(spec.config.scene.master_seed, to_string(spec.kind),
                        static_cast<std::uint64_t>(point) * 1000000ULL +
                            static_cast<std::uint64_t>(t));
      records[t] = run_trial(spec.config, overrides, stream);
      records[t].trial_index = t;
      records[t].sweep_value = spec.sweep_values[point];
    } catch (const std::exception& e) {
      throw std::runtime_error("trial " + std::to_string(t) + " at sweep value " +
                               std::to_string(spec.sweep_values[point]) + ": " + e.what());
    }
  });
  return records;
}

void append_curve(std::vector<CsvRow>& rows, double sweep_value, const std::string& name,
                  const std::vector<TrialRecord>& records,
                  const std::function<double(const TrialRecord&)>& extract) {
  std::vector<double> samples;
  samples.reserve(records.size());
  for (const TrialRecord& rec : records) samples.push_back(extract(rec));
  const auto [mean, se] = mean_stderr(samples);
  rows.push_back({sweep_value, name, mean, se, static_cast<long long>(records.size())});
}

// The analytic bound holds for expected SINRs, so the bound-rate curve maps
// the trial-mean per-user bounds through the rate formula; stderr follows by
// the delta method.
void append_bound_rate(std::vector<CsvRow>& rows, double sweep_value,
                       const std::string& name, const std::vector<TrialRecord>& records,
                       const std::function<const arma::vec&(const TrialRecord&)>& extract) {
  const arma::uword k_users = extract(records.front()).n_elem;
  double rate = 0.0;
  double var = 0.0;
  std::vector<double> samples(records.size());
  for (arma::uword k = 0; k < k_users; ++k) {
    for (std::size_t t = 0; t < records.size(); ++t) samples[t] = extract(records[t])(k);
    const auto [mean, se] = mean_stderr(samples);
    rate += std::log2(1.0 + mean);
    const double slope = 1.0 / ((1.0 + mean) * std::numbers::ln2);
    var += slope * slope * se * se;
  }
  rows.push_back(
      {sweep_value, name, rate, std::sqrt(var), static_cast<long long>(records.size())});
}

}  // namespace

void SweepSpec::validate() const {
  config.validate();
  if (sweep_values.empty())
    throw std::invalid_argument("sweep: sweep_values must be nonempty");
  for (std::size_t i = 1; i < sweep_values.size(); ++i)
    if (!(sweep_values[i] > sweep_values[i - 1]))
      throw std::invalid_argument("sweep: sweep_values must be strictly increasing");
  if (is_nd_valued(kind)) {
    for (double v : sweep_values)
      if (v < 0.0 || v != std::llround(v))
        throw std::invalid_argument(
            "sweep: element-count sweep values must be non-negative integers");
  }
  const int min_trials = kind == SweepKind::verify_prop1   ? 10000
                         : kind == SweepKind::verify_thm1 ? 500
                                                          : 1;
  if (trials_per_point < min_trials)
    throw std::invalid_argument("sweep: trials_per_point must be >= " +
                                std::to_string(min_trials) + " for kind " + to_string(kind));
  if (output_path.empty())
    throw std::invalid_argument("sweep: output path must be set");
}

namespace {

TrialRecord run_trial_impl(const SimConfig& base_config, const SweepOverrides& overrides,
                           RandomStream& stream, MusicSpectrum* clean_out,
                           MusicSpectrum* jammed_out) {
  const SimConfig config = apply_point_overrides(base_config, overrides);
  config.validate();
  const ScenarioConfig& scene = config.scene;
  const double p0 = scene.p0_watts();
  const double sigma2 = dbm_to_watts(noise_variance_dbm(scene.bandwidth_hz));
  const double mu_bar = mean_mu_bar(config.dris);

  // Fixed draw order: placement, direct fading, surface-user fading, probing
  // reflection, symbols, transmission reflection, then sensing noise (clean
  // frame first, then the jammed frame block by block).
  const Placement placement = place_users(scene, stream);
  const arma::cx_mat h_d = gen_direct_channel(placement, scene, stream);
  const arma::cx_mat g = gen_bs_dris_channel(scene, config.dris);
  const arma::cx_mat h_i = gen_dris_user_channel(placement, scene, config.dris, stream);
  const arma::cx_vec phi_pt = sample_reflection(config.dris, stream);
  const arma::cx_mat h_pt = compose_pt_channel(h_d, g, phi_pt, h_i);

  std::vector<double> rho(scene.n_users, 1.0);
  if (config.symbol_scale == SymbolScale::matched) {
    for (int k = 0; k < scene.n_users; ++k)
      rho[k] = std::max(std::sqrt(p0 / scene.n_users) * arma::norm(h_pt.row(k), 2),
                        std::numeric_limits<double>::min());
  }
  const SymbolMatrix s = gen_symbols(scene.n_users, scene.frame_len, rho, stream);

  const WaveformSolution strict = solve_p1(h_pt, s, p0);
  const WaveformSolution tradeoff = solve_p2(h_pt, s, strict.x, scene.kappa, p0);

  const arma::cx_vec phi_dt = sample_reflection(config.dris, stream);
  const arma::cx_mat h_aca = compose_aca_channel(g, phi_pt, phi_dt, h_i);
  const arma::cx_mat h_zero(h_pt.n_rows, h_pt.n_cols, arma::fill::zeros);
  const std::vector<double> l_cas = cascade_loss_per_user(scene, placement);
  const int n_d = config.dris.n_d();

  TrialRecord rec;
  const CommReport jammed_tradeoff =
      evaluate_comm(h_pt, h_aca, tradeoff.x, s, l_cas, n_d, mu_bar, p0, sigma2);
  const CommReport jammed_strict =
      evaluate_comm(h_pt, h_aca, strict.x, s, l_cas, n_d, mu_bar, p0, sigma2);
  rec.rate_tradeoff_jammed = jammed_tradeoff.sum_rate;
  rec.rate_tradeoff_bound = jammed_tradeoff.rate_from_bound;
  rec.sinr_jammed = jammed_tradeoff.sinr_per_user;
  rec.sinr_bound = jammed_tradeoff.sinr_bound_per_user;
  rec.rate_strict_jammed = jammed_strict.sum_rate;
  rec.rate_strict_bound = jammed_strict.rate_from_bound;
  rec.sinr_bound_strict = jammed_strict.sinr_bound_per_user;
  rec.rate_tradeoff_jamfree = sum_rate(sinr_per_user(h_pt, h_zero, tradeoff.x, s, sigma2));
  rec.rate_strict_jamfree = sum_rate(sinr_per_user(h_pt, h_zero, strict.x, s, sigma2));
  rec.rate_upper = upper_bound_rate(rho, sigma2);

  if (overrides.with_sensing) {
    const SensingPaths paths = sensing_paths(scene, config.sensing, config.dris, g, phi_dt);
    const double sigma2_s =
        echo_noise_variance(scene.chi, p0, scene.n_tx, paths.l_s_direct, scene.echo_snr_db);
    const double theta_rad = scene.target_angle_deg * std::numbers::pi / 180.0;
    const arma::cx_vec no_dris(scene.n_tx, arma::fill::zeros);
    const EchoFrame clean =
        synth_echo(paths.direct, no_dris, scene.chi, tradeoff.x, sigma2_s, theta_rad, stream);

    // Jammed frame: the surface keeps reconfiguring while the echo frame is
    // captured; the first block reuses the data-transmission draw.
    const int blocks = std::min(config.sensing.redraws_per_frame, scene.frame_len);
    arma::cx_mat y_jam(scene.n_tx, scene.frame_len);
    int col = 0;
    for (int b = 0; b < blocks; ++b) {
      const int len = (scene.frame_len - col) / (blocks - b);
      const SensingPaths block_paths =
          b == 0 ? paths
                 : sensing_paths(scene, config.sensing, config.dris, g,
                                 sample_reflection(config.dris, stream));
      const EchoFrame part =
          synth_echo(block_paths.direct, block_paths.dris, scene.chi,
                     arma::cx_mat(tradeoff.x.cols(col, col + len - 1)), sigma2_s,
                     theta_rad, stream);
      y_jam.cols(col, col + len - 1) = part.y_s;
      col += len;
    }

    const MusicSpectrum clean_spectrum =
        music_spectrum(sample_covariance(clean.y_s), config.sensing.grid_step_deg, 1,
                       scene.array_spacing);
    const MusicSpectrum jammed_spectrum = music_spectrum(
        sample_covariance(y_jam), config.sensing.grid_step_deg, 1, scene.array_spacing);
    rec.has_sensing = true;
    rec.clean_peak_angle_deg = clean_spectrum.peak_angle_deg;
    rec.jammed_peak_angle_deg = jammed_spectrum.peak_angle_deg;
    rec.clean_bias_deg = doa_bias(clean_spectrum, scene.target_angle_deg);
    rec.jammed_bias_deg = doa_bias(jammed_spectrum, scene.target_angle_deg);
    rec.peak_loss_db = peak_loss(clean_spectrum, jammed_spectrum);
    if (clean_out) *clean_out = clean_spectrum;
    if (jammed_out) *jammed_out = jammed_spectrum;
  }
  return rec;
}

}  // namespace

TrialRecord run_trial(const SimConfig& config, const SweepOverrides& overrides,
                      RandomStream& stream) {
  return run_trial_impl(config, overrides, stream, nullptr, nullptr);
}

TrialSpectra trial_spectra(const SimConfig& config, RandomStream& stream) {
  SweepOverrides overrides;
  overrides.with_sensing = true;
  TrialSpectra out;
  out.record = run_trial_impl(config, overrides, stream, &out.clean, &out.jammed);
  return out;
}

Prop1Report verify_prop1(const SimConfig& config, std::size_t n_samples) {
  config.validate();
  if (n_samples < 10000)
    throw std::invalid_argument("verify_prop1: n_samples must be >= 10^4");
  const ScenarioConfig& scene = config.scene;

  RandomStream placement_stream =
      derive_stream(scene.master_seed, "verify_prop1_placement", 0);
  const Placement placement = place_users(scene, placement_stream);
  const arma::cx_mat g = gen_bs_dris_channel(scene, config.dris);
  const std::vector<double> l_cas = cascade_loss_per_user(scene, placement);
  const double mu_bar = mean_mu_bar(config.dris);
  const double n_d = static_cast<double>(config.dris.n_d());

  std::vector<double> pred(scene.n_users);
  bool degenerate = false;
  for (int k = 0; k < scene.n_users; ++k) {
    pred[k] = l_cas[k] * n_d * mu_bar;
    if (pred[k] <= 0.0) degenerate = true;
  }

  const std::size_t per_batch =
      static_cast<std::size_t>(scene.n_users) * static_cast<std::size_t>(scene.n_tx);
  const std::size_t batches = (n_samples + per_batch - 1) / per_batch;

  double s1r = 0, s1i = 0, s2r = 0, s2i = 0, s3r = 0, s3i = 0, s4r = 0, s4i = 0;
  std::size_t count = 0;
  for (std::size_t b = 0; b < batches; ++b) {
    RandomStream stream = derive_stream(scene.master_seed, "verify_prop1", b);
    const arma::cx_mat h_i = gen_dris_user_channel(placement, scene, config.dris, stream);
    const arma::cx_vec phi_pt = sample_reflection(config.dris, stream);
    const arma::cx_vec phi_dt = sample_reflection(config.dris, stream);
    const arma::cx_mat aca = compose_aca_channel(g, phi_pt, phi_dt, h_i);
    for (int k = 0; k < scene.n_users; ++k) {
      const double scale = degenerate ? 1.0 : 1.0 / std::sqrt(pred[k]);
      for (int n = 0; n < scene.n_tx; ++n) {
        const std::complex<double> z = scale * aca(k, n);
        const double re = z.real(), im = z.imag();
        s1r += re; s2r += re * re; s3r += re * re * re; s4r += re * re * re * re;
        s1i += im; s2i += im * im; s3i += im * im * im; s4i += im * im * im * im;
        ++count;
      }
    }
  }

  const double n = static_cast<double>(count);
  const double mu_re = s1r / n, mu_im = s1i / n;
  const auto central = [&](double s1, double s2, double s3, double s4, double mu,
                           double& m2, double& m3, double& m4) {
    m2 = s2 / n - mu * mu;
    m3 = s3 / n - 3.0 * mu * s2 / n + 2.0 * mu * mu * mu;
    m4 = s4 / n - 4.0 * mu * s3 / n + 6.0 * mu * mu * s2 / n - 3.0 * mu * mu * mu * mu;
  };
  double m2r, m3r, m4r, m2i, m3i, m4i;
  central(s1r, s2r, s3r, s4r, mu_re, m2r, m3r, m4r);
  central(s1i, s2i, s3i, s4i, mu_im, m2i, m3i, m4i);

  Prop1Report report;
  report.n_samples = count;
  report.entry_mean = {mu_re, mu_im};
  report.entry_variance = m2r + m2i;  // complex variance about the mean
  report.variance_ratio = degenerate
                              ? (report.entry_variance == 0.0 ? 1.0
                                                              : std::numeric_limits<double>::infinity())
                              : report.entry_variance;  // prediction is 1 after normalization
  const double se = std::sqrt(std::max(report.entry_variance, 1e-300) / n);
  report.mean_abs_z = std::abs(report.entry_mean) / se;
  report.skew_re = m2r > 0.0 ? m3r / std::pow(m2r, 1.5) : 0.0;
  report.excess_kurtosis_re = m2r > 0.0 ? m4r / (m2r * m2r) - 3.0 : 0.0;
  report.skew_im = m2i > 0.0 ? m3i / std::pow(m2i, 1.5) : 0.0;
  report.excess_kurtosis_im = m2i > 0.0 ? m4i / (m2i * m2i) - 3.0 : 0.0;
  report.pass_mean = report.mean_abs_z < 3.0;
  report.pass_variance = std::abs(report.variance_ratio - 1.0) <= 0.05;
  return report;
}

Thm1Report verify_thm1(const SimConfig& config, int trials) {
  config.validate();
  if (trials < 500) throw std::invalid_argument("verify_thm1: trials must be >= 500");

  std::vector<arma::vec> sinrs(trials);
  std::vector<arma::vec> bounds(trials);
  parallel_for(trials, [&](int t) {
    RandomStream stream = derive_stream(config.scene.master_seed, "verify_thm1",
                                        static_cast<std::uint64_t>(t));
    const TrialRecord rec = run_trial(config, SweepOverrides{}, stream);
    sinrs[t] = rec.sinr_jammed;
    bounds[t] = rec.sinr_bound;
  });

  Thm1Report report;
  report.trials = trials;
  report.mean_sinr = arma::vec(config.scene.n_users, arma::fill::zeros);
  report.mean_bound = arma::vec(config.scene.n_users, arma::fill::zeros);
  for (int t = 0; t < trials; ++t) {
    report.mean_sinr += sinrs[t];
    report.mean_bound += bounds[t];
  }
  report.mean_sinr /= static_cast<double>(trials);
  report.mean_bound /= static_cast<double>(trials);
  for (int k = 0; k < config.scene.n_users; ++k)
    if (report.mean_sinr(k) < report.mean_bound(k) * (1.0 - 0.02))
      report.flagged_users.push_back(k);
  return report;
}

SweepSpec make_sweep_spec(const SimConfig& config, SweepKind kind,
                          const std::string& output_path) {
  SweepSpec spec;
  spec.kind = kind;
  spec.config = config;
  spec.output_path = output_path.empty() ? config.experiment.output_path : output_path;
  spec.sweep_values = config.experiment.sweep_values;
  if (spec.sweep_values.empty()) {
    switch (kind) {
      case SweepKind::sumrate_vs_power:
        spec.sweep_values = {-6, -4, -2, 0, 2, 4, 6, 8, 10, 12};
        break;
      case SweepKind::sumrate_vs_nd:
        spec.sweep_values = {16, 64, 256, 1024};
        break;
      case SweepKind::music_comparison:
        spec.sweep_values = {256, 1024, 4096};
        break;
      case SweepKind::verify_prop1:
      case SweepKind::verify_thm1:
        spec.sweep_values = {static_cast<double>(config.dris.n_d())};
        break;
    }
  }
  spec.trials_per_point = config.experiment.trials_per_point;
  if (spec.trials_per_point <= 0) {
    switch (kind) {
      case SweepKind::sumrate_vs_power:
      case SweepKind::sumrate_vs_nd:
      case SweepKind::verify_thm1:
        spec.trials_per_point = 500;
        break;
      case SweepKind::music_comparison:
        spec.trials_per_point = 200;
        break;
      case SweepKind::verify_prop1:
        spec.trials_per_point = 100000;  // pooled entry samples
        break;
    }
  }
  return spec;
}

void run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<CsvRow> rows;
  for (std::size_t p = 0; p < spec.sweep_values.size(); ++p) {
    const double value = spec.sweep_values[p];
    switch (spec.kind) {
      case SweepKind::sumrate_vs_power:
      case SweepKind::sumrate_vs_nd: {
        SweepOverrides overrides;
        if (spec.kind == SweepKind::sumrate_vs_power)
          overrides.p0_dbm = value;
        else
          overrides.n_d = static_cast<int>(std::llround(value));
        const std::vector<TrialRecord> records = run_point(spec, p, overrides);
        append_curve(rows, value, "upper_bound", records,
                     [](const TrialRecord& r) { return r.rate_upper; });
        append_curve(rows, value, "tradeoff_jamfree", records,
                     [](const TrialRecord& r) { return r.rate_tradeoff_jamfree; });
        append_curve(rows, value, "tradeoff_jammed", records,
                     [](const TrialRecord& r) { return r.rate_tradeoff_jammed; });
        append_bound_rate(rows, value, "tradeoff_bound_rate", records,
                          [](const TrialRecord& r) -> const arma::vec& { return r.sinr_bound; });
        append_curve(rows, value, "strict_jamfree", records,
                     [](const TrialRecord& r) { return r.rate_strict_jamfree; });
        append_curve(rows, value, "strict_jammed", records,
                     [](const TrialRecord& r) { return r.rate_strict_jammed; });
        append_bound_rate(rows, value, "strict_bound_rate", records,
                          [](const TrialRecord& r) -> const arma::vec& {
                            return r.sinr_bound_strict;
                          });
        break;
      }
      case SweepKind::music_comparison: {
        SweepOverrides overrides;
        overrides.n_d = static_cast<int>(std::llround(value));
        overrides.with_sensing = true;
        const std::vector<TrialRecord> records = run_point(spec, p, overrides);
        const double hit_limit = 2.0 * spec.config.sensing.grid_step_deg + 1e-12;
        append_curve(rows, value, "clean_bias_deg", records,
                     [](const TrialRecord& r) { return r.clean_bias_deg; });
        append_curve(rows, value, "jammed_bias_deg", records,
                     [](const TrialRecord& r) { return r.jammed_bias_deg; });
        append_curve(rows, value, "clean_hit_rate", records, [&](const TrialRecord& r) {
          return r.clean_bias_deg <= hit_limit ? 1.0 : 0.0;
        });
        append_curve(rows, value, "jammed_hit_rate", records, [&](const TrialRecord& r) {
          return r.jammed_bias_deg <= hit_limit ? 1.0 : 0.0;
        });
        append_curve(rows, value, "peak_loss_db", records,
                     [](const TrialRecord& r) { return r.peak_loss_db; });
        break;
      }
      case SweepKind::verify_prop1: {
        SweepOverrides overrides;
        overrides.n_d = static_cast<int>(std::llround(value));
        const SimConfig config = apply_point_overrides(spec.config, overrides);
        const Prop1Report report =
            verify_prop1(config, static_cast<std::size_t>(spec.trials_per_point));
        const auto n = static_cast<long long>(report.n_samples);
        rows.push_back({value, "variance_ratio", report.variance_ratio, 0.0, n});
        rows.push_back({value, "mean_abs_z", report.mean_abs_z, 0.0, n});
        rows.push_back({value, "skew_re", report.skew_re, 0.0, n});
        rows.push_back({value, "excess_kurtosis_re", report.excess_kurtosis_re, 0.0, n});
        rows.push_back({value, "skew_im", report.skew_im, 0.0, n});
        rows.push_back({value, "excess_kurtosis_im", report.excess_kurtosis_im, 0.0, n});
        break;
      }
      case SweepKind::verify_thm1: {
        SweepOverrides overrides;
        overrides.n_d = static_cast<int>(std::llround(value));
        const SimConfig config = apply_point_overrides(spec.config, overrides);
        const Thm1Report report = verify_thm1(config, spec.trials_per_point);
        for (int k = 0; k < config.scene.n_users; ++k) {
          rows.push_back({value, "mean_sinr_user_" + std::to_string(k),
                          report.mean_sinr(k), 0.0, report.trials});
          rows.push_back({value, "bound_user_" + std::to_string(k), report.mean_bound(k),
                          0.0, report.trials});
        }
        rows.push_back({value, "violations",
                        static_cast<double>(report.flagged_users.size()), 0.0,
                        report.trials});
        break;
      }
    }
    if (!spec.quiet)
      std::fprintf(stderr, "[%s] point %zu/%zu (value %g) done\n",
                   to_string(spec.kind).c_str(), p + 1, spec.sweep_values.size(), value);
  }
  write_csv(spec.output_path, rows);
}

}  // namespace discosim
