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

#include "discosim/sensing.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "discosim/channels.hpp"
#include "discosim/scene.hpp"

namespace discosim {

double echo_noise_variance(double chi, double p0_watts, int n_tx, double l_s_direct,
                           double echo_snr_db) {
  if (n_tx < 1 || p0_watts <= 0.0 || l_s_direct <= 0.0 || chi < 0.0)
    throw std::invalid_argument("echo_noise_variance: invalid scenario values");
  const double h_norm_sq = l_s_direct * static_cast<double>(n_tx);
  return chi * chi * (p0_watts / n_tx) * h_norm_sq * h_norm_sq /
         (static_cast<double>(n_tx) * db_to_linear(echo_snr_db));
}

EchoFrame synth_echo(const arma::cx_vec& h_s_d, const arma::cx_vec& h_s_dris, double chi,
                     const arma::cx_mat& x, double sigma2_s, double true_theta_rad,
                     RandomStream& stream) {
  if (h_s_d.n_elem != h_s_dris.n_elem || h_s_d.n_elem != x.n_rows)
    throw std::invalid_argument("synth_echo: dimension mismatch");
  if (chi < 0.0 || chi > 1.0)
    throw std::invalid_argument("synth_echo: chi must lie in [0, 1]");
  if (sigma2_s < 0.0) throw std::invalid_argument("synth_echo: sigma2_s must be >= 0");

  const arma::cx_vec h = h_s_d + h_s_dris;
  EchoFrame frame;
  frame.true_theta = true_theta_rad;
  frame.sigma2_s = sigma2_s;
  frame.y_s = chi * (h * (h.t() * x));
  const double noise_scale = std::sqrt(sigma2_s);
  for (arma::uword l = 0; l < frame.y_s.n_cols; ++l)
    for (arma::uword n = 0; n < frame.y_s.n_rows; ++n)
      frame.y_s(n, l) += noise_scale * stream.cgaussian();
  return frame;
}

arma::cx_mat sample_covariance(const arma::cx_mat& y_s) {
  if (y_s.n_cols < 1 || y_s.n_rows < 1)
    throw std::invalid_argument("sample_covariance: empty frame");
  return (1.0 / static_cast<double>(y_s.n_cols)) * (y_s * y_s.t());
}

MusicSpectrum music_spectrum(const arma::cx_mat& r, double grid_step_deg, int n_sources,
                             double spacing) {
  if (r.n_rows < 1 || r.n_rows != r.n_cols)
    throw std::invalid_argument("music_spectrum: covariance must be square");
  const int n = static_cast<int>(r.n_rows);
  if (n_sources < 0 || n_sources >= n)
    throw std::invalid_argument("music_spectrum: n_sources must lie in [0, N)");
  if (grid_step_deg <= 0.0)
    throw std::invalid_argument("music_spectrum: grid step must be > 0");

  arma::vec eigval;
  arma::cx_mat eigvec;
  if (!arma::eig_sym(eigval, eigvec, arma::cx_mat(0.5 * (r + r.t()))))
    throw std::runtime_error("music_spectrum: eigendecomposition failed");
  // Ascending eigenvalues: the leading n - n_sources columns span noise.
  const arma::cx_mat e_noise_h = eigvec.cols(0, r.n_rows - 1 - n_sources).t();

  MusicSpectrum spectrum;
  const auto n_steps = static_cast<std::size_t>(std::llround(180.0 / grid_step_deg));
  spectrum.grid_deg.reserve(n_steps + 1);
  spectrum.values.reserve(n_steps + 1);
  for (std::size_t i = 0; i <= n_steps; ++i) {
    const double angle_deg = -90.0 + grid_step_deg * static_cast<double>(i);
    const arma::cx_vec a =
        steering_ula(n, angle_deg * std::numbers::pi / 180.0, spacing);
    const double denom = std::max(
        std::pow(arma::norm(arma::cx_vec(e_noise_h * a), 2), 2), 1e-300);
    const double value = 1.0 / denom;
    spectrum.grid_deg.push_back(angle_deg);
    spectrum.values.push_back(value);
    if (spectrum.values.size() == 1 || value > spectrum.peak_value) {
      spectrum.peak_value = value;
      spectrum.peak_angle_deg = angle_deg;
    }
  }
  return spectrum;
}

double peak_loss(const MusicSpectrum& clean, const MusicSpectrum& jammed) {
  if (clean.grid_deg.size() != jammed.grid_deg.size())
    throw std::invalid_argument("peak_loss: spectra use different grids");
  for (std::size_t i = 0; i < clean.grid_deg.size(); ++i)
    if (std::abs(clean.grid_deg[i] - jammed.grid_deg[i]) > 1e-12)
      throw std::invalid_argument("peak_loss: spectra use different grids");

  const auto prominence_db = [](const MusicSpectrum& s) {
    double mean = 0.0;
    for (double v : s.values) mean += v;
    mean /= static_cast<double>(s.values.size());
    return 10.0 * std::log10(s.peak_value / mean);
  };
  return prominence_db(clean) - prominence_db(jammed);
}

double doa_bias(const MusicSpectrum& spectrum, double true_theta_deg) {
  return std::abs(spectrum.peak_angle_deg - true_theta_deg);
}

void write_spectrum_csv(const MusicSpectrum& spectrum, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
  if (!out) throw std::runtime_error("write_spectrum_csv: cannot open " + path);
  out << "angle_deg,value\n";
  char buf[64];
  for (std::size_t i = 0; i < spectrum.grid_deg.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.9g,%.9g\n", spectrum.grid_deg[i],
                  spectrum.values[i]);
    out << buf;
  }
  if (!out) throw std::runtime_error("write_spectrum_csv: write failed for " + path);
}

}  // namespace discosim
