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
#include <string>
#include <vector>

#include "discosim/random.hpp"

namespace discosim {

struct EchoFrame {
  arma::cx_mat y_s;         // N x L received sensing snapshots
  double true_theta = 0.0;  // radians, metadata for scoring
  double sigma2_s = 0.0;
};

struct MusicSpectrum {
  std::vector<double> grid_deg;
  std::vector<double> values;
  double peak_angle_deg = 0.0;
  double peak_value = 0.0;
};

// Noise variance that realizes the configured direct-path echo SNR:
// snr = chi^2 (p0/n) ||h_s_d||^4 / (n sigma2_s) with ||h_s_d||^2 = l_s_direct*n.
double echo_noise_variance(double chi, double p0_watts, int n_tx, double l_s_direct,
                           double echo_snr_db);

// Target echo over one frame: Y = chi (h_d + h_D)(h_d + h_D)^* X + noise,
// noise i.i.d. complex Gaussian with variance sigma2_s (column-major draws).
EchoFrame synth_echo(const arma::cx_vec& h_s_d, const arma::cx_vec& h_s_dris, double chi,
                     const arma::cx_mat& x, double sigma2_s, double true_theta_rad,
                     RandomStream& stream);

// Snapshot-averaged covariance (1/L) Y Y^*.
arma::cx_mat sample_covariance(const arma::cx_mat& y_s);

// Subspace spectrum V(angle) = 1 / ||E_n^* a(angle)||^2 where E_n spans the
// n - n_sources smallest eigenpairs of r; scanned over [-90, 90] degrees.
// Ties on the peak resolve to the smallest angle.
MusicSpectrum music_spectrum(const arma::cx_mat& r, double grid_step_deg, int n_sources,
                             double spacing);

// Difference of mean-normalized peak prominences in dB (clean minus jammed).
double peak_loss(const MusicSpectrum& clean, const MusicSpectrum& jammed);

// |estimated peak angle - true angle| in degrees.
double doa_bias(const MusicSpectrum& spectrum, double true_theta_deg);

// Two-column CSV (angle_deg, value) for plotting.
void write_spectrum_csv(const MusicSpectrum& spectrum, const std::string& path);

}  // namespace discosim
