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
//
// Orientation convention, fixed repo-wide: every user-side channel matrix is
// K x N (users x BS antennas), and row k acts directly on a transmit vector —
// the sample received by user k at symbol l is row_k(H) * x_l.  The cascaded
// BS-DRIS-user product G*diag(phi)*H_I is N x K and enters user-side
// matrices through a plain (non-conjugating) transpose.

#pragma once

#include <armadillo>
#include <optional>
#include <vector>

#include "discosim/dris.hpp"
#include "discosim/random.hpp"
#include "discosim/scene.hpp"

namespace discosim {

// Sensing-side knobs that the paper leaves open: where the target sits, how
// finely MUSIC scans, and optional overrides for the two large-scale gains
// (dB, linear gain = 10^(db/10)); absent overrides mean "derive from the
// LoS path-loss model and the geometry".
struct SensingConfig {
  double target_distance_m = 60.0;
  double grid_step_deg = 0.1;
  int redraws_per_frame = 1;  // reflection redraws while one echo frame is captured
  std::optional<double> l_s_direct_db;
  std::optional<double> l_s_cas_db;

  void validate() const;
};

// Everything one trial needs about propagation, fully composed.
struct ChannelSet {
  arma::cx_mat h_direct;     // K x N
  arma::cx_mat g_bs_dris;    // N x N_D
  arma::cx_mat h_dris_user;  // N_D x K
  arma::cx_mat h_pt;         // K x N, pilot-phase estimate
  arma::cx_mat h_aca;        // K x N, aging term present during data transmission
  std::vector<double> l_cas_per_user;  // linear two-hop gain BS->DRIS->user k
  arma::cx_vec sensing_direct;  // length N
  arma::cx_vec sensing_dris;    // length N
  double l_s_direct = 0.0;
  double l_s_cas = 0.0;
};

struct SensingPaths {
  arma::cx_vec direct;  // length N
  arma::cx_vec dris;    // length N
  double l_s_direct = 0.0;
  double l_s_cas = 0.0;
};

// Array phase response e^{j*2*pi*m*spacing*sin(theta)}, m = 0..n-1.
arma::cx_vec steering_ula(int n, double theta_rad, double spacing);

// Planar-array response: Kronecker product of the horizontal and vertical
// responses; element (i_h, i_v) maps to index i_h*n_v + i_v.
arma::cx_vec steering_upa(int n_h, int n_v, double phi_h_rad, double phi_v_rad,
                          double spacing);

// Large-scale path loss in dB at distance d_m (meters).
double path_loss_los_db(double d_m);
double path_loss_nlos_db(double d_m);

// Physical element coordinates.  The BS is a ULA along the x axis centered
// on bs_position; the DRIS is an n_h x n_v grid in the x-z plane centered on
// dris_position, indexed horizontal-major to match steering_upa.  Spacing is
// array_spacing wavelengths for both.
std::vector<Vec3> bs_element_positions(const ScenarioConfig& config);
std::vector<Vec3> dris_element_positions(const ScenarioConfig& config, const DrisProfile& profile);

// BS->user channel, K x N: row k is sqrt(NLoS gain at user k's direct
// distance) times an i.i.d. unit-variance complex Gaussian vector.  Draw
// order is fixed (user-major, antenna-minor) for reproducibility.
arma::cx_mat gen_direct_channel(const Placement& placement, const ScenarioConfig& config,
                                RandomStream& stream);

// BS->DRIS coupling, N x N_D, deterministic near-field LoS: every entry has
// modulus sqrt(LoS gain at the center distance) and phase -2*pi*d(n,r)/lambda
// with d(n,r) the exact distance between BS antenna n and DRIS element r.
arma::cx_mat gen_bs_dris_channel(const ScenarioConfig& config, const DrisProfile& profile);

// DRIS->user channel, N_D x K: column k is sqrt(LoS gain at DRIS-user
// distance) times i.i.d. unit-variance complex Gaussians (user-major order).
arma::cx_mat gen_dris_user_channel(const Placement& placement, const ScenarioConfig& config,
                                   const DrisProfile& profile, RandomStream& stream);

// Pilot-phase composite channel: h_direct + (G*diag(phi_pt)*H_I)^T, K x N.
arma::cx_mat compose_pt_channel(const arma::cx_mat& h_direct, const arma::cx_mat& g,
                                const arma::cx_vec& phi_pt, const arma::cx_mat& h_dris_user);

// Aging channel seen during data transmission: (G*diag(phi_dt - phi_pt)*H_I)^T,
// K x N.  Zero exactly when the surface did not change state.
arma::cx_mat compose_aca_channel(const arma::cx_mat& g, const arma::cx_vec& phi_pt,
                                 const arma::cx_vec& phi_dt, const arma::cx_mat& h_dris_user);

// Linear cascaded large-scale gain per user: LoS(BS->DRIS) * LoS(DRIS->user).
std::vector<double> cascade_loss_per_user(const ScenarioConfig& config,
                                          const Placement& placement);

// Sensing propagation toward the configured target angle/distance:
//   direct = sqrt(l_s_direct) * ula(N, theta);
//   dris   = sqrt(l_s_cas) * G_phase * diag(phi_t) * upa(n_h, n_v, phi_h, phi_v)
// where (phi_h, phi_v) point from the DRIS to the target and G_phase is g
// with its common large-scale modulus removed (the BS-DRIS hop's gain lives
// inside l_s_cas, which defaults to the two-hop LoS product).
SensingPaths sensing_paths(const ScenarioConfig& config, const SensingConfig& sensing,
                           const DrisProfile& profile, const arma::cx_mat& g,
                           const arma::cx_vec& phi_t);

}  // namespace discosim
