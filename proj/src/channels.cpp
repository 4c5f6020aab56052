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

#include "discosim/channels.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace discosim {

namespace {

constexpr std::complex<double> kJ{0.0, 1.0};

double clamp_unit(double v) { return std::max(-1.0, std::min(1.0, v)); }

double los_gain(double d_m) { return db_to_linear(-path_loss_los_db(d_m)); }

}  // namespace

void SensingConfig::validate() const {
  if (target_distance_m <= 0.0)
    throw std::invalid_argument("SensingConfig: target_distance_m must be > 0");
  if (grid_step_deg <= 0.0)
    throw std::invalid_argument("SensingConfig: grid_step_deg must be > 0");
  if (redraws_per_frame < 1)
    throw std::invalid_argument("SensingConfig: redraws_per_frame must be >= 1");
}

arma::cx_vec steering_ula(int n, double theta_rad, double spacing) {
  if (n < 1) throw std::invalid_argument("steering_ula: n must be >= 1");
  arma::cx_vec a(n);
  const double step = 2.0 * std::numbers::pi * spacing * std::sin(theta_rad);
  for (int m = 0; m < n; ++m) a(m) = std::exp(kJ * (step * m));
  return a;
}

arma::cx_vec steering_upa(int n_h, int n_v, double phi_h_rad, double phi_v_rad,
                          double spacing) {
  if (n_h < 1 || n_v < 1)
    throw std::invalid_argument("steering_upa: grid dimensions must be >= 1");
  return arma::kron(steering_ula(n_h, phi_h_rad, spacing),
                    steering_ula(n_v, phi_v_rad, spacing));
}

double path_loss_los_db(double d_m) {
  if (d_m <= 0.0) throw std::invalid_argument("path_loss_los_db: distance must be > 0");
  return 35.6 + 22.0 * std::log10(d_m);
}

double path_loss_nlos_db(double d_m) {
  if (d_m <= 0.0) throw std::invalid_argument("path_loss_nlos_db: distance must be > 0");
  return 32.6 + 36.7 * std::log10(d_m);
}

std::vector<Vec3> bs_element_positions(const ScenarioConfig& config) {
  const double d = config.array_spacing * config.wavelength();
  std::vector<Vec3> pos;
  pos.reserve(config.n_tx);
  for (int m = 0; m < config.n_tx; ++m) {
    const double off = (m - 0.5 * (config.n_tx - 1)) * d;
    pos.push_back(config.bs_position + Vec3{off, 0.0, 0.0});
  }
  return pos;
}

std::vector<Vec3> dris_element_positions(const ScenarioConfig& config,
                                         const DrisProfile& profile) {
  const double d = config.array_spacing * config.wavelength();
  std::vector<Vec3> pos;
  pos.reserve(static_cast<std::size_t>(profile.n_d()));
  for (int ih = 0; ih < profile.n_h; ++ih) {
    const double off_h = (ih - 0.5 * (profile.n_h - 1)) * d;
    for (int iv = 0; iv < profile.n_v; ++iv) {
      const double off_v = (iv - 0.5 * (profile.n_v - 1)) * d;
      pos.push_back(config.dris_position + Vec3{off_h, 0.0, off_v});
    }
  }
  return pos;
}

arma::cx_mat gen_direct_channel(const Placement& placement, const ScenarioConfig& config,
                                RandomStream& stream) {
  config.validate();
  const int k_users = config.n_users;
  const int n = config.n_tx;
  arma::cx_mat h(k_users, n);
  for (int k = 0; k < k_users; ++k) {
    const double scale =
        std::sqrt(db_to_linear(-path_loss_nlos_db(placement.bs_user_distances.at(k))));
    for (int m = 0; m < n; ++m) h(k, m) = scale * stream.cgaussian();
  }
  return h;
}

arma::cx_mat gen_bs_dris_channel(const ScenarioConfig& config, const DrisProfile& profile) {
  config.validate();
  profile.validate();
  const double d_center = distance(config.bs_position, config.dris_position);
  if (d_center <= 0.0)
    throw std::invalid_argument("gen_bs_dris_channel: BS and DRIS positions coincide");
  const double amp = std::sqrt(los_gain(d_center));
  const double lambda = config.wavelength();
  const std::vector<Vec3> bs = bs_element_positions(config);
  const std::vector<Vec3> ris = dris_element_positions(config, profile);
  arma::cx_mat g(config.n_tx, profile.n_d());
  for (arma::uword r = 0; r < g.n_cols; ++r) {
    for (arma::uword n = 0; n < g.n_rows; ++n) {
      const double d = distance(bs[n], ris[r]);
      g(n, r) = amp * std::exp(-kJ * (2.0 * std::numbers::pi * d / lambda));
    }
  }
  return g;
}

arma::cx_mat gen_dris_user_channel(const Placement& placement, const ScenarioConfig& config,
                                   const DrisProfile& profile, RandomStream& stream) {
  config.validate();
  profile.validate();
  arma::cx_mat h(profile.n_d(), config.n_users);
  for (int k = 0; k < config.n_users; ++k) {
    const double scale =
        std::sqrt(los_gain(placement.dris_user_distances.at(k)));
    for (arma::uword r = 0; r < h.n_rows; ++r) h(r, k) = scale * stream.cgaussian();
  }
  return h;
}

arma::cx_mat compose_pt_channel(const arma::cx_mat& h_direct, const arma::cx_mat& g,
                                const arma::cx_vec& phi_pt, const arma::cx_mat& h_dris_user) {
  if (g.n_cols != phi_pt.n_elem || g.n_cols != h_dris_user.n_rows ||
      h_direct.n_rows != h_dris_user.n_cols || h_direct.n_cols != g.n_rows)
    throw std::invalid_argument("compose_pt_channel: dimension mismatch");
  return h_direct + (g * arma::diagmat(phi_pt) * h_dris_user).st();
}

arma::cx_mat compose_aca_channel(const arma::cx_mat& g, const arma::cx_vec& phi_pt,
                                 const arma::cx_vec& phi_dt, const arma::cx_mat& h_dris_user) {
  if (phi_pt.n_elem != phi_dt.n_elem || g.n_cols != phi_pt.n_elem ||
      g.n_cols != h_dris_user.n_rows)
    throw std::invalid_argument("compose_aca_channel: dimension mismatch");
  return (g * arma::diagmat(phi_dt - phi_pt) * h_dris_user).st();
}

std::vector<double> cascade_loss_per_user(const ScenarioConfig& config,
                                          const Placement& placement) {
  const double hop1 = los_gain(distance(config.bs_position, config.dris_position));
  std::vector<double> l_cas;
  l_cas.reserve(placement.dris_user_distances.size());
  for (double d : placement.dris_user_distances) l_cas.push_back(hop1 * los_gain(d));
  return l_cas;
}

SensingPaths sensing_paths(const ScenarioConfig& config, const SensingConfig& sensing,
                           const DrisProfile& profile, const arma::cx_mat& g,
                           const arma::cx_vec& phi_t) {
  config.validate();
  sensing.validate();
  profile.validate();
  if (g.n_rows != static_cast<arma::uword>(config.n_tx) ||
      g.n_cols != static_cast<arma::uword>(profile.n_d()) || phi_t.n_elem != g.n_cols)
    throw std::invalid_argument("sensing_paths: dimension mismatch");

  const double theta = config.target_angle_deg * std::numbers::pi / 180.0;
  const Vec3 target = config.bs_position +
                      sensing.target_distance_m * Vec3{std::sin(theta), std::cos(theta), 0.0};

  SensingPaths paths;
  paths.l_s_direct = sensing.l_s_direct_db
                         ? db_to_linear(*sensing.l_s_direct_db)
                         : los_gain(sensing.target_distance_m);
  paths.direct = std::sqrt(paths.l_s_direct) *
                 steering_ula(config.n_tx, theta, config.array_spacing);

  if (profile.n_d() == 0) {
    paths.l_s_cas = 0.0;
    paths.dris = arma::cx_vec(config.n_tx, arma::fill::zeros);
    return paths;
  }

  const double d_bs_dris = distance(config.bs_position, config.dris_position);
  const double d_dris_target = distance(config.dris_position, target);
  paths.l_s_cas = sensing.l_s_cas_db ? db_to_linear(*sensing.l_s_cas_db)
                                     : los_gain(d_bs_dris) * los_gain(d_dris_target);

  // Direction cosines of the target as seen from the DRIS plane (x-z grid).
  const Vec3 u = (1.0 / d_dris_target) * (target - config.dris_position);
  const double phi_h = std::asin(clamp_unit(u.x));
  const double phi_v = std::asin(clamp_unit(u.z));
  const arma::cx_vec a_d =
      steering_upa(profile.n_h, profile.n_v, phi_h, phi_v, config.array_spacing);

  // Strip g's common large-scale modulus; the BS-DRIS hop gain lives in l_s_cas.
  const double g_amp = std::abs(g(0, 0));
  if (g_amp <= 0.0)
    throw std::invalid_argument("sensing_paths: BS-DRIS coupling has zero amplitude");
  paths.dris = (std::sqrt(paths.l_s_cas) / g_amp) * (g * (phi_t % a_d));
  return paths;
}

}  // namespace discosim
