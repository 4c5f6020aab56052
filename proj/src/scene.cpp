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

#include "discosim/scene.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace discosim {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument("ScenarioConfig: " + message);
}

}  // namespace

void ScenarioConfig::validate() const {
  require(n_tx >= 1, "n_tx must be >= 1");
  require(n_users >= 1, "n_users must be >= 1");
  require(frame_len >= 1, "frame_len must be >= 1");
  require(n_tx <= frame_len, "n_tx must be <= frame_len");
  require(kappa >= 0.0 && kappa <= 1.0, "kappa must lie in [0, 1]");
  require(bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
  require(carrier_hz > 0.0, "carrier_hz must be > 0");
  require(array_spacing > 0.0, "array_spacing must be > 0");
  require(user_region_radius >= 0.0, "user_region_radius must be >= 0");
  require(chi >= 0.0 && chi <= 1.0, "chi must lie in [0, 1]");
  require(std::isfinite(p0_dbm), "p0_dbm must be finite");
  require(std::isfinite(echo_snr_db), "echo_snr_db must be finite");
  require(std::isfinite(target_angle_deg) && std::abs(target_angle_deg) < 90.0,
          "target_angle_deg must lie in (-90, 90)");
}

double ScenarioConfig::p0_watts() const { return dbm_to_watts(p0_dbm); }

Placement place_users(const ScenarioConfig& config, RandomStream& stream) {
  config.validate();
  Placement placement;
  placement.bs_dris_distance = distance(config.bs_position, config.dris_position);
  placement.user_positions.reserve(config.n_users);
  placement.bs_user_distances.reserve(config.n_users);
  placement.dris_user_distances.reserve(config.n_users);
  for (int k = 0; k < config.n_users; ++k) {
    // sqrt of a uniform radius fraction makes the density uniform by area.
    const double r = config.user_region_radius * std::sqrt(stream.uniform01());
    const double ang = stream.uniform(0.0, 2.0 * std::numbers::pi);
    const Vec3 pos = config.user_region_center + Vec3{r * std::cos(ang), r * std::sin(ang), 0.0};
    placement.user_positions.push_back(pos);
    placement.bs_user_distances.push_back(distance(config.bs_position, pos));
    placement.dris_user_distances.push_back(distance(config.dris_position, pos));
  }
  return placement;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double noise_variance_dbm(double bandwidth_hz) {
  if (bandwidth_hz <= 0.0)
    throw std::invalid_argument("noise_variance_dbm: bandwidth must be > 0");
  return -170.0 + 10.0 * std::log10(bandwidth_hz);
}

}  // namespace discosim
