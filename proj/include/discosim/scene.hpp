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

#include <cmath>
#include <cstdint>
#include <vector>

#include "discosim/random.hpp"

namespace discosim {

inline constexpr double kSpeedOfLight = 299792458.0;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

// Static description of one simulated deployment: array sizes, geometry,
// power budget and the master seed.  All lengths in meters, powers in dBm,
// frequencies in Hz.  Element spacing is in wavelengths.
struct ScenarioConfig {
  int n_tx = 16;            // BS transmit antennas (ULA)
  int n_users = 8;          // single-antenna downlink users
  int frame_len = 18;       // symbols per frame (L)
  double p0_dbm = 2.0;      // total transmit power
  double kappa = 0.2;       // comm/sensing trade-off weight in [0,1]
  double bandwidth_hz = 180e3;
  double carrier_hz = 3.5e9;
  double array_spacing = 0.5;  // inter-element spacing, wavelengths
  Vec3 bs_position{0.0, 0.0, 3.0};
  Vec3 dris_position{2.0, 0.0, 2.0};
  Vec3 user_region_center{0.0, 180.0, 0.0};
  double user_region_radius = 20.0;
  double target_angle_deg = 17.0;  // sensing target azimuth from array broadside
  double echo_snr_db = 10.0;       // direct-path echo SNR at the sensing receiver
  double chi = 1.0;                // target reflection cross-section in [0, 1]
  std::uint64_t master_seed = 1;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  double wavelength() const { return kSpeedOfLight / carrier_hz; }
  double p0_watts() const;
};

// One concrete user drop.
struct Placement {
  std::vector<Vec3> user_positions;
  std::vector<double> bs_user_distances;
  std::vector<double> dris_user_distances;
  double bs_dris_distance = 0.0;
};

// Draws users uniformly by area over the configured disk (center, radius) at
// the disk's own height; fills in the distances to BS and DRIS.
Placement place_users(const ScenarioConfig& config, RandomStream& stream);

// --- unit helpers ---------------------------------------------------------

double db_to_linear(double db);      // 10^(db/10), power quantity
double linear_to_db(double linear);  // inverse of db_to_linear
double dbm_to_watts(double dbm);

// Thermal noise floor -170 dBm/Hz integrated over the bandwidth.
double noise_variance_dbm(double bandwidth_hz);

}  // namespace discosim
