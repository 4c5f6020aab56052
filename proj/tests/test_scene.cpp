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

#include <cmath>
#include <stdexcept>

#include "discosim/scene.hpp"
#include "doctest.h"

using namespace discosim;

TEST_CASE("vector algebra and distances") {
  const Vec3 a{1.0, 2.0, 3.0};
  const Vec3 b{4.0, 6.0, 3.0};
  CHECK(distance(a, b) == doctest::Approx(5.0));
  CHECK((a + b).y == doctest::Approx(8.0));
  CHECK((2.0 * a).z == doctest::Approx(6.0));
  CHECK(Vec3{3.0, 4.0, 0.0}.norm() == doctest::Approx(5.0));
}

TEST_CASE("unit conversions") {
  CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
  CHECK(linear_to_db(db_to_linear(-37.2)) == doctest::Approx(-37.2));
  CHECK(dbm_to_watts(0.0) == doctest::Approx(1e-3));
  CHECK(dbm_to_watts(2.0) == doctest::Approx(1.584893192e-3).epsilon(1e-9));
}

TEST_CASE("thermal noise floor over the bandwidth") {
  CHECK(noise_variance_dbm(1.0) == doctest::Approx(-170.0));
  CHECK(noise_variance_dbm(180e3) == doctest::Approx(-117.4472749).epsilon(1e-9));
  CHECK(noise_variance_dbm(1e6) == doctest::Approx(-110.0));
}

TEST_CASE("scenario validation names the offending field") {
  ScenarioConfig base;
  base.validate();  // defaults are valid

  auto expect_throw = [](ScenarioConfig cfg) {
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  };
  { ScenarioConfig c = base; c.n_tx = 0; expect_throw(c); }
  { ScenarioConfig c = base; c.n_users = 0; expect_throw(c); }
  { ScenarioConfig c = base; c.frame_len = 0; expect_throw(c); }
  { ScenarioConfig c = base; c.frame_len = c.n_tx - 1; expect_throw(c); }
  { ScenarioConfig c = base; c.kappa = -0.01; expect_throw(c); }
  { ScenarioConfig c = base; c.kappa = 1.01; expect_throw(c); }
  { ScenarioConfig c = base; c.bandwidth_hz = 0.0; expect_throw(c); }
  { ScenarioConfig c = base; c.carrier_hz = -1.0; expect_throw(c); }
  { ScenarioConfig c = base; c.array_spacing = 0.0; expect_throw(c); }
  { ScenarioConfig c = base; c.user_region_radius = -1.0; expect_throw(c); }
  { ScenarioConfig c = base; c.chi = 1.5; expect_throw(c); }
  { ScenarioConfig c = base; c.chi = -0.1; expect_throw(c); }
  { ScenarioConfig c = base; c.target_angle_deg = 90.0; expect_throw(c); }

  // Degenerate disk must stay legal: the all-users-at-center case below
  // depends on it.
  { ScenarioConfig c = base; c.user_region_radius = 0.0; c.validate(); }
}

TEST_CASE("zero-radius placement puts every user at the disk center") {
  ScenarioConfig cfg;
  cfg.user_region_radius = 0.0;
  RandomStream stream(77);
  const Placement p = place_users(cfg, stream);
  REQUIRE(p.user_positions.size() == static_cast<std::size_t>(cfg.n_users));
  const double expected = std::sqrt(180.0 * 180.0 + 3.0 * 3.0);
  for (int k = 0; k < cfg.n_users; ++k) {
    CHECK(p.user_positions[k].y == doctest::Approx(180.0));
    CHECK(p.bs_user_distances[k] == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(p.bs_dris_distance == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("placement distances stay inside the reachable interval") {
  ScenarioConfig cfg;
  cfg.n_users = 2000;
  cfg.frame_len = 2000;  // keep n_tx <= frame_len
  RandomStream stream(123);
  const Placement p = place_users(cfg, stream);
  // Disk center 180 m away at z=0, radius 20, BS at height 3:
  // closest possible 160.0281 m, farthest 200.0225 m.
  for (double d : p.bs_user_distances) {
    CHECK(d >= 160.0281);
    CHECK(d <= 200.0225);
  }
}

TEST_CASE("placement is uniform by area, not by radius") {
  ScenarioConfig cfg;
  cfg.n_users = 100000;
  cfg.frame_len = 100000;
  RandomStream stream(321);
  const Placement p = place_users(cfg, stream);
  int inside_half = 0;
  for (const Vec3& u : p.user_positions) {
    CHECK(u.z == doctest::Approx(0.0));
    const double r = distance(u, cfg.user_region_center);
    CHECK(r <= cfg.user_region_radius * (1.0 + 1e-12));
    inside_half += r <= 0.5 * cfg.user_region_radius;
  }
  // A half-radius disk holds a quarter of the area.
  CHECK(std::abs(inside_half / 1e5 - 0.25) < 0.006);
}

TEST_CASE("placement is reproducible from the stream") {
  ScenarioConfig cfg;
  RandomStream a(5), b(5);
  const Placement pa = place_users(cfg, a);
  const Placement pb = place_users(cfg, b);
  for (int k = 0; k < cfg.n_users; ++k) {
    CHECK(pa.user_positions[k].x == pb.user_positions[k].x);
    CHECK(pa.dris_user_distances[k] == pb.dris_user_distances[k]);
  }
}
