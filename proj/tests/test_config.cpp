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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <unistd.h>

#include "discosim/config.hpp"
#include "doctest.h"

using namespace discosim;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    path = std::filesystem::temp_directory_path() /
           ("discosim_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++) + ".cfg");
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
  static int counter;
};
int TempFile::counter = 0;

}  // namespace

TEST_CASE("defaults are self-consistent") {
  const SimConfig cfg = default_config();
  cfg.validate();
  CHECK(cfg.scene.n_tx == 16);
  CHECK(cfg.scene.n_users == 8);
  CHECK(cfg.dris.n_d() == 1024);
  CHECK(cfg.symbol_scale == SymbolScale::matched);
  CHECK_FALSE(cfg.experiment.kind.has_value());
}

TEST_CASE("sweep kind names round-trip") {
  for (const SweepKind kind :
       {SweepKind::sumrate_vs_power, SweepKind::sumrate_vs_nd,
        SweepKind::music_comparison, SweepKind::verify_prop1, SweepKind::verify_thm1}) {
    CHECK(sweep_kind_from_string(to_string(kind)) == kind);
  }
  CHECK_THROWS_AS(sweep_kind_from_string("bogus"), std::invalid_argument);
}

TEST_CASE("config files parse comments, blanks and values") {
  const TempFile file(
      "# full-line comment\n"
      "\n"
      "n_tx = 8\n"
      "p0_dbm = 5.5   # trailing comment\n"
      "dris.n_h = 4\n"
      "dris.n_v = 2\n"
      "bs_position = 1.0, 2.0, 3.0\n"
      "sensing.l_s_direct_db = -42.5\n"
      "sensing.l_s_cas_db = auto\n"
      "waveform.symbol_scale = unit\n"
      "experiment.kind = music_comparison\n"
      "experiment.sweep_values = 256, 1024\n"
      "experiment.trials_per_point = 7\n"
      "experiment.output_path = out.csv\n");
  const SimConfig cfg = load_config(file.path.string());
  CHECK(cfg.scene.n_tx == 8);
  CHECK(cfg.scene.p0_dbm == doctest::Approx(5.5));
  CHECK(cfg.dris.n_h == 4);
  CHECK(cfg.dris.n_v == 2);
  CHECK(cfg.scene.bs_position.x == doctest::Approx(1.0));
  CHECK(cfg.scene.bs_position.y == doctest::Approx(2.0));
  CHECK(cfg.scene.bs_position.z == doctest::Approx(3.0));
  REQUIRE(cfg.sensing.l_s_direct_db.has_value());
  CHECK(*cfg.sensing.l_s_direct_db == doctest::Approx(-42.5));
  CHECK_FALSE(cfg.sensing.l_s_cas_db.has_value());
  CHECK(cfg.symbol_scale == SymbolScale::unit);
  REQUIRE(cfg.experiment.kind.has_value());
  CHECK(*cfg.experiment.kind == SweepKind::music_comparison);
  REQUIRE(cfg.experiment.sweep_values.size() == 2);
  CHECK(cfg.experiment.sweep_values[1] == doctest::Approx(1024.0));
  CHECK(cfg.experiment.trials_per_point == 7);
  CHECK(cfg.experiment.output_path == "out.csv");
}

TEST_CASE("file errors carry the line number or key") {
  SUBCASE("missing file") {
    CHECK_THROWS_WITH_AS(load_config("/nonexistent/discosim.cfg"),
                         doctest::Contains("cannot open"), std::invalid_argument);
  }
  SUBCASE("line without equals sign") {
    const TempFile file("n_tx = 8\njust some words\n");
    CHECK_THROWS_WITH_AS(load_config(file.path.string()),
                         doctest::Contains("line 2"), std::invalid_argument);
  }
  SUBCASE("unknown key names itself") {
    const TempFile file("no_such_key = 1\n");
    CHECK_THROWS_WITH_AS(load_config(file.path.string()),
                         doctest::Contains("no_such_key"), std::invalid_argument);
  }
  SUBCASE("malformed number") {
    const TempFile file("p0_dbm = banana\n");
    CHECK_THROWS_WITH_AS(load_config(file.path.string()),
                         doctest::Contains("p0_dbm"), std::invalid_argument);
  }
}

TEST_CASE("overrides reach every namespace") {
  SimConfig cfg = default_config();

  apply_override(cfg, "n_users", "4");
  CHECK(cfg.scene.n_users == 4);
  apply_override(cfg, "frame_len", "24");
  CHECK(cfg.scene.frame_len == 24);
  apply_override(cfg, "kappa", "0.75");
  CHECK(cfg.scene.kappa == doctest::Approx(0.75));
  apply_override(cfg, "bandwidth_hz", "1e6");
  CHECK(cfg.scene.bandwidth_hz == doctest::Approx(1e6));
  apply_override(cfg, "carrier_hz", "28e9");
  CHECK(cfg.scene.carrier_hz == doctest::Approx(28e9));
  apply_override(cfg, "array_spacing", "0.25");
  CHECK(cfg.scene.array_spacing == doctest::Approx(0.25));
  apply_override(cfg, "dris_position", "-1,0.5,2");
  CHECK(cfg.scene.dris_position.x == doctest::Approx(-1.0));
  CHECK(cfg.scene.dris_position.y == doctest::Approx(0.5));
  apply_override(cfg, "user_region_center", "3,150,0");
  CHECK(cfg.scene.user_region_center.y == doctest::Approx(150.0));
  apply_override(cfg, "user_region_radius", "12.5");
  CHECK(cfg.scene.user_region_radius == doctest::Approx(12.5));
  apply_override(cfg, "target_angle_deg", "-20");
  CHECK(cfg.scene.target_angle_deg == doctest::Approx(-20.0));
  apply_override(cfg, "echo_snr_db", "3");
  CHECK(cfg.scene.echo_snr_db == doctest::Approx(3.0));
  apply_override(cfg, "chi", "0.5");
  CHECK(cfg.scene.chi == doctest::Approx(0.5));
  apply_override(cfg, "master_seed", "42");
  CHECK(cfg.scene.master_seed == 42);

  apply_override(cfg, "dris.bits", "2");
  apply_override(cfg, "dris.phases", "0,1.5707963,3.1415927,4.712389");
  apply_override(cfg, "dris.amplitudes", "1,1,1,1");
  apply_override(cfg, "dris.probs", "0.25,0.25,0.25,0.25");
  CHECK(cfg.dris.bits == 2);
  REQUIRE(cfg.dris.phases.size() == 4);
  cfg.dris.validate();

  apply_override(cfg, "sensing.target_distance_m", "45");
  CHECK(cfg.sensing.target_distance_m == doctest::Approx(45.0));
  apply_override(cfg, "sensing.grid_step_deg", "0.5");
  CHECK(cfg.sensing.grid_step_deg == doctest::Approx(0.5));
  apply_override(cfg, "sensing.redraws_per_frame", "3");
  CHECK(cfg.sensing.redraws_per_frame == 3);
  apply_override(cfg, "sensing.l_s_direct_db", "-50");
  REQUIRE(cfg.sensing.l_s_direct_db.has_value());
  apply_override(cfg, "sensing.l_s_direct_db", "auto");
  CHECK_FALSE(cfg.sensing.l_s_direct_db.has_value());

  apply_override(cfg, "waveform.symbol_scale", "unit");
  CHECK(cfg.symbol_scale == SymbolScale::unit);
  apply_override(cfg, "waveform.symbol_scale", "matched");
  CHECK(cfg.symbol_scale == SymbolScale::matched);

  apply_override(cfg, "experiment.kind", "verify_thm1");
  REQUIRE(cfg.experiment.kind.has_value());
  CHECK(*cfg.experiment.kind == SweepKind::verify_thm1);

  CHECK_THROWS_WITH_AS(apply_override(cfg, "mystery.key", "1"),
                       doctest::Contains("mystery.key"), std::invalid_argument);
  CHECK_THROWS_AS(apply_override(cfg, "n_tx", "not_a_number"), std::invalid_argument);
  CHECK_THROWS_AS(apply_override(cfg, "bs_position", "1,2"), std::invalid_argument);
}

TEST_CASE("the help text names every accepted key") {
  const std::string help = config_key_help();
  for (const char* key :
       {"n_tx", "n_users", "frame_len", "p0_dbm", "kappa", "bandwidth_hz",
        "carrier_hz", "array_spacing", "bs_position", "dris_position",
        "user_region_center", "user_region_radius", "target_angle_deg",
        "echo_snr_db", "chi", "master_seed", "dris.n_h", "dris.n_v", "dris.bits",
        "dris.phases", "dris.amplitudes", "dris.probs",
        "sensing.target_distance_m", "sensing.grid_step_deg",
        "sensing.redraws_per_frame", "sensing.l_s_direct_db", "sensing.l_s_cas_db",
        "waveform.symbol_scale", "experiment.kind", "experiment.sweep_values",
        "experiment.trials_per_point", "experiment.output_path"}) {
    CAPTURE(key);
    CHECK(help.find(key) != std::string::npos);
  }
}

TEST_CASE("the shipped default config file loads and validates") {
  // Present when tests run from the repository; skip silently elsewhere.
  const std::filesystem::path repo_cfg =
      std::filesystem::path(__FILE__).parent_path().parent_path() / "configs" /
      "default.cfg";
  if (!std::filesystem::exists(repo_cfg)) return;
  const SimConfig cfg = load_config(repo_cfg.string());
  cfg.validate();
  CHECK(cfg.dris.n_d() == 1024);
}
