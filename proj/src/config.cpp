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

#include "discosim/config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace discosim {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
  throw std::invalid_argument("config: bad value '" + value + "' for key '" + key + "'");
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (trim(value.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  bad_value(key, value);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (trim(value.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  bad_value(key, value);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(value, &used);
    if (trim(value.substr(used)).empty()) return v;
  } catch (const std::exception&) {
  }
  bad_value(key, value);
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) bad_value(key, value);
  return out;
}

Vec3 parse_vec3(const std::string& key, const std::string& value) {
  const std::vector<double> v = parse_list(key, value);
  if (v.size() != 3) bad_value(key, value);
  return {v[0], v[1], v[2]};
}

std::optional<double> parse_db_or_auto(const std::string& key, const std::string& value) {
  if (value == "auto") return std::nullopt;
  return parse_double(key, value);
}

using Setter = std::function<void(SimConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"n_tx", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.n_tx = parse_int(k, v); }},
      {"n_users", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.n_users = parse_int(k, v); }},
      {"frame_len", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.frame_len = parse_int(k, v); }},
      {"p0_dbm", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.p0_dbm = parse_double(k, v); }},
      {"kappa", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.kappa = parse_double(k, v); }},
      {"bandwidth_hz", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.bandwidth_hz = parse_double(k, v); }},
      {"carrier_hz", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.carrier_hz = parse_double(k, v); }},
      {"array_spacing", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.array_spacing = parse_double(k, v); }},
      {"bs_position", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.bs_position = parse_vec3(k, v); }},
      {"dris_position", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.dris_position = parse_vec3(k, v); }},
      {"user_region_center", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.user_region_center = parse_vec3(k, v); }},
      {"user_region_radius", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.user_region_radius = parse_double(k, v); }},
      {"target_angle_deg", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.target_angle_deg = parse_double(k, v); }},
      {"echo_snr_db", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.echo_snr_db = parse_double(k, v); }},
      {"chi", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.chi = parse_double(k, v); }},
      {"master_seed", [](SimConfig& c, const std::string& k, const std::string& v) { c.scene.master_seed = parse_u64(k, v); }},
      {"dris.n_h", [](SimConfig& c, const std::string& k, const std::string& v) { c.dris.n_h = parse_int(k, v); }},
      {"dris.n_v", [](SimConfig& c, const std::string& k, const std::string& v) { c.dris.n_v = parse_int(k, v); }},
      {"dris.bits", [](SimConfig& c, const std::string& k, const std::string& v) { c.dris.bits = parse_int(k, v); }},
      {"dris.phases", [](SimConfig& c, const std::string& k, const std::string& v) { c.dris.phases = parse_list(k, v); }},
      {"dris.amplitudes", [](SimConfig& c, const std::string& k, const std::string& v) { c.dris.amplitudes = parse_list(k, v); }},
      {"dris.probs", [](SimConfig& c, const std::string& k, const std::string& v) { c.dris.probs = parse_list(k, v); }},
      {"sensing.target_distance_m", [](SimConfig& c, const std::string& k, const std::string& v) { c.sensing.target_distance_m = parse_double(k, v); }},
      {"sensing.grid_step_deg", [](SimConfig& c, const std::string& k, const std::string& v) { c.sensing.grid_step_deg = parse_double(k, v); }},
      {"sensing.redraws_per_frame", [](SimConfig& c, const std::string& k, const std::string& v) { c.sensing.redraws_per_frame = parse_int(k, v); }},
      {"sensing.l_s_direct_db", [](SimConfig& c, const std::string& k, const std::string& v) { c.sensing.l_s_direct_db = parse_db_or_auto(k, v); }},
      {"sensing.l_s_cas_db", [](SimConfig& c, const std::string& k, const std::string& v) { c.sensing.l_s_cas_db = parse_db_or_auto(k, v); }},
      {"waveform.symbol_scale",
       [](SimConfig& c, const std::string& k, const std::string& v) {
         if (v == "matched")
           c.symbol_scale = SymbolScale::matched;
         else if (v == "unit")
           c.symbol_scale = SymbolScale::unit;
         else
           bad_value(k, v);
       }},
      {"experiment.kind", [](SimConfig& c, const std::string&, const std::string& v) { c.experiment.kind = sweep_kind_from_string(v); }},
      {"experiment.sweep_values", [](SimConfig& c, const std::string& k, const std::string& v) { c.experiment.sweep_values = parse_list(k, v); }},
      {"experiment.trials_per_point", [](SimConfig& c, const std::string& k, const std::string& v) { c.experiment.trials_per_point = parse_int(k, v); }},
      {"experiment.output_path", [](SimConfig& c, const std::string&, const std::string& v) { c.experiment.output_path = v; }},
  };
  return table;
}

}  // namespace

SweepKind sweep_kind_from_string(const std::string& name) {
  if (name == "sumrate_vs_power") return SweepKind::sumrate_vs_power;
  if (name == "sumrate_vs_nd") return SweepKind::sumrate_vs_nd;
  if (name == "music_comparison") return SweepKind::music_comparison;
  if (name == "verify_prop1") return SweepKind::verify_prop1;
  if (name == "verify_thm1") return SweepKind::verify_thm1;
  throw std::invalid_argument(
      "config: unknown experiment kind '" + name +
      "' (expected sumrate_vs_power, sumrate_vs_nd, music_comparison, verify_prop1 "
      "or verify_thm1)");
}

std::string to_string(SweepKind kind) {
  switch (kind) {
    case SweepKind::sumrate_vs_power: return "sumrate_vs_power";
    case SweepKind::sumrate_vs_nd: return "sumrate_vs_nd";
    case SweepKind::music_comparison: return "music_comparison";
    case SweepKind::verify_prop1: return "verify_prop1";
    case SweepKind::verify_thm1: return "verify_thm1";
  }
  throw std::logic_error("to_string: unhandled SweepKind");
}

void SimConfig::validate() const {
  scene.validate();
  dris.validate();
  sensing.validate();
  if (experiment.trials_per_point < 0)
    throw std::invalid_argument("config: experiment.trials_per_point must be >= 0");
}

SimConfig default_config() { return SimConfig{}; }

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open file '" + path + "'");
  SimConfig config = default_config();
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " of '" + path + "' is not 'key = value'");
    apply_override(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

void apply_override(SimConfig& config, const std::string& key, const std::string& value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end())
    throw std::invalid_argument("config: unknown key '" + key + "'");
  it->second(config, key, value);
}

std::string config_key_help() {
  return
      "Configuration keys (file lines and --set overrides use 'key=value'):\n"
      "  n_tx                        count       BS transmit antennas (ULA)\n"
      "  n_users                     count       single-antenna downlink users\n"
      "  frame_len                   symbols     frame length L (requires n_tx <= frame_len)\n"
      "  p0_dbm                      dBm         total transmit power\n"
      "  kappa                       unitless    comm/sensing trade-off weight in [0,1]\n"
      "  bandwidth_hz                Hz          transmission bandwidth (sets noise floor)\n"
      "  carrier_hz                  Hz          carrier frequency (sets wavelength)\n"
      "  array_spacing               wavelengths inter-element spacing (BS and surface)\n"
      "  bs_position                 m (x,y,z)   BS array center\n"
      "  dris_position               m (x,y,z)   hostile surface center\n"
      "  user_region_center          m (x,y,z)   center of the user disk\n"
      "  user_region_radius          m           radius of the user disk (>= 0)\n"
      "  target_angle_deg            degrees     true target direction from broadside\n"
      "  echo_snr_db                 dB          direct-path echo SNR at the BS\n"
      "  chi                         unitless    target reflection cross-section in [0,1]\n"
      "  master_seed                 integer     64-bit seed for all randomness\n"
      "  dris.n_h / dris.n_v         count       surface element grid (N_D = n_h * n_v)\n"
      "  dris.bits                   bits        codebook size is 2^bits\n"
      "  dris.phases                 rad list    reflection phase codebook\n"
      "  dris.amplitudes             list (0,1]  amplitude paired with each phase\n"
      "  dris.probs                  list        selection probabilities (sum to 1)\n"
      "  sensing.target_distance_m   m           BS-to-target range\n"
      "  sensing.grid_step_deg       degrees     MUSIC scan resolution over [-90,90]\n"
      "  sensing.redraws_per_frame   count       surface redraws while one echo frame lasts\n"
      "  sensing.l_s_direct_db       dB | auto   direct sensing-path gain override\n"
      "  sensing.l_s_cas_db          dB | auto   surface sensing-path gain override\n"
      "  waveform.symbol_scale       name        per-user amplitude: matched | unit\n"
      "  experiment.kind             name        sumrate_vs_power | sumrate_vs_nd |\n"
      "                                          music_comparison | verify_prop1 | verify_thm1\n"
      "  experiment.sweep_values     list        sweep grid (strictly increasing)\n"
      "  experiment.trials_per_point count       Monte-Carlo trials per sweep value\n"
      "  experiment.output_path      path        CSV destination\n";
}

}  // namespace discosim
