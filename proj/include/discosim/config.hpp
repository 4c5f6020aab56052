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

#include <optional>
#include <string>
#include <vector>

#include "discosim/channels.hpp"
#include "discosim/dris.hpp"
#include "discosim/scene.hpp"

namespace discosim {

enum class SymbolScale {
  matched,  // rho_k = sqrt(p0/K) * ||row_k(H_PT)||, equal-power matched scale
  unit,     // rho_k = 1
};

enum class SweepKind {
  sumrate_vs_power,
  sumrate_vs_nd,
  music_comparison,
  verify_prop1,
  verify_thm1,
};

SweepKind sweep_kind_from_string(const std::string& name);
std::string to_string(SweepKind kind);

struct ExperimentConfig {
  std::optional<SweepKind> kind;
  std::vector<double> sweep_values;  // empty -> per-kind default grid
  int trials_per_point = 0;          // 0 -> per-kind default
  std::string output_path;           // empty -> must come from the command line
};

// Whole-run configuration: scenario plus the surface profile plus
// sensing/waveform/experiment knobs.  Loaded from a flat key=value file;
// dotted keys address the non-scenario namespaces.
struct SimConfig {
  ScenarioConfig scene;
  DrisProfile dris;
  SensingConfig sensing;
  SymbolScale symbol_scale = SymbolScale::matched;
  ExperimentConfig experiment;

  void validate() const;
};

SimConfig default_config();

// Parses `key = value` lines ('#' starts a comment; blank lines ignored).
// Unknown keys and malformed values raise std::invalid_argument naming the
// key.  Values use '.' decimals; lists are comma-separated; positions are
// "x,y,z" in meters; sensing gain overrides accept "auto".
SimConfig load_config(const std::string& path);

// Applies one dotted-key override (e.g. "dris.n_h=32" split by the caller
// into key and value).  Same key rules as the file; last writer wins.
void apply_override(SimConfig& config, const std::string& key, const std::string& value);

// One line per key: name, unit, meaning.  Embedded in the CLI help text.
std::string config_key_help();

}  // namespace discosim
