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
#include <vector>

#include "discosim/random.hpp"

namespace discosim {

// Reflection model of the hostile surface: an n_h x n_v grid of passive
// elements, each of which independently picks reflection state i (amplitude
// amplitudes[i], phase phases[i] rad) with probability probs[i], freshly at
// every reconfiguration instant.  The codebook has 2^bits states; the i-th
// amplitude is bound to the i-th phase.  The default profile is a 1-bit
// surface with states (0.8, pi/9) and (1.0, 7pi/6) at equal probability.
struct DrisProfile {
  int n_h = 32;
  int n_v = 32;
  int bits = 1;
  std::vector<double> phases{M_PI / 9.0, 7.0 * M_PI / 6.0};
  std::vector<double> amplitudes{0.8, 1.0};
  std::vector<double> probs{0.5, 0.5};

  int n_d() const { return n_h * n_v; }

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// One random reflection draw: entry r is amplitudes [i_r] * exp(j*phases[i_r])
// with i_r iid over the codebook.  Length n_d(); consumes exactly one
// categorical draw per element.
arma::cx_vec sample_reflection(const DrisProfile& profile, RandomStream& stream);

// Mean squared codebook spread
//   mu_bar = sum_{i1,i2} p_{i1} p_{i2} (mu_{i1}^2 + mu_{i2}^2
//            - 2 mu_{i1} mu_{i2} cos(phi_{i1} - phi_{i2})),
// the per-element variance factor of the reflection difference between two
// independent draws.  Zero iff the effective codebook is a single point.
double mean_mu_bar(const DrisProfile& profile);

// Element-wise reflection change between the probing-phase draw and the
// transmission-phase draw; its diagonal embeds the channel-aging term.
arma::cx_vec aca_reflection_delta(const arma::cx_vec& phi_pt, const arma::cx_vec& phi_dt);

}  // namespace discosim
