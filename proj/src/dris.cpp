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

#include "discosim/dris.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace discosim {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument("DrisProfile: " + message);
}

}  // namespace

void DrisProfile::validate() const {
  require(n_h >= 0 && n_v >= 0, "grid dimensions must be >= 0");
  require(bits >= 0 && bits < 31, "bits must lie in [0, 30]");
  require(phases.size() == (std::size_t{1} << bits),
          "codebook must have exactly 2^bits states");
  require(amplitudes.size() == phases.size() && probs.size() == phases.size(),
          "phases, amplitudes and probs must have equal length");
  double total = 0.0;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    require(std::isfinite(phases[i]), "phases must be finite");
    require(amplitudes[i] > 0.0 && amplitudes[i] <= 1.0,
            "amplitudes must lie in (0, 1]");
    require(probs[i] >= 0.0, "probs must be non-negative");
    total += probs[i];
  }
  require(std::abs(total - 1.0) <= 1e-9, "probs must sum to 1");
}

arma::cx_vec sample_reflection(const DrisProfile& profile, RandomStream& stream) {
  profile.validate();
  arma::cx_vec phi(profile.n_d());
  for (arma::uword r = 0; r < phi.n_elem; ++r) {
    const std::size_t i = stream.categorical(profile.probs);
    phi(r) = std::polar(profile.amplitudes[i], profile.phases[i]);
  }
  return phi;
}

double mean_mu_bar(const DrisProfile& profile) {
  profile.validate();
  double mu_bar = 0.0;
  for (std::size_t i1 = 0; i1 < profile.phases.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < profile.phases.size(); ++i2) {
      const double m1 = profile.amplitudes[i1];
      const double m2 = profile.amplitudes[i2];
      mu_bar += profile.probs[i1] * profile.probs[i2] *
                (m1 * m1 + m2 * m2 -
                 2.0 * m1 * m2 * std::cos(profile.phases[i1] - profile.phases[i2]));
    }
  }
  return mu_bar;
}

arma::cx_vec aca_reflection_delta(const arma::cx_vec& phi_pt, const arma::cx_vec& phi_dt) {
  if (phi_pt.n_elem != phi_dt.n_elem)
    throw std::invalid_argument("aca_reflection_delta: reflection vectors differ in length");
  return phi_dt - phi_pt;
}

}  // namespace discosim
