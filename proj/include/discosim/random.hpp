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

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>
#include <random>

namespace discosim {

// Seeded random stream with the exact draw algorithms pinned down so that a
// given (seed, draw sequence) pair reproduces bit-identical values on any
// platform.  All stochastic code in the library draws through this class;
// nothing uses std::normal_distribution or other implementation-defined
// distributions.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  double uniform(double lo, double hi);

  // Standard normal via Box-Muller (caches the second variate).
  double gaussian();

  // Circularly-symmetric complex normal, unit variance: (g1 + i*g2)/sqrt(2).
  std::complex<double> cgaussian();

  // Index draw from a finite distribution; probs must be non-negative and
  // sum to 1 within 1e-9.  Consumes exactly one uniform01().
  std::size_t categorical(const std::vector<double>& probs);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Derives an independent child stream from (master_seed, purpose_tag, index).
// Distinct tags or indices give unrelated streams; repeated calls with the
// same triple give identical streams.  Used to hand every trial of every
// sweep its own substream so results do not depend on execution order.
RandomStream derive_stream(std::uint64_t master_seed, std::string_view purpose_tag,
                           std::uint64_t index);

}  // namespace discosim
