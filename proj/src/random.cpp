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

#include "discosim/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace discosim {

namespace {

// splitmix64, the standard 64-bit finalizer/expander.
std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) {
  // Expand the single seed into a full seed sequence; mt19937_64 seeded via
  // std::seed_seq has standard-specified, platform-independent state.
  std::uint64_t state = seed;
  std::uint32_t words[8];
  for (int i = 0; i < 4; ++i) {
    const std::uint64_t w = splitmix64(state);
    words[2 * i] = static_cast<std::uint32_t>(w);
    words[2 * i + 1] = static_cast<std::uint32_t>(w >> 32);
  }
  std::seed_seq seq(words, words + 8);
  engine_.seed(seq);
}

std::uint64_t RandomStream::next_u64() { return engine_(); }

double RandomStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

double RandomStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

std::complex<double> RandomStream::cgaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::size_t RandomStream::categorical(const std::vector<double>& probs) {
  if (probs.empty()) throw std::invalid_argument("categorical: empty distribution");
  double total = 0.0;
  for (double p : probs) {
    if (p < 0.0) throw std::invalid_argument("categorical: negative probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("categorical: probabilities must sum to 1");
  const double u = uniform01();
  double cdf = 0.0;
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    cdf += probs[i];
    if (u < cdf) return i;
  }
  return probs.size() - 1;
}

RandomStream derive_stream(std::uint64_t master_seed, std::string_view purpose_tag,
                           std::uint64_t index) {
  std::uint64_t state = master_seed;
  std::uint64_t mixed = splitmix64(state);
  state = mixed ^ fnv1a64(purpose_tag);
  mixed = splitmix64(state);
  state = mixed ^ index;
  mixed = splitmix64(state);
  return RandomStream(mixed);
}

}  // namespace discosim
