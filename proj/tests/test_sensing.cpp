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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "discosim/channels.hpp"
#include "discosim/scene.hpp"
#include "discosim/sensing.hpp"
#include "doctest.h"

using namespace discosim;

namespace {

arma::cx_mat random_cx(int rows, int cols, std::uint64_t seed) {
  RandomStream stream(seed);
  arma::cx_mat m(rows, cols);
  for (auto& e : m) e = stream.cgaussian();
  return m;
}

MusicSpectrum flat_spectrum_with_peak(double peak, std::size_t peak_index) {
  MusicSpectrum s;
  const std::size_t n = 1801;
  s.grid_deg.resize(n);
  s.values.assign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) s.grid_deg[i] = -90.0 + 0.1 * i;
  s.values[peak_index] = peak;
  s.peak_value = peak;
  s.peak_angle_deg = s.grid_deg[peak_index];
  return s;
}

}  // namespace

TEST_CASE("echo noise variance realizes the configured direct-path SNR") {
  const double chi = 0.8, p0 = 1.5849e-3, l = 3.2e-7;
  const int n = 16;
  for (const double snr_db : {-5.0, 0.0, 10.0, 20.0}) {
    const double sigma2 = echo_noise_variance(chi, p0, n, l, snr_db);
    REQUIRE(sigma2 > 0.0);
    const double h_norm2 = l * n;
    const double realized = chi * chi * (p0 / n) * h_norm2 * h_norm2 / (n * sigma2);
    CHECK(realized == doctest::Approx(db_to_linear(snr_db)).epsilon(1e-12));
  }
  CHECK(echo_noise_variance(chi, p0, n, l, 10.0) <
        echo_noise_variance(chi, p0, n, l, 0.0));
  CHECK_THROWS_AS(echo_noise_variance(chi, 0.0, n, l, 10.0), std::invalid_argument);
}

TEST_CASE("noiseless echo is an exact rank-one reflection") {
  RandomStream stream(5);
  const arma::cx_vec h_d = arma::cx_vec(random_cx(16, 1, 6));
  const arma::cx_vec h_dris = 0.3 * arma::cx_vec(random_cx(16, 1, 7));
  const arma::cx_mat x = random_cx(16, 20, 8);
  const double chi = 0.7;

  const EchoFrame frame = synth_echo(h_d, h_dris, chi, x, 0.0, 0.3, stream);
  REQUIRE(frame.y_s.n_rows == 16);
  REQUIRE(frame.y_s.n_cols == 20);
  CHECK(frame.true_theta == doctest::Approx(0.3));
  CHECK(frame.sigma2_s == doctest::Approx(0.0));

  const arma::cx_vec h = h_d + h_dris;
  const arma::cx_mat want = chi * h * (h.t() * x);
  CHECK(arma::norm(frame.y_s - want, "fro") <= 1e-12 * arma::norm(want, "fro"));

  CHECK_THROWS_AS(synth_echo(h_d, h_dris, 1.5, x, 0.0, 0.3, stream),
                  std::invalid_argument);
  CHECK_THROWS_AS(synth_echo(h_d, h_dris, chi, x, -1.0, 0.3, stream),
                  std::invalid_argument);
  CHECK_THROWS_AS(synth_echo(h_d.head(8), h_dris, chi, x, 0.0, 0.3, stream),
                  std::invalid_argument);
}

TEST_CASE("noisy echo statistics") {
  RandomStream stream(9);
  const arma::cx_vec h_d(16, arma::fill::zeros);
  const arma::cx_vec h_dris(16, arma::fill::zeros);
  const arma::cx_mat x(16, 400, arma::fill::zeros);
  const double sigma2 = 0.25;
  const EchoFrame frame = synth_echo(h_d, h_dris, 1.0, x, sigma2, 0.0, stream);
  // zero signal: the frame is pure noise with per-entry variance sigma2
  const double power = arma::accu(arma::square(arma::abs(frame.y_s))) / (16.0 * 400.0);
  CHECK(power == doctest::Approx(sigma2).epsilon(0.05));
}

TEST_CASE("snapshot covariance") {
  SUBCASE("single snapshot is its own outer product") {
    const arma::cx_mat y = random_cx(6, 1, 10);
    const arma::cx_mat r = sample_covariance(y);
    const arma::cx_mat want = y * y.t();
    CHECK(arma::norm(r - want, "fro") <= 1e-14 * arma::norm(want, "fro"));
  }

  SUBCASE("is Hermitian and positive semidefinite") {
    const arma::cx_mat y = random_cx(8, 30, 11);
    const arma::cx_mat r = sample_covariance(y);
    CHECK(arma::norm(r - r.t(), "fro") <= 1e-12 * arma::norm(r, "fro"));
    arma::vec eigs;
    REQUIRE(arma::eig_sym(eigs, r));
    CHECK(eigs.min() >= -1e-10 * std::real(arma::trace(r)) / 8.0);
  }

  SUBCASE("an empty frame is rejected") {
    const arma::cx_mat y(8, 0);
    CHECK_THROWS_AS(sample_covariance(y), std::invalid_argument);
  }
}

TEST_CASE("subspace spectrum peaks exactly on an on-grid source") {
  const double theta_deg = 17.0;
  const arma::cx_vec a =
      steering_ula(16, theta_deg * std::numbers::pi / 180.0, 0.5);
  const arma::cx_mat r = a * a.t();
  const MusicSpectrum spec = music_spectrum(r, 0.1, 1, 0.5);
  REQUIRE(spec.grid_deg.size() == 1801);
  CHECK(spec.grid_deg.front() == doctest::Approx(-90.0));
  CHECK(spec.grid_deg.back() == doctest::Approx(90.0));
  CHECK(spec.peak_angle_deg == doctest::Approx(theta_deg).epsilon(1e-12));
  CHECK(doa_bias(spec, theta_deg) == doctest::Approx(0.0));
}

TEST_CASE("white covariance gives a flat spectrum") {
  const arma::cx_mat r = 2.5 * arma::eye<arma::cx_mat>(12, 12);
  const MusicSpectrum spec = music_spectrum(r, 0.5, 1, 0.5);
  std::vector<double> sorted = spec.values;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  CHECK(spec.peak_value <= 1.05 * median);
}

TEST_CASE("spectrum is invariant to covariance scaling") {
  const arma::cx_mat y = random_cx(8, 40, 12);
  const arma::cx_mat r = sample_covariance(y);
  const MusicSpectrum s1 = music_spectrum(r, 0.25, 1, 0.5);
  const MusicSpectrum s2 = music_spectrum(7.0 * r, 0.25, 1, 0.5);
  CHECK(s1.peak_angle_deg == doctest::Approx(s2.peak_angle_deg));
  REQUIRE(s1.values.size() == s2.values.size());
  for (std::size_t i = 0; i < s1.values.size(); ++i)
    CHECK(s1.values[i] == doctest::Approx(s2.values[i]).epsilon(1e-9));
}

TEST_CASE("end-to-end estimate is exact for a quiet direct echo") {
  RandomStream stream(13);
  const double theta_deg = 17.0;
  const arma::cx_vec h_d =
      steering_ula(16, theta_deg * std::numbers::pi / 180.0, 0.5);
  const arma::cx_vec h_dris(16, arma::fill::zeros);
  const arma::cx_mat x = random_cx(16, 32, 14);
  const EchoFrame frame = synth_echo(h_d, h_dris, 1.0, x, 1e-12,
                                     theta_deg * std::numbers::pi / 180.0, stream);
  const MusicSpectrum spec =
      music_spectrum(sample_covariance(frame.y_s), 0.1, 1, 0.5);
  CHECK(doa_bias(spec, theta_deg) <= 1e-9);
}

TEST_CASE("spectrum validation") {
  const arma::cx_mat r = arma::eye<arma::cx_mat>(4, 4);
  CHECK_THROWS_AS(music_spectrum(r, 0.1, 4, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(music_spectrum(r, 0.1, -1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(music_spectrum(r, 0.0, 1, 0.5), std::invalid_argument);
  const arma::cx_mat rect(4, 5, arma::fill::ones);
  CHECK_THROWS_AS(music_spectrum(rect, 0.1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("peak prominence loss") {
  SUBCASE("identical spectra lose nothing") {
    const MusicSpectrum s = flat_spectrum_with_peak(10.0, 1070);
    CHECK(peak_loss(s, s) == doctest::Approx(0.0));
  }

  SUBCASE("halving the peak on a unit floor costs about 3 dB") {
    const MusicSpectrum clean = flat_spectrum_with_peak(10.0, 1070);
    const MusicSpectrum jammed = flat_spectrum_with_peak(5.0, 1070);
    // 10*log10((10/mean_c) / (5/mean_j)) with means 1810/1801 and 1805/1801
    CHECK(peak_loss(clean, jammed) == doctest::Approx(2.9983).epsilon(1e-3));
    CHECK(peak_loss(jammed, clean) == doctest::Approx(-2.9983).epsilon(1e-3));
  }

  SUBCASE("mismatched grids are rejected") {
    const MusicSpectrum a = flat_spectrum_with_peak(10.0, 1070);
    MusicSpectrum b = a;
    b.grid_deg.pop_back();
    b.values.pop_back();
    CHECK_THROWS_AS(peak_loss(a, b), std::invalid_argument);
    MusicSpectrum c = a;
    c.grid_deg[5] += 0.05;
    CHECK_THROWS_AS(peak_loss(a, c), std::invalid_argument);
  }
}

TEST_CASE("direction bias is a plain absolute difference") {
  MusicSpectrum s;
  s.peak_angle_deg = 17.05;
  CHECK(doa_bias(s, 17.0) == doctest::Approx(0.05));
  s.peak_angle_deg = -3.0;
  CHECK(doa_bias(s, 2.0) == doctest::Approx(5.0));
}
