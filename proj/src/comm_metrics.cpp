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

#include "discosim/comm_metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace discosim {

namespace {

void check_frame(const arma::cx_mat& h, const arma::cx_mat& x, const SymbolMatrix& s,
                 const char* who) {
  if (h.n_cols != x.n_rows || h.n_rows != s.entries.n_rows ||
      x.n_cols != s.entries.n_cols)
    throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

double mui_power(const arma::cx_mat& h_pt, const arma::cx_mat& x, const SymbolMatrix& s) {
  check_frame(h_pt, x, s, "mui_power");
  const double f = arma::norm(h_pt * x - s.entries, "fro");
  return f * f;
}

arma::vec sinr_per_user(const arma::cx_mat& h_pt, const arma::cx_mat& h_aca,
                        const arma::cx_mat& x, const SymbolMatrix& s, double sigma2) {
  check_frame(h_pt, x, s, "sinr_per_user");
  if (arma::size(h_aca) != arma::size(h_pt))
    throw std::invalid_argument("sinr_per_user: h_aca dimension mismatch");
  if (sigma2 <= 0.0) throw std::invalid_argument("sinr_per_user: sigma2 must be > 0");

  const arma::mat residual_sq =
      arma::square(arma::abs(h_pt * x - s.entries + h_aca * x));
  const arma::mat signal_sq = arma::square(arma::abs(s.entries));
  arma::vec gammas(h_pt.n_rows);
  for (arma::uword k = 0; k < gammas.n_elem; ++k)
    gammas(k) = arma::mean(signal_sq.row(k)) / (arma::mean(residual_sq.row(k)) + sigma2);
  return gammas;
}

double sum_rate(const arma::vec& gammas) {
  double rate = 0.0;
  for (double g : gammas) {
    if (g < 0.0) throw std::invalid_argument("sum_rate: SINR must be >= 0");
    rate += std::log2(1.0 + g);
  }
  return rate;
}

arma::vec sinr_lower_bound(const arma::cx_mat& h_pt, const arma::cx_mat& x,
                           const SymbolMatrix& s, const std::vector<double>& l_cas_per_user,
                           int n_d, double mu_bar, double p0, double sigma2) {
  check_frame(h_pt, x, s, "sinr_lower_bound");
  if (l_cas_per_user.size() != h_pt.n_rows)
    throw std::invalid_argument("sinr_lower_bound: one cascade gain per user required");
  if (n_d < 0 || mu_bar < 0.0 || p0 < 0.0)
    throw std::invalid_argument("sinr_lower_bound: gains must be >= 0");
  if (sigma2 <= 0.0) throw std::invalid_argument("sinr_lower_bound: sigma2 must be > 0");

  const arma::mat mui_sq = arma::square(arma::abs(h_pt * x - s.entries));
  arma::vec bound(h_pt.n_rows);
  for (arma::uword k = 0; k < bound.n_elem; ++k) {
    const double rho = s.per_user_amplitude.at(k);
    const double jam = p0 * l_cas_per_user[k] * static_cast<double>(n_d) * mu_bar;
    bound(k) = rho * rho / (arma::mean(mui_sq.row(k)) + jam + sigma2);
  }
  return bound;
}

double upper_bound_rate(const std::vector<double>& amplitudes, double sigma2) {
  if (sigma2 <= 0.0) throw std::invalid_argument("upper_bound_rate: sigma2 must be > 0");
  double rate = 0.0;
  for (double rho : amplitudes) rate += std::log2(1.0 + rho * rho / sigma2);
  return rate;
}

CommReport evaluate_comm(const arma::cx_mat& h_pt, const arma::cx_mat& h_aca,
                         const arma::cx_mat& x, const SymbolMatrix& s,
                         const std::vector<double>& l_cas_per_user, int n_d, double mu_bar,
                         double p0, double sigma2) {
  CommReport report;
  report.mui_power = mui_power(h_pt, x, s);
  report.sinr_per_user = sinr_per_user(h_pt, h_aca, x, s, sigma2);
  report.sum_rate = sum_rate(report.sinr_per_user);
  report.sinr_bound_per_user =
      sinr_lower_bound(h_pt, x, s, l_cas_per_user, n_d, mu_bar, p0, sigma2);
  report.rate_from_bound = sum_rate(report.sinr_bound_per_user);
  return report;
}

}  // namespace discosim
