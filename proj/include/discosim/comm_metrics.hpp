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

#include "discosim/waveform.hpp"

namespace discosim {

struct CommReport {
  double mui_power = 0.0;              // ||H_PT X - S||_F^2
  arma::vec sinr_per_user;             // linear
  double sum_rate = 0.0;               // bits/s/Hz
  arma::vec sinr_bound_per_user;       // analytic jamming lower bound, linear
  double rate_from_bound = 0.0;        // sum rate evaluated at the bound
};

// Residual multi-user interference power ||H_PT X - S||_F^2.
double mui_power(const arma::cx_mat& h_pt, const arma::cx_mat& x, const SymbolMatrix& s);

// Per-user SINR with symbol expectations realized as within-frame averages:
//   gamma_k = mean_l |s_kl|^2 /
//             ( mean_l |row_k(H_PT) x_l - s_kl + row_k(H_ACA) x_l|^2 + sigma2 ).
arma::vec sinr_per_user(const arma::cx_mat& h_pt, const arma::cx_mat& h_aca,
                        const arma::cx_mat& x, const SymbolMatrix& s, double sigma2);

// sum_k log2(1 + gamma_k).
double sum_rate(const arma::vec& gammas);

// Jamming lower bound on the per-user SINR: the aging interference enters
// only through its average power p0 * l_cas_k * n_d * mu_bar, with the MUI
// term kept per-realization and the symbol power taken as the analytic
// rho_k^2 (exact for unit-modulus constellations).
arma::vec sinr_lower_bound(const arma::cx_mat& h_pt, const arma::cx_mat& x,
                           const SymbolMatrix& s, const std::vector<double>& l_cas_per_user,
                           int n_d, double mu_bar, double p0, double sigma2);

// Interference-free reference: sum_k log2(1 + rho_k^2 / sigma2).
double upper_bound_rate(const std::vector<double>& amplitudes, double sigma2);

// Fills every CommReport field for one realized frame.
CommReport evaluate_comm(const arma::cx_mat& h_pt, const arma::cx_mat& h_aca,
                         const arma::cx_mat& x, const SymbolMatrix& s,
                         const std::vector<double>& l_cas_per_user, int n_d, double mu_bar,
                         double p0, double sigma2);

}  // namespace discosim
