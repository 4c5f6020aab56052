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

// Desired downlink frame: entry (k, l) is the constellation point user k
// should receive at symbol l, already scaled to that user's amplitude.
struct SymbolMatrix {
  arma::cx_mat entries;                    // K x L, |entry(k,l)| = rho_k
  std::vector<double> per_user_amplitude;  // rho_k
};

struct WaveformSolution {
  arma::cx_mat x;                    // N x L transmit frame
  double objective = 0.0;            // residual of the solved problem
  double multiplier = 0.0;           // Lagrange multiplier of the norm constraint
  double constraint_residual = 0.0;  // relative violation of the feasibility set
  int iterations = 0;
};

// i.i.d. uniform QPSK entries scaled per user; one uniform draw per entry,
// filled user-major.
SymbolMatrix gen_symbols(int k_users, int frame_len, const std::vector<double>& amplitudes,
                         RandomStream& stream);

// Best sensing waveform: minimizes ||H X - S||_F^2 subject to the white
// spatial covariance (1/L) X X^* = (P0/N) I (orthogonal Procrustes).  With
// U S V^* the SVD of H^* S (N x L), the closed form is
// X0 = sqrt(P0 L / N) * U * I_{NxL} * V^*.  Requires N <= L.
WaveformSolution solve_p1(const arma::cx_mat& h_pt, const SymbolMatrix& s, double p0);

// Communication/sensing trade-off waveform: global minimizer of
//   kappa ||H X - S||_F^2 + (1 - kappa) ||X - X0||_F^2
// subject to ||X||_F^2 = L P0.  Solved exactly through the eigenbasis of
// A^*A = kappa H^*H + (1-kappa) I: X(lambda) = (A^*A + lambda I)^{-1} A^*B
// with the unique multiplier lambda > -eig_min making the constraint active,
// found by safeguarded Newton/bisection on the monotone secular function.
// When no finite multiplier reaches the target norm (degenerate case, e.g.
// kappa = 1 with rank-deficient H), mass is added along a minimal
// eigenvector, which preserves optimality.
WaveformSolution solve_p2(const arma::cx_mat& h_pt, const SymbolMatrix& s,
                          const arma::cx_mat& x0, double kappa, double p0);

// Independent verification oracle for solve_p2: projected gradient descent
// on the sphere ||X||_F^2 = L P0, monotone via Armijo backtracking, run from
// X0 plus >= 5 deterministic random restarts to stationarity tol.  Shares no
// code path with solve_p2 beyond BLAS.
WaveformSolution oracle_norm_ls(const arma::cx_mat& h_pt, const SymbolMatrix& s,
                                const arma::cx_mat& x0, double kappa, double p0,
                                double tol);

}  // namespace discosim
