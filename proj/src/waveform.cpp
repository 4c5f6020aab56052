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

#include "discosim/waveform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace discosim {

namespace {

double sqnorm(const arma::cx_mat& m) {
  const double f = arma::norm(m, "fro");
  return f * f;
}

void check_problem(const arma::cx_mat& h_pt, const SymbolMatrix& s, double p0,
                   const char* who) {
  if (s.entries.n_rows != h_pt.n_rows)
    throw std::invalid_argument(std::string(who) + ": H and S row counts differ");
  if (s.per_user_amplitude.size() != s.entries.n_rows)
    throw std::invalid_argument(std::string(who) + ": amplitude list length mismatch");
  if (p0 <= 0.0) throw std::invalid_argument(std::string(who) + ": p0 must be > 0");
  if (!h_pt.is_finite() || !s.entries.is_finite())
    throw std::invalid_argument(std::string(who) + ": non-finite input");
}

double tradeoff_objective(const arma::cx_mat& h_pt, const SymbolMatrix& s,
                          const arma::cx_mat& x0, double kappa, const arma::cx_mat& x) {
  return kappa * sqnorm(h_pt * x - s.entries) + (1.0 - kappa) * sqnorm(x - x0);
}

}  // namespace

SymbolMatrix gen_symbols(int k_users, int frame_len, const std::vector<double>& amplitudes,
                         RandomStream& stream) {
  if (k_users < 1 || frame_len < 1)
    throw std::invalid_argument("gen_symbols: k_users and frame_len must be >= 1");
  if (amplitudes.size() != static_cast<std::size_t>(k_users))
    throw std::invalid_argument("gen_symbols: one amplitude per user required");
  for (double a : amplitudes)
    if (!(a > 0.0)) throw std::invalid_argument("gen_symbols: amplitudes must be > 0");

  SymbolMatrix s;
  s.per_user_amplitude = amplitudes;
  s.entries.set_size(k_users, frame_len);
  for (int k = 0; k < k_users; ++k) {
    for (int l = 0; l < frame_len; ++l) {
      const int idx = std::min(3, static_cast<int>(stream.uniform01() * 4.0));
      const double phase = std::numbers::pi * (0.25 + 0.5 * idx);
      s.entries(k, l) = std::polar(amplitudes[k], phase);
    }
  }
  return s;
}

WaveformSolution solve_p1(const arma::cx_mat& h_pt, const SymbolMatrix& s, double p0) {
  check_problem(h_pt, s, p0, "solve_p1");
  const arma::uword n = h_pt.n_cols;
  const arma::uword l = s.entries.n_cols;
  if (n > l) throw std::invalid_argument("solve_p1: requires n_tx <= frame_len");

  arma::cx_mat u, v;
  arma::vec sv;
  if (!arma::svd(u, sv, v, arma::cx_mat(h_pt.t() * s.entries), "std"))
    throw std::runtime_error("solve_p1: SVD failed");

  // Each singular pair carries a free phase; pin it by making the
  // largest-modulus entry of the left vector real-positive.
  for (arma::uword j = 0; j < n; ++j) {
    const arma::uword imax = arma::abs(u.col(j)).index_max();
    const std::complex<double> e = u(imax, j);
    if (std::abs(e) > 0.0) {
      const std::complex<double> w = std::conj(e) / std::abs(e);
      u.col(j) *= w;
      v.col(j) *= w;
    }
  }

  WaveformSolution sol;
  const double scale = std::sqrt(p0 * static_cast<double>(l) / static_cast<double>(n));
  sol.x = scale * u * v.cols(0, n - 1).t();
  sol.objective = sqnorm(h_pt * sol.x - s.entries);
  const double diag_target = p0 / static_cast<double>(n);
  sol.constraint_residual =
      arma::norm((1.0 / static_cast<double>(l)) * sol.x * sol.x.t() -
                     diag_target * arma::eye<arma::cx_mat>(n, n),
                 "fro") /
      (diag_target * std::sqrt(static_cast<double>(n)));
  return sol;
}

WaveformSolution solve_p2(const arma::cx_mat& h_pt, const SymbolMatrix& s,
                          const arma::cx_mat& x0, double kappa, double p0) {
  check_problem(h_pt, s, p0, "solve_p2");
  if (kappa < 0.0 || kappa > 1.0)
    throw std::invalid_argument("solve_p2: kappa must lie in [0, 1]");
  const arma::uword n = h_pt.n_cols;
  const arma::uword l = s.entries.n_cols;
  if (x0.n_rows != n || x0.n_cols != l)
    throw std::invalid_argument("solve_p2: x0 dimension mismatch");
  const double target = static_cast<double>(l) * p0;

  arma::cx_mat ata =
      kappa * (h_pt.t() * h_pt) + (1.0 - kappa) * arma::eye<arma::cx_mat>(n, n);
  ata = 0.5 * (ata + ata.t());
  const arma::cx_mat atb = kappa * (h_pt.t() * s.entries) + (1.0 - kappa) * x0;

  arma::vec d;
  arma::cx_mat q;
  if (!arma::eig_sym(d, q, ata))
    throw std::runtime_error("solve_p2: eigendecomposition failed");
  const arma::cx_mat w = q.t() * atb;  // coefficients in the eigenbasis
  arma::vec wsq(n);
  for (arma::uword i = 0; i < n; ++i) wsq(i) = sqnorm(w.row(i));

  const double d_min = d(0);
  const double span = std::max(d(n - 1) - d_min, 1.0);
  auto secular = [&](double lam) {
    double acc = -target;
    for (arma::uword i = 0; i < n; ++i) {
      const double den = d(i) + lam;
      acc += wsq(i) / (den * den);
    }
    return acc;
  };
  auto secular_deriv = [&](double lam) {
    double acc = 0.0;
    for (arma::uword i = 0; i < n; ++i) {
      const double den = d(i) + lam;
      acc -= 2.0 * wsq(i) / (den * den * den);
    }
    return acc;
  };

  WaveformSolution sol;
  const double lam_edge = -d_min + 1e-13 * span;
  if (secular(lam_edge) <= 0.0) {
    // Degenerate case: the norm target is unreachable for lam > -d_min, so
    // the multiplier pins at -d_min and the norm deficit is filled along a
    // minimal eigenvector (optimality is unaffected by which one).
    const double tol_gap = 1e-10 * span;
    arma::cx_mat coeff(n, l, arma::fill::zeros);
    double used = 0.0;
    for (arma::uword i = 0; i < n; ++i) {
      const double gap = d(i) - d_min;
      if (gap > tol_gap) {
        coeff.row(i) = w.row(i) / gap;
        used += wsq(i) / (gap * gap);
      }
    }
    sol.x = q * coeff;
    const double tau_sq = std::max(target - used, 0.0);
    sol.x.col(0) += std::sqrt(tau_sq) * q.col(0);
    sol.multiplier = -d_min;
    sol.iterations = 0;
  } else {
    // Bracket the root, then Newton from the left with bisection safeguard.
    // The secular function is convex and strictly decreasing on the domain,
    // so Newton steps launched from the f > 0 side stay on it.
    const double total_w = arma::accu(wsq);
    double lo = std::max(lam_edge, std::sqrt(total_w / target) - d(n - 1));
    if (secular(lo) <= 0.0) lo = lam_edge;
    double hi = std::max(lo + span, std::sqrt(total_w / target) - d_min);
    int guard = 0;
    while (secular(hi) > 0.0 && guard++ < 200) hi = -d_min + 2.0 * (hi + d_min);

    double cur = lo;
    int it = 0;
    while (++it <= 200) {
      const double fc = secular(cur);
      if (std::abs(fc) <= 1e-10 * target) break;
      if (fc > 0.0)
        lo = cur;
      else
        hi = cur;
      const double fp = secular_deriv(cur);
      double next = fp < 0.0 ? cur - fc / fp : std::numeric_limits<double>::infinity();
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      cur = next;
    }
    sol.multiplier = cur;
    sol.iterations = it;
    arma::cx_mat coeff = w;
    coeff.each_col() /= arma::cx_vec(arma::conv_to<arma::cx_vec>::from(d + cur));
    sol.x = q * coeff;
  }

  sol.objective = tradeoff_objective(h_pt, s, x0, kappa, sol.x);
  sol.constraint_residual = std::abs(sqnorm(sol.x) - target) / target;
  return sol;
}

WaveformSolution oracle_norm_ls(const arma::cx_mat& h_pt, const SymbolMatrix& s,
                                const arma::cx_mat& x0, double kappa, double p0,
                                double tol) {
  check_problem(h_pt, s, p0, "oracle_norm_ls");
  if (kappa < 0.0 || kappa > 1.0)
    throw std::invalid_argument("oracle_norm_ls: kappa must lie in [0, 1]");
  const arma::uword n = h_pt.n_cols;
  const arma::uword l = s.entries.n_cols;
  if (x0.n_rows != n || x0.n_cols != l)
    throw std::invalid_argument("oracle_norm_ls: x0 dimension mismatch");
  const double target = static_cast<double>(l) * p0;

  const auto objective = [&](const arma::cx_mat& x) {
    return tradeoff_objective(h_pt, s, x0, kappa, x);
  };
  const auto gradient = [&](const arma::cx_mat& x) {
    return arma::cx_mat(2.0 * (kappa * (h_pt.t() * (h_pt * x - s.entries)) +
                               (1.0 - kappa) * (x - x0)));
  };
  const auto project = [&](arma::cx_mat x) {
    const double nn = sqnorm(x);
    if (nn <= 0.0) {
      x.zeros();
      x(0, 0) = std::sqrt(target);
      return x;
    }
    return arma::cx_mat(std::sqrt(target / nn) * x);
  };

  // Step size from the smooth part's curvature; Armijo keeps descent exact.
  const double h2 = arma::norm(h_pt, 2);
  const double lipschitz = 2.0 * (kappa * h2 * h2 + (1.0 - kappa));
  const double step0 = 1.0 / std::max(lipschitz, 1e-12);

  WaveformSolution best;
  best.objective = std::numeric_limits<double>::infinity();
  int total_iters = 0;

  constexpr int kRestarts = 6;  // X0 plus five random starts
  for (int r = 0; r < kRestarts; ++r) {
    arma::cx_mat x;
    if (r == 0) {
      x = project(x0);
    } else {
      RandomStream rs = derive_stream(0xD15C0, "oracle-restart", static_cast<std::uint64_t>(r));
      arma::cx_mat seed(n, l);
      for (arma::uword j = 0; j < l; ++j)
        for (arma::uword i = 0; i < n; ++i) seed(i, j) = rs.cgaussian();
      x = project(seed);
    }

    double obj = objective(x);
    double multiplier = 0.0;
    constexpr int kMaxIters = 50000;
    int it = 0;
    for (; it < kMaxIters; ++it) {
      const arma::cx_mat g = gradient(x);
      const double inner = arma::accu(arma::real(arma::conj(g) % x));
      const arma::cx_mat g_proj = g - (inner / target) * x;
      const double g_proj_norm2 = sqnorm(g_proj);
      multiplier = -inner / (2.0 * target);
      if (std::sqrt(g_proj_norm2) <= tol * (1.0 + std::sqrt(sqnorm(g)))) break;

      double t = step0;
      arma::cx_mat x_next;
      double obj_next = obj;
      for (int bt = 0; bt < 60; ++bt) {
        x_next = project(x - t * g_proj);
        obj_next = objective(x_next);
        if (obj_next <= obj - 1e-4 * t * g_proj_norm2) break;
        t *= 0.5;
      }
      if (obj_next >= obj) break;  // numerical floor reached
      x = x_next;
      obj = obj_next;
    }
    total_iters += it;

    if (obj < best.objective) {
      best.x = x;
      best.objective = obj;
      best.multiplier = multiplier;
    }
  }

  best.iterations = total_iters;
  best.constraint_residual = std::abs(sqnorm(best.x) - target) / target;
  return best;
}

}  // namespace discosim
