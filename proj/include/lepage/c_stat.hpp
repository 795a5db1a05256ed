#pragma once

// Ansari-Bradley C statistic, its null moments for even and odd pooled size,
// the empirical variance estimator and the standardized forms C*, C*_P.

#include <span>

#include "lepage/rank_core.hpp"

namespace lepage {

struct CStatResult {
  double c = 0.0;
  double e0 = 0.0;
  double var0 = 0.0;
  double var_hat = 0.0;
  double sigma_hat_sq = 0.0;  // variance of the Y-sample scores, divisor n
  double c_star = 0.0;
  double c_star_p = 0.0;
  bool c_star_p_degenerate = false;
};

// Sum of the Ansari scores at Y-labelled positions. Throws on length
// mismatch between scores and labels.
double c_statistic(std::span<const double> scores,
                   std::span<const std::uint8_t> is_y);

// E0(C): n(N+2)/4 for even N, n(N+1)^2/(4N) for odd N.
double e0_c(int m, int n);

// Var0(C): mn(N^2-4)/(48(N-1)) for even N, mn(N+1)(N^2+3)/(48 N^2) for odd N.
// Requires N >= 4.
double var0_c(int m, int n);

// sigma_hat^2 * n^2 (N-n) / (N (n-1)) with sigma_hat^2 the divisor-n variance
// of the Y-sample scores. Requires n >= 2.
double var_hat_c(std::span<const double> scores,
                 std::span<const std::uint8_t> is_y);

CStatResult c_stat_result(const TwoSample& sample);

}  // namespace lepage
