#pragma once

// Wilcoxon-Mann-Whitney U statistic, its null moments and the
// Fligner-Policello / Fong-Huang variance estimators.

#include "lepage/rank_core.hpp"

namespace lepage {

struct UStatResult {
  double u = 0.0;
  double e0 = 0.5;
  double var0 = 0.0;
  double var_fp = 0.0;
  double var_fh = 0.0;
};

enum class UVariance { classical, fp, fh };

// Result of a standardization that may divide by a zero variance estimate.
// Complete separation makes the FP/FH estimates vanish; the value is then a
// signed infinity and `degenerate` is set instead of producing a NaN.
struct StandardizedValue {
  double z = 0.0;
  bool degenerate = false;
};

// U = (1/(mn)) sum_ij [I(X_i < Y_j) + 1/2 I(X_i = Y_j)], in [0,1].
double u_statistic(const TwoSample& sample);

// (1/12)(1/m + 1/n + 1/(mn)); throws for nonpositive sizes.
double var0_u(int m, int n);

// Empirical-CDF variance estimators. With F_Y(X_i) = #{Y <= X_i}/n and
// F_X(Y_j) = #{X <= Y_j}/m, and S^2 the sample variance (divisor m-1, n-1):
//   var_fp = (1-1/m)(1/m) S^2(F_Y(X)) + (1-1/n)(1/n) S^2(F_X(Y))
//            + mean(F_Y(X)) mean(F_X(Y)) / (mn)
//   var_fh swaps the (1-1/m) and (1-1/n) prefactors.
// The two coincide exactly when m = n.
double var_fp(const TwoSample& sample);
double var_fh(const TwoSample& sample);

UStatResult u_stat_result(const TwoSample& sample);

// (U - 1/2)/sqrt(var); degenerate flag with signed-infinity sentinel when the
// selected variance estimate is zero.
StandardizedValue standardized_u(const TwoSample& sample, UVariance variant);

}  // namespace lepage
