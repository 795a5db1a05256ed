#include "lepage/c_stat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lepage {

namespace {

struct YScoreMoments {
  int n = 0;
  double sum = 0.0;
  double sigma_sq = 0.0;  // divisor n
};

YScoreMoments y_score_moments(std::span<const double> scores,
                              std::span<const std::uint8_t> is_y) {
  if (scores.size() != is_y.size()) {
    throw std::invalid_argument("c_statistic: scores/labels length mismatch");
  }
  YScoreMoments mom;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (is_y[i]) {
      ++mom.n;
      mom.sum += scores[i];
    }
  }
  if (mom.n == 0) return mom;
  const double mean = mom.sum / mom.n;
  double ss = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (is_y[i]) ss += (scores[i] - mean) * (scores[i] - mean);
  }
  mom.sigma_sq = ss / mom.n;
  return mom;
}

}  // namespace

double c_statistic(std::span<const double> scores,
                   std::span<const std::uint8_t> is_y) {
  return y_score_moments(scores, is_y).sum;
}

double e0_c(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("e0_c: sample sizes must be positive");
  }
  const double N = m + n;
  if ((m + n) % 2 == 0) return n * (N + 2.0) / 4.0;
  return n * (N + 1.0) * (N + 1.0) / (4.0 * N);
}

double var0_c(int m, int n) {
  if (m < 1 || n < 1 || m + n < 4) {
    throw std::invalid_argument("var0_c: need N = m+n >= 4");
  }
  const double dm = m, dn = n, N = m + n;
  if ((m + n) % 2 == 0) return dm * dn * (N * N - 4.0) / (48.0 * (N - 1.0));
  return dm * dn * (N + 1.0) * (N * N + 3.0) / (48.0 * N * N);
}

double var_hat_c(std::span<const double> scores,
                 std::span<const std::uint8_t> is_y) {
  const YScoreMoments mom = y_score_moments(scores, is_y);
  if (mom.n < 2) {
    throw std::invalid_argument("var_hat_c: need n >= 2 Y positions");
  }
  const double N = static_cast<double>(scores.size());
  const double dn = mom.n;
  return mom.sigma_sq * dn * dn * (N - dn) / (N * (dn - 1.0));
}

CStatResult c_stat_result(const TwoSample& sample) {
  const PooledSample pooled = pool_and_order(sample);
  const std::vector<double> scores =
      ansari_scores(pooled.total(), pooled.tie_group);
  const YScoreMoments mom = y_score_moments(scores, pooled.is_y);

  CStatResult result;
  result.c = mom.sum;
  result.e0 = e0_c(sample.m(), sample.n());
  result.var0 = var0_c(sample.m(), sample.n());
  result.sigma_hat_sq = mom.sigma_sq;
  const double N = pooled.total();
  const double dn = sample.n();
  result.var_hat = mom.sigma_sq * dn * dn * (N - dn) / (N * (dn - 1.0));
  const double dev = result.c - result.e0;
  result.c_star = dev / std::sqrt(result.var0);
  if (result.var_hat > 0.0) {
    result.c_star_p = dev / std::sqrt(result.var_hat);
  } else {
    result.c_star_p_degenerate = true;
    const double inf = std::numeric_limits<double>::infinity();
    result.c_star_p = dev > 0.0 ? inf : (dev < 0.0 ? -inf : 0.0);
  }
  return result;
}

}  // namespace lepage
