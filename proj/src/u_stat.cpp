#include "lepage/u_stat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lepage {

namespace {

// Sorted-merge pass producing U plus the ECDF summaries the FP/FH
// estimators need: means and unbiased variances of F_Y(X_i) and F_X(Y_j).
struct UParts {
  double u = 0.0;
  double mean_fy = 0.0, mean_fx = 0.0;
  double s2_fy = 0.0, s2_fx = 0.0;
};

UParts u_parts(const TwoSample& sample) {
  const int m = sample.m();
  const int n = sample.n();
  std::vector<double> xs = sample.x;
  std::vector<double> ys = sample.y;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  std::vector<double> fy(m), fx(n);
  double u_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto lo = std::lower_bound(ys.begin(), ys.end(), xs[i]);
    const auto hi = std::upper_bound(lo, ys.end(), xs[i]);
    fy[i] = static_cast<double>(hi - ys.begin()) / n;
  }
  for (int j = 0; j < n; ++j) {
    const auto lo = std::lower_bound(xs.begin(), xs.end(), ys[j]);
    const auto hi = std::upper_bound(lo, xs.end(), ys[j]);
    fx[j] = static_cast<double>(hi - xs.begin()) / m;
    const double below = static_cast<double>(lo - xs.begin());
    const double ties = static_cast<double>(hi - lo);
    u_sum += below + 0.5 * ties;
  }

  auto mean_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double value : v) s += value;
    return s / v.size();
  };
  auto sample_var = [](const std::vector<double>& v, double mean) {
    double s = 0.0;
    for (double value : v) s += (value - mean) * (value - mean);
    return s / (v.size() - 1);
  };

  UParts parts;
  parts.u = u_sum / (static_cast<double>(m) * n);
  parts.mean_fy = mean_of(fy);
  parts.mean_fx = mean_of(fx);
  parts.s2_fy = sample_var(fy, parts.mean_fy);
  parts.s2_fx = sample_var(fx, parts.mean_fx);
  return parts;
}

}  // namespace

double u_statistic(const TwoSample& sample) { return u_parts(sample).u; }

double var0_u(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("var0_u: sample sizes must be positive");
  }
  const double dm = m, dn = n;
  return (1.0 / 12.0) * (1.0 / dm + 1.0 / dn + 1.0 / (dm * dn));
}

namespace {

double assemble_fp(int m, int n, const UParts& p) {
  const double dm = m, dn = n;
  return (1.0 - 1.0 / dm) * (1.0 / dm) * p.s2_fy +
         (1.0 - 1.0 / dn) * (1.0 / dn) * p.s2_fx +
         p.mean_fy * p.mean_fx / (dm * dn);
}

double assemble_fh(int m, int n, const UParts& p) {
  const double dm = m, dn = n;
  return (1.0 - 1.0 / dn) * (1.0 / dm) * p.s2_fy +
         (1.0 - 1.0 / dm) * (1.0 / dn) * p.s2_fx +
         p.mean_fy * p.mean_fx / (dm * dn);
}

}  // namespace

double var_fp(const TwoSample& sample) {
  return assemble_fp(sample.m(), sample.n(), u_parts(sample));
}

double var_fh(const TwoSample& sample) {
  return assemble_fh(sample.m(), sample.n(), u_parts(sample));
}

UStatResult u_stat_result(const TwoSample& sample) {
  const UParts parts = u_parts(sample);
  UStatResult result;
  result.u = parts.u;
  result.var0 = var0_u(sample.m(), sample.n());
  result.var_fp = assemble_fp(sample.m(), sample.n(), parts);
  result.var_fh = assemble_fh(sample.m(), sample.n(), parts);
  return result;
}

StandardizedValue standardized_u(const TwoSample& sample, UVariance variant) {
  const UStatResult r = u_stat_result(sample);
  double var = r.var0;
  if (variant == UVariance::fp) var = r.var_fp;
  if (variant == UVariance::fh) var = r.var_fh;
  StandardizedValue out;
  if (var > 0.0) {
    out.z = (r.u - 0.5) / std::sqrt(var);
    return out;
  }
  out.degenerate = true;
  const double inf = std::numeric_limits<double>::infinity();
  out.z = r.u > 0.5 ? inf : (r.u < 0.5 ? -inf : 0.0);
  return out;
}

}  // namespace lepage
