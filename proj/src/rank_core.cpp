#include "lepage/rank_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lepage {

TwoSample make_two_sample(std::vector<double> x, std::vector<double> y) {
  if (x.size() < 2 || y.size() < 2) {
    throw std::invalid_argument(
        "two_sample: each sample needs at least 2 values (got m=" +
        std::to_string(x.size()) + ", n=" + std::to_string(y.size()) + ")");
  }
  auto check_finite = [](const std::vector<double>& v, const char* name) {
    for (double value : v) {
      if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string("two_sample: sample ") + name +
                                    " contains a non-finite value");
      }
    }
  };
  check_finite(x, "x");
  check_finite(y, "y");
  return TwoSample{std::move(x), std::move(y)};
}

PooledSample pool_and_order(const TwoSample& sample) {
  const int m = sample.m();
  const int n = sample.n();
  const int total = m + n;

  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  auto value_at = [&](int idx) {
    return idx < m ? sample.x[idx] : sample.y[idx - m];
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return value_at(a) < value_at(b); });

  PooledSample pooled;
  pooled.m = m;
  pooled.n = n;
  pooled.values.resize(total);
  pooled.is_y.resize(total);
  pooled.tie_group.resize(total);
  std::int32_t group = 0;
  for (int i = 0; i < total; ++i) {
    pooled.values[i] = value_at(order[i]);
    pooled.is_y[i] = order[i] >= m ? 1 : 0;
    if (i > 0 && pooled.values[i] != pooled.values[i - 1]) ++group;
    pooled.tie_group[i] = group;
  }
  return pooled;
}

std::vector<double> ansari_scores(int n_total) {
  if (n_total < 2) {
    throw std::invalid_argument("ansari_scores: need n_total >= 2");
  }
  std::vector<double> scores(n_total);
  for (int i = 0; i < n_total; ++i) {
    scores[i] = static_cast<double>(std::min(i + 1, n_total - i));
  }
  return scores;
}

std::vector<double> ansari_scores(int n_total,
                                  std::span<const std::int32_t> tie_group) {
  std::vector<double> scores = ansari_scores(n_total);
  if (static_cast<int>(tie_group.size()) != n_total) {
    throw std::invalid_argument("ansari_scores: tie_group size mismatch");
  }
  int i = 0;
  while (i < n_total) {
    int j = i;
    double sum = 0.0;
    while (j < n_total && tie_group[j] == tie_group[i]) sum += scores[j++];
    if (j - i > 1) {
      const double mid = sum / (j - i);
      std::fill(scores.begin() + i, scores.begin() + j, mid);
    }
    i = j;
  }
  return scores;
}

PlacementVectors placements(const TwoSample& sample) {
  const int m = sample.m();
  const int n = sample.n();
  std::vector<double> xs = sample.x;
  std::vector<double> ys = sample.y;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  PlacementVectors out;
  out.p.resize(m);
  out.q.resize(n);
  for (int i = 0; i < m; ++i) {
    const double v = sample.x[i];
    const auto lo = std::lower_bound(ys.begin(), ys.end(), v);
    const auto hi = std::upper_bound(lo, ys.end(), v);
    const double above = static_cast<double>(ys.end() - hi);
    const double ties = static_cast<double>(hi - lo);
    out.p[i] = (above + 0.5 * ties) / n;
  }
  for (int j = 0; j < n; ++j) {
    const double v = sample.y[j];
    const auto lo = std::lower_bound(xs.begin(), xs.end(), v);
    const auto hi = std::upper_bound(lo, xs.end(), v);
    const double below = static_cast<double>(lo - xs.begin());
    const double ties = static_cast<double>(hi - lo);
    out.q[j] = (below + 0.5 * ties) / m;
  }
  return out;
}

}  // namespace lepage
