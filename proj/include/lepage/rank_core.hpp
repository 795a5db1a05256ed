#pragma once

// Two-sample container, pooled ordering, Ansari score assignment and
// placement vectors shared by all rank statistics.

#include <cstdint>
#include <span>
#include <vector>

namespace lepage {

// A validated pair of independent samples. X has size m, Y has size n.
struct TwoSample {
  std::vector<double> x;
  std::vector<double> y;

  int m() const { return static_cast<int>(x.size()); }
  int n() const { return static_cast<int>(y.size()); }
  int total() const { return m() + n(); }
};

// Builds a TwoSample, throwing std::invalid_argument when either sample has
// fewer than 2 values or contains a non-finite entry.
TwoSample make_two_sample(std::vector<double> x, std::vector<double> y);

// Pooled sample sorted ascending, with group labels and tie-run ids.
// tie_group is non-decreasing and increments exactly at value changes, so
// equal pooled values (and only those) share a group id.
struct PooledSample {
  std::vector<double> values;
  std::vector<std::uint8_t> is_y;
  std::vector<std::int32_t> tie_group;
  int m = 0;
  int n = 0;

  int total() const { return m + n; }
  int group_count() const {
    return tie_group.empty() ? 0 : tie_group.back() + 1;
  }
};

PooledSample pool_and_order(const TwoSample& sample);

// Symmetric Ansari scores for a pooled sample of size n_total:
// {1,2,...,N/2,N/2,...,2,1} for even N, {1,...,(N-1)/2,(N+1)/2,(N-1)/2,...,1}
// for odd N. The tied variant replaces each tie run by the mean of its base
// scores (midscore). Throws std::invalid_argument for n_total < 2.
std::vector<double> ansari_scores(int n_total);
std::vector<double> ansari_scores(int n_total,
                                  std::span<const std::int32_t> tie_group);

// p[i]: fraction of Y above X_i, q[j]: fraction of X below Y_j, equal values
// counted with weight 1/2. mean(p) = mean(q) = U.
struct PlacementVectors {
  std::vector<double> p;
  std::vector<double> q;
};

PlacementVectors placements(const TwoSample& sample);

}  // namespace lepage
