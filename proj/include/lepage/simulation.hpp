#pragma once

// Monte Carlo harness: size/power studies over the six statistics, the
// empirical validation of the C-variance estimator, and null-quantile
// diagnostics. Replication r always draws from Rng(seed, r), so results are
// identical for any worker count.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lepage/distributions.hpp"
#include "lepage/lepage.hpp"
#include "lepage/permutation.hpp"

namespace lepage {

enum class CriticalSource {
  permutation_table,  // built-in 5% cutoffs for the covered (m,n) pairs
  asymptotic,         // -2 ln(alpha) for every statistic
  fresh_permutation,  // cutoffs generated by Monte Carlo label permutation
  auto_policy,        // table if covered and min(m,n)<=10, asymptotic if
                      // min(m,n)>=30, fresh permutation otherwise
};

const char* critical_source_name(CriticalSource source);
CriticalSource parse_critical_source(const std::string& name);

// Built-in 5% permutation critical values for small designs (rows: (5,5),
// (6,5), (6,6), (7,5), (7,7), (8,5), (8,8), (9,5), (10,5), (10,10)).
std::optional<std::array<double, kStatisticCount>> table2_cutoffs(int m, int n);

struct SimConfig {
  DistributionSpec f;
  DistributionSpec g;
  int m = 10;
  int n = 10;
  int replications = 10'000;
  double alpha = 0.05;
  CriticalSource source = CriticalSource::auto_policy;
  int fresh_perms = 100'000;
  std::uint64_t seed = 0;
};

struct SimResult {
  std::array<double, kStatisticCount> reject_rate{};
  std::array<double, kStatisticCount> mc_se{};
  std::array<double, kStatisticCount> cutoffs{};
  CriticalSource source_used = CriticalSource::asymptotic;
  SimConfig config;
  double wall_seconds = 0.0;
};

// Draws X ~ f, Y ~ g per replication, evaluates L0..L5 and tallies
// rejections at the configured cutoffs. Throws when the cutoff table does
// not cover (m,n) (the message names fresh_permutation), when alpha != 0.05
// with the table source, or on an invalid config.
SimResult run_study(const SimConfig& config, int workers = 0);

struct ValidateVarCResult {
  int m = 0, n = 0;
  double mean_var_hat = 0.0;
  double var0 = 0.0;
  double rel_error = 0.0;
  std::int64_t replications = 0;
  bool exhaustive = false;
};

// Strong-null Monte Carlo mean of the empirical C-variance estimator against
// the closed form. With exhaustive=true, averages over all binom(N,n) label
// assignments of a tie-free pool instead of sampling (exact identity).
ValidateVarCResult validate_var_c(int m, int n, const DistributionSpec& spec,
                                  int replications, std::uint64_t seed,
                                  int workers = 0, bool exhaustive = false);

struct NullQuantilePoint {
  double level = 0.0;
  double empirical = 0.0;
  double reference = 0.0;  // chi-square(2) for L's, standard normal otherwise
  double band_low = 0.0;   // +- one binomial SE of the level, mapped through
  double band_high = 0.0;  //   the order statistics
};

// Empirical upper quantiles of a statistic under the strong null (f = g),
// estimated from fresh two-sample draws.
std::vector<NullQuantilePoint> null_quantile_check(
    StatisticId stat, int m, int n, const DistributionSpec& spec,
    int replications, std::uint64_t seed, int workers = 0,
    const std::vector<double>& levels = {0.90, 0.95, 0.99});

}  // namespace lepage
