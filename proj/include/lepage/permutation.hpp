#pragma once

// Permutation null distributions for the Lepage-type statistics and the
// standardized C statistics: exact enumeration of all binom(N,n) label
// assignments, or Monte Carlo label sampling. Pooled values never change,
// only the labels.
//
// Determinism contract: Monte Carlo draw r uses Rng(seed, r) and exact
// assignment r is identified by its lexicographic rank, so the resulting
// value multisets are identical for any worker count.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "lepage/rank_core.hpp"

namespace lepage {

enum class StatisticId : int {
  l0 = 0,
  l1,
  l2,
  l3,
  l4,
  l5,
  c_star,
  c_star_p,
};

inline constexpr int kPermStatisticCount = 8;

const char* statistic_name(StatisticId id);
// Parses "L0".."L5", "Cstar", "CstarP" (case-insensitive); throws on others.
StatisticId parse_statistic(const std::string& token);

struct PermutationMode {
  enum class Kind { exact, monte_carlo };
  Kind kind = Kind::exact;
  std::int64_t replications = 0;  // Monte Carlo only
  std::uint64_t seed = 0;         // Monte Carlo only

  static PermutationMode Exact() { return {}; }
  static PermutationMode MonteCarlo(std::int64_t r, std::uint64_t seed) {
    return {Kind::monte_carlo, r, seed};
  }
};

inline constexpr std::int64_t kDefaultEnumerationCap = 200'000;

struct PermutationNull {
  StatisticId statistic = StatisticId::l0;
  int m = 0, n = 0;
  PermutationMode mode;
  std::vector<double> values;  // sorted ascending, +inf atoms allowed
};

// Null value multisets of all eight statistics from one enumeration pass,
// plus each statistic evaluated on the original labeling through the same
// code path (so p-value comparisons are exact).
struct PermutationNullSet {
  int m = 0, n = 0;
  PermutationMode mode;
  std::array<std::vector<double>, kPermStatisticCount> values;
  std::array<double, kPermStatisticCount> observed{};
};

// Exact mode errors when binom(N,n) exceeds `cap`, instructing Monte Carlo.
PermutationNullSet permutation_null_all(
    const TwoSample& sample, PermutationMode mode, int workers = 0,
    std::int64_t cap = kDefaultEnumerationCap);

PermutationNull permutation_null(const TwoSample& sample, StatisticId stat,
                                 PermutationMode mode, int workers = 0,
                                 std::int64_t cap = kDefaultEnumerationCap);

// Right-tail critical value conventions. `conservative` is the default:
// the smallest observed value t with #{values >= t}/count <= alpha, which
// guarantees size <= alpha under the permutation distribution. `quantile`
// is the plain empirical (1-alpha) quantile (smallest atom whose CDF
// reaches 1-alpha).
enum class QuantileRule { conservative, quantile };

double critical_value(std::span<const double> sorted_values, double alpha,
                      QuantileRule rule = QuantileRule::conservative);
double critical_value(const PermutationNull& null, double alpha,
                      QuantileRule rule = QuantileRule::conservative);

// Exact mode: #{values >= observed}/count. Monte Carlo: add-one estimate
// (1 + #{values >= observed})/(R + 1).
double perm_p_value(const PermutationNull& null, double observed);
double perm_p_value(std::span<const double> sorted_values,
                    PermutationMode::Kind kind, double observed);

// Number of label assignments, as a checked 64-bit value (throws on
// overflow past the cap guard).
std::int64_t binomial(int n, int k);

// Evaluates all eight statistics for arbitrary Y-position assignments of a
// pooled sample; used by the permutation engine and the simulation harness.
class PermutationEvaluator {
 public:
  explicit PermutationEvaluator(const PooledSample& pooled);

  struct Workspace {
    std::vector<std::int32_t> y_in_group;
    std::vector<int> positions;  // scratch for Fisher-Yates draws
  };
  Workspace make_workspace() const;

  // y_positions: the n pooled (sorted-order) positions labelled Y, any order.
  std::array<double, kPermStatisticCount> evaluate(
      std::span<const int> y_positions, Workspace& ws) const;

  int total() const { return total_; }
  int n() const { return n_; }

 private:
  int m_ = 0, n_ = 0, total_ = 0, group_count_ = 0;
  std::vector<std::int32_t> group_of_;
  std::vector<std::int32_t> group_size_;
  std::vector<double> score_;
  double e0_c_ = 0.0, var0_c_ = 0.0, var0_u_ = 0.0;
  double var_hat_factor_ = 0.0;  // n^2 (N-n) / (N (n-1))
};

}  // namespace lepage
