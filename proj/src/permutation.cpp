#include "lepage/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "lepage/c_stat.hpp"
#include "lepage/rng.hpp"
#include "lepage/u_stat.hpp"

namespace lepage {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Lexicographic unranking via the combinatorial number system: writes the
// `rank`-th ascending n-subset of {0..total-1}.
void unrank_combination(std::int64_t rank, int total, int n, int* out) {
  int value = 0;
  for (int k = n; k > 0; --k) {
    while (true) {
      const std::int64_t block = binomial(total - 1 - value, k - 1);
      if (rank < block) break;
      rank -= block;
      ++value;
    }
    *out++ = value++;
  }
}

// Advances an ascending combination to its lexicographic successor.
bool next_combination(std::span<int> comb, int total) {
  const int n = static_cast<int>(comb.size());
  int i = n - 1;
  while (i >= 0 && comb[i] == total - n + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

// binomial(n,k) clamped to cap+1, never overflowing for cap << 2^63.
std::int64_t binomial_capped(int n, int k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;  // grows monotonically over steps
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // Exact at every step: result * (n-k+i) is divisible by i.
    const std::int64_t num = n - k + i;
    if (result > std::numeric_limits<std::int64_t>::max() / num) {
      throw std::overflow_error("binomial: value exceeds 64-bit range");
    }
    result = result * num / i;
  }
  return result;
}

const char* statistic_name(StatisticId id) {
  static const char* names[kPermStatisticCount] = {"L0", "L1", "L2",    "L3",
                                                   "L4", "L5", "Cstar", "CstarP"};
  return names[static_cast<int>(id)];
}

StatisticId parse_statistic(const std::string& token) {
  std::string t;
  for (char c : token) t.push_back(static_cast<char>(std::tolower(c)));
  for (int i = 0; i < kPermStatisticCount; ++i) {
    std::string name = statistic_name(static_cast<StatisticId>(i));
    for (char& c : name) c = static_cast<char>(std::tolower(c));
    if (t == name) return static_cast<StatisticId>(i);
  }
  if (t == "cstar_p" || t == "c*_p") return StatisticId::c_star_p;
  if (t == "c*") return StatisticId::c_star;
  throw std::invalid_argument("unknown statistic '" + token +
                              "' (expected L0..L5, Cstar or CstarP)");
}

PermutationEvaluator::PermutationEvaluator(const PooledSample& pooled)
    : m_(pooled.m),
      n_(pooled.n),
      total_(pooled.total()),
      group_count_(pooled.group_count()),
      group_of_(pooled.tie_group),
      score_(ansari_scores(pooled.total(), pooled.tie_group)) {
  group_size_.assign(group_count_, 0);
  for (int i = 0; i < total_; ++i) ++group_size_[group_of_[i]];
  e0_c_ = e0_c(m_, n_);
  var0_c_ = var0_c(m_, n_);
  var0_u_ = var0_u(m_, n_);
  const double N = total_, dn = n_;
  var_hat_factor_ = dn * dn * (N - dn) / (N * (dn - 1.0));
}

PermutationEvaluator::Workspace PermutationEvaluator::make_workspace() const {
  Workspace ws;
  ws.y_in_group.assign(group_count_, 0);
  ws.positions.resize(total_);
  return ws;
}

std::array<double, kPermStatisticCount> PermutationEvaluator::evaluate(
    std::span<const int> y_positions, Workspace& ws) const {
  std::fill(ws.y_in_group.begin(), ws.y_in_group.end(), 0);
  double c_sum = 0.0, c_sq = 0.0;
  for (int pos : y_positions) {
    ++ws.y_in_group[group_of_[pos]];
    c_sum += score_[pos];
    c_sq += score_[pos] * score_[pos];
  }

  const double dm = m_, dn = n_;
  // One sweep over tie groups accumulates the U statistic (half-weight
  // ties) and the ECDF summaries for the FP/FH estimators (full-weight
  // ties, standard empirical CDFs).
  double sum_p = 0.0;
  double sum_fy = 0.0, sum_fy2 = 0.0;
  double sum_fx = 0.0, sum_fx2 = 0.0;
  int y_before = 0, x_before = 0;
  for (int g = 0; g < group_count_; ++g) {
    const int y_in = ws.y_in_group[g];
    const int x_in = group_size_[g] - y_in;
    const int y_after = n_ - y_before - y_in;
    if (x_in > 0) {
      const double p = (y_after + 0.5 * y_in) / dn;
      const double fy = static_cast<double>(y_before + y_in) / dn;
      sum_p += x_in * p;
      sum_fy += x_in * fy;
      sum_fy2 += x_in * fy * fy;
    }
    if (y_in > 0) {
      const double fx = static_cast<double>(x_before + x_in) / dm;
      sum_fx += y_in * fx;
      sum_fx2 += y_in * fx * fx;
    }
    y_before += y_in;
    x_before += x_in;
  }

  const double u = sum_p / dm;
  const double mean_fy = sum_fy / dm;
  const double mean_fx = sum_fx / dn;
  const double s2_fy = std::max(0.0, sum_fy2 - dm * mean_fy * mean_fy) / (dm - 1.0);
  const double s2_fx = std::max(0.0, sum_fx2 - dn * mean_fx * mean_fx) / (dn - 1.0);
  const double vfp = (1.0 - 1.0 / dm) * (1.0 / dm) * s2_fy +
                     (1.0 - 1.0 / dn) * (1.0 / dn) * s2_fx +
                     mean_fy * mean_fx / (dm * dn);
  const double vfh = (1.0 - 1.0 / dn) * (1.0 / dm) * s2_fy +
                     (1.0 - 1.0 / dm) * (1.0 / dn) * s2_fx +
                     mean_fy * mean_fx / (dm * dn);

  const double sigma_sq = std::max(0.0, c_sq - c_sum * c_sum / dn) / dn;
  const double var_hat = sigma_sq * var_hat_factor_;

  const double du2 = (u - 0.5) * (u - 0.5);
  const double dc = c_sum - e0_c_;
  const double dc2 = dc * dc;
  const double zu0 = du2 / var0_u_;
  const double zufp = vfp > 0.0 ? du2 / vfp : kInf;
  const double zufh = vfh > 0.0 ? du2 / vfh : kInf;
  const double zc0 = dc2 / var0_c_;
  const double zch = var_hat > 0.0 ? dc2 / var_hat : kInf;

  std::array<double, kPermStatisticCount> out;
  out[0] = zu0 + zc0;
  out[1] = zufp + zc0;
  out[2] = zufh + zc0;
  out[3] = zu0 + zch;
  out[4] = zufp + zch;
  out[5] = zufh + zch;
  out[6] = dc / std::sqrt(var0_c_);
  out[7] = var_hat > 0.0 ? dc / std::sqrt(var_hat)
                         : (dc > 0.0 ? kInf : (dc < 0.0 ? -kInf : 0.0));
  return out;
}

PermutationNullSet permutation_null_all(const TwoSample& sample,
                                        PermutationMode mode, int workers,
                                        std::int64_t cap) {
  const PooledSample pooled = pool_and_order(sample);
  const PermutationEvaluator eval(pooled);
  const int total = pooled.total();
  const int n = pooled.n;

  std::int64_t count;
  if (mode.kind == PermutationMode::Kind::exact) {
    count = binomial_capped(total, n, cap);
    if (count > cap) {
      throw std::invalid_argument(
          "exact enumeration needs binomial(" + std::to_string(total) + "," +
          std::to_string(n) + ") assignments, above the cap of " +
          std::to_string(cap) + "; use Monte Carlo mode instead");
    }
  } else {
    if (mode.replications < 1) {
      throw std::invalid_argument("Monte Carlo mode needs replications >= 1");
    }
    count = mode.replications;
  }

  PermutationNullSet set;
  set.m = pooled.m;
  set.n = pooled.n;
  set.mode = mode;
  for (auto& v : set.values) v.resize(count);

  const int n_workers =
      static_cast<int>(std::min<std::int64_t>(resolve_workers(workers), count));
  auto run_exact = [&](int w) {
    const std::int64_t begin = count * w / n_workers;
    const std::int64_t end = count * (w + 1) / n_workers;
    if (begin >= end) return;
    auto ws = eval.make_workspace();
    std::vector<int> comb(n);
    unrank_combination(begin, total, n, comb.data());
    for (std::int64_t r = begin; r < end; ++r) {
      const auto stats = eval.evaluate(comb, ws);
      for (int s = 0; s < kPermStatisticCount; ++s) set.values[s][r] = stats[s];
      if (r + 1 < end) next_combination(comb, total);
    }
  };
  auto run_mc = [&](int w) {
    const std::int64_t begin = count * w / n_workers;
    const std::int64_t end = count * (w + 1) / n_workers;
    if (begin >= end) return;
    auto ws = eval.make_workspace();
    std::vector<int> draw(n);
    for (std::int64_t r = begin; r < end; ++r) {
      Rng rng(mode.seed, static_cast<std::uint64_t>(r));
      std::iota(ws.positions.begin(), ws.positions.end(), 0);
      for (int i = 0; i < n; ++i) {
        const auto j =
            i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(total - i)));
        std::swap(ws.positions[i], ws.positions[j]);
        draw[i] = ws.positions[i];
      }
      const auto stats = eval.evaluate(draw, ws);
      for (int s = 0; s < kPermStatisticCount; ++s) set.values[s][r] = stats[s];
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (int w = 1; w < n_workers; ++w) {
    pool.emplace_back([&, w] {
      mode.kind == PermutationMode::Kind::exact ? run_exact(w) : run_mc(w);
    });
  }
  mode.kind == PermutationMode::Kind::exact ? run_exact(0) : run_mc(0);
  for (auto& t : pool) t.join();

  // Observed statistics through the identical code path.
  {
    auto ws = eval.make_workspace();
    std::vector<int> y_positions;
    y_positions.reserve(n);
    for (int i = 0; i < total; ++i) {
      if (pooled.is_y[i]) y_positions.push_back(i);
    }
    set.observed = eval.evaluate(y_positions, ws);
  }

  for (auto& v : set.values) std::sort(v.begin(), v.end());
  return set;
}

PermutationNull permutation_null(const TwoSample& sample, StatisticId stat,
                                 PermutationMode mode, int workers,
                                 std::int64_t cap) {
  PermutationNullSet set = permutation_null_all(sample, mode, workers, cap);
  PermutationNull null;
  null.statistic = stat;
  null.m = set.m;
  null.n = set.n;
  null.mode = mode;
  null.values = std::move(set.values[static_cast<int>(stat)]);
  return null;
}

double critical_value(std::span<const double> sorted_values, double alpha,
                      QuantileRule rule) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("critical_value: alpha must be in (0,1)");
  }
  const std::int64_t count = static_cast<std::int64_t>(sorted_values.size());
  if (count == 0) {
    throw std::invalid_argument("critical_value: empty null distribution");
  }
  // Guard against alpha*count landing a hair below an integer it should hit.
  const auto tail_budget =
      static_cast<std::int64_t>(std::floor(alpha * static_cast<double>(count) + 1e-9));
  if (rule == QuantileRule::quantile) {
    const std::int64_t idx = count - 1 - tail_budget;
    return sorted_values[std::max<std::int64_t>(idx, 0)];
  }
  std::int64_t j = count - tail_budget;
  if (j <= 0) j = 1;
  while (j < count && sorted_values[j] == sorted_values[j - 1]) ++j;
  if (j >= count) return kInf;
  return sorted_values[j];
}

double critical_value(const PermutationNull& null, double alpha,
                      QuantileRule rule) {
  return critical_value(null.values, alpha, rule);
}

double perm_p_value(std::span<const double> sorted_values,
                    PermutationMode::Kind kind, double observed) {
  if (sorted_values.empty()) {
    throw std::invalid_argument("perm_p_value: empty null distribution");
  }
  const auto first =
      std::lower_bound(sorted_values.begin(), sorted_values.end(), observed);
  const auto tail = static_cast<double>(sorted_values.end() - first);
  const auto count = static_cast<double>(sorted_values.size());
  if (kind == PermutationMode::Kind::exact) return tail / count;
  return (1.0 + tail) / (count + 1.0);
}

double perm_p_value(const PermutationNull& null, double observed) {
  return perm_p_value(null.values, null.mode.kind, observed);
}

}  // namespace lepage
