#pragma once

// The six quadratic location-scale statistics L0..L5 and their asymptotic
// chi-square(2) p-values.
//
//   L0 pairs the classical variance on both components; L1/L2 swap the
//   Fligner-Policello / Fong-Huang estimator into the U component; L3 swaps
//   the empirical estimator into the C component; L4/L5 robustify both.

#include <array>

#include "lepage/c_stat.hpp"
#include "lepage/u_stat.hpp"

namespace lepage {

inline constexpr int kStatisticCount = 6;

struct LepageSuite {
  std::array<double, kStatisticCount> l{};
  std::array<double, kStatisticCount> p_asymptotic{};
  std::array<bool, kStatisticCount> degenerate{};
  UStatResult u;
  CStatResult c;
};

// Survival function of chi-square with 2 degrees of freedom: exp(-x/2).
// Throws for negative input.
double chisq2_sf(double value);

// Computes all six statistics from one pass over the components. A zero
// variance estimate marks the affected statistics degenerate and assigns an
// infinite sentinel; the remaining statistics are still computed.
LepageSuite lepage_suite(const TwoSample& sample);

}  // namespace lepage
