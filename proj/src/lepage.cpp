#include "lepage/lepage.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lepage {

double chisq2_sf(double value) {
  if (value < 0.0) {
    throw std::invalid_argument("chisq2_sf: negative statistic");
  }
  return std::exp(-0.5 * value);
}

LepageSuite lepage_suite(const TwoSample& sample) {
  LepageSuite suite;
  suite.u = u_stat_result(sample);
  suite.c = c_stat_result(sample);

  const double du2 = (suite.u.u - 0.5) * (suite.u.u - 0.5);
  const double dc2 = (suite.c.c - suite.c.e0) * (suite.c.c - suite.c.e0);
  const double inf = std::numeric_limits<double>::infinity();

  // Component contribution, infinite sentinel on a vanished denominator.
  bool u_degen[3] = {false, false, false};
  double u_comp[3];
  const double u_vars[3] = {suite.u.var0, suite.u.var_fp, suite.u.var_fh};
  for (int i = 0; i < 3; ++i) {
    if (u_vars[i] > 0.0) {
      u_comp[i] = du2 / u_vars[i];
    } else {
      u_comp[i] = inf;
      u_degen[i] = true;
    }
  }
  bool c_degen[2] = {false, false};
  double c_comp[2];
  const double c_vars[2] = {suite.c.var0, suite.c.var_hat};
  for (int i = 0; i < 2; ++i) {
    if (c_vars[i] > 0.0) {
      c_comp[i] = dc2 / c_vars[i];
    } else {
      c_comp[i] = inf;
      c_degen[i] = true;
    }
  }

  // (u variant, c variant) per statistic: L0..L5.
  constexpr int kU[kStatisticCount] = {0, 1, 2, 0, 1, 2};
  constexpr int kC[kStatisticCount] = {0, 0, 0, 1, 1, 1};
  for (int i = 0; i < kStatisticCount; ++i) {
    suite.l[i] = u_comp[kU[i]] + c_comp[kC[i]];
    suite.degenerate[i] = u_degen[kU[i]] || c_degen[kC[i]];
    suite.p_asymptotic[i] = chisq2_sf(suite.l[i]);
  }
  return suite;
}

}  // namespace lepage
