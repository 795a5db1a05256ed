#pragma once

// Seeded variate generation for the simulation families, plus analytic
// CDF/quantile access used by the diagnostic checks.
//
// Parameterizations: exponential(rate), gamma(shape, rate),
// chisq_ls(shift, scale) = scale * chisq(2) + shift, lognormal(meanlog,
// sdlog), weibull(shape, scale), normal(mean, sd), uniform(a, b),
// logistic(location, scale), laplace(location, scale).

#include <string>
#include <vector>

#include "lepage/rng.hpp"

namespace lepage {

enum class Family {
  exponential,
  gamma,
  chisq_ls,
  lognormal,
  weibull,
  normal,
  uniform,
  logistic,
  laplace,
};

struct DistributionSpec {
  Family family = Family::exponential;
  double a = 1.0;  // first parameter (rate / shape / shift / meanlog / ...)
  double b = 0.0;  // second parameter where the family has one

  static DistributionSpec parse(const std::string& family,
                                const std::vector<double>& params);
};

const char* family_name(Family family);
Family parse_family(const std::string& name);
int family_param_count(Family family);

// Throws std::invalid_argument for invalid parameters (nonpositive rates,
// shapes or scales, uniform with b <= a).
void validate(const DistributionSpec& spec);

// One draw / a vector of i.i.d. draws from the stream.
double sample_one(const DistributionSpec& spec, Rng& rng);
std::vector<double> sample(const DistributionSpec& spec, int count,
                           SeededStream stream);

double dist_cdf(const DistributionSpec& spec, double x);
double dist_quantile(const DistributionSpec& spec, double p);

// Diagnostic report: empirical quantiles of `draws` random variates against
// the analytic inverse CDF at the probe levels (default 0.1..0.9).
struct QuantileCheck {
  double level = 0.0;
  double analytic = 0.0;
  double empirical = 0.0;
  double abs_error = 0.0;
};
std::vector<QuantileCheck> quantile_check(
    const DistributionSpec& spec, int draws, SeededStream stream,
    const std::vector<double>& levels = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7,
                                         0.8, 0.9});

// One-sample Kolmogorov-Smirnov distance between draws and the analytic CDF.
double ks_distance(const DistributionSpec& spec, std::vector<double> draws);

}  // namespace lepage
