#include "lepage/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/exponential.hpp>
#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/laplace.hpp>
#include <boost/math/distributions/logistic.hpp>
#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/uniform.hpp>
#include <boost/math/distributions/weibull.hpp>

namespace lepage {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
  int params;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::exponential, "exponential", 1},
    {Family::gamma, "gamma", 2},
    {Family::chisq_ls, "chisq_ls", 2},
    {Family::lognormal, "lognormal", 2},
    {Family::weibull, "weibull", 2},
    {Family::normal, "normal", 2},
    {Family::uniform, "uniform", 2},
    {Family::logistic, "logistic", 2},
    {Family::laplace, "laplace", 2},
};

double standard_normal(Rng& rng) {
  // Marsaglia polar method.
  while (true) {
    const double v1 = 2.0 * rng.next_double() - 1.0;
    const double v2 = 2.0 * rng.next_double() - 1.0;
    const double s = v1 * v1 + v2 * v2;
    if (s > 0.0 && s < 1.0) return v1 * std::sqrt(-2.0 * std::log(s) / s);
  }
}

// Marsaglia-Tsang for shape >= 1, boosted by the power trick below 1.
double standard_gamma(double shape, Rng& rng) {
  if (shape < 1.0) {
    const double u = rng.next_open_double();
    return standard_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  while (true) {
    const double x = standard_normal(rng);
    const double t = 1.0 + c * x;
    if (t <= 0.0) continue;
    const double v = t * t * t;
    const double u = rng.next_open_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

const char* family_name(Family family) {
  for (const auto& info : kFamilies) {
    if (info.family == family) return info.name;
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (const auto& info : kFamilies) {
    if (name == info.name) return info.family;
  }
  throw std::invalid_argument(
      "unknown family '" + name +
      "' (expected exponential, gamma, chisq_ls, lognormal, weibull, normal, "
      "uniform, logistic or laplace)");
}

int family_param_count(Family family) {
  for (const auto& info : kFamilies) {
    if (info.family == family) return info.params;
  }
  return 0;
}

DistributionSpec DistributionSpec::parse(const std::string& family,
                                         const std::vector<double>& params) {
  DistributionSpec spec;
  spec.family = parse_family(family);
  const int want = family_param_count(spec.family);
  if (static_cast<int>(params.size()) != want) {
    throw std::invalid_argument(std::string(family_name(spec.family)) +
                                " takes " + std::to_string(want) +
                                " parameter(s), got " +
                                std::to_string(params.size()));
  }
  spec.a = params[0];
  if (want > 1) spec.b = params[1];
  validate(spec);
  return spec;
}

void validate(const DistributionSpec& spec) {
  auto positive = [&](double v, const char* what) {
    if (!(v > 0.0)) {
      throw std::invalid_argument(std::string(family_name(spec.family)) +
                                  ": " + what + " must be positive");
    }
  };
  switch (spec.family) {
    case Family::exponential: positive(spec.a, "rate"); break;
    case Family::gamma:
      positive(spec.a, "shape");
      positive(spec.b, "rate");
      break;
    case Family::chisq_ls: positive(spec.b, "scale"); break;
    case Family::lognormal: positive(spec.b, "sdlog"); break;
    case Family::weibull:
      positive(spec.a, "shape");
      positive(spec.b, "scale");
      break;
    case Family::normal: positive(spec.b, "sd"); break;
    case Family::uniform:
      if (!(spec.b > spec.a)) {
        throw std::invalid_argument("uniform: needs b > a");
      }
      break;
    case Family::logistic: positive(spec.b, "scale"); break;
    case Family::laplace: positive(spec.b, "scale"); break;
  }
}

double sample_one(const DistributionSpec& spec, Rng& rng) {
  switch (spec.family) {
    case Family::exponential:
      return -std::log1p(-rng.next_double()) / spec.a;
    case Family::gamma:
      return standard_gamma(spec.a, rng) / spec.b;
    case Family::chisq_ls:
      return spec.a + spec.b * (-2.0 * std::log1p(-rng.next_double()));
    case Family::lognormal:
      return std::exp(spec.a + spec.b * standard_normal(rng));
    case Family::weibull:
      return spec.b * std::pow(-std::log1p(-rng.next_double()), 1.0 / spec.a);
    case Family::normal:
      return spec.a + spec.b * standard_normal(rng);
    case Family::uniform:
      return spec.a + (spec.b - spec.a) * rng.next_double();
    case Family::logistic: {
      const double u = rng.next_open_double();
      return spec.a + spec.b * std::log(u / (1.0 - u));
    }
    case Family::laplace: {
      const double u = rng.next_open_double();
      return u < 0.5 ? spec.a + spec.b * std::log(2.0 * u)
                     : spec.a - spec.b * std::log(2.0 * (1.0 - u));
    }
  }
  throw std::logic_error("sample_one: unreachable");
}

std::vector<double> sample(const DistributionSpec& spec, int count,
                           SeededStream stream) {
  if (count < 1) throw std::invalid_argument("sample: count must be >= 1");
  validate(spec);
  Rng rng(stream);
  std::vector<double> out(count);
  for (double& v : out) v = sample_one(spec, rng);
  return out;
}

namespace {

template <typename F>
double dispatch(const DistributionSpec& spec, F&& f) {
  using namespace boost::math;
  switch (spec.family) {
    case Family::exponential: return f(exponential_distribution<>(spec.a));
    case Family::gamma: return f(gamma_distribution<>(spec.a, 1.0 / spec.b));
    case Family::lognormal: return f(lognormal_distribution<>(spec.a, spec.b));
    case Family::weibull: return f(weibull_distribution<>(spec.a, spec.b));
    case Family::normal: return f(normal_distribution<>(spec.a, spec.b));
    case Family::uniform: return f(uniform_distribution<>(spec.a, spec.b));
    case Family::logistic: return f(logistic_distribution<>(spec.a, spec.b));
    case Family::laplace: return f(laplace_distribution<>(spec.a, spec.b));
    case Family::chisq_ls: break;  // handled by callers
  }
  throw std::logic_error("dispatch: unreachable");
}

}  // namespace

double dist_cdf(const DistributionSpec& spec, double x) {
  validate(spec);
  if (spec.family == Family::chisq_ls) {
    const double z = (x - spec.a) / spec.b;
    if (z <= 0.0) return 0.0;
    return boost::math::cdf(boost::math::chi_squared_distribution<>(2.0), z);
  }
  return dispatch(spec, [&](const auto& d) { return boost::math::cdf(d, x); });
}

double dist_quantile(const DistributionSpec& spec, double p) {
  validate(spec);
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("dist_quantile: p must be in (0,1)");
  }
  if (spec.family == Family::chisq_ls) {
    return spec.a +
           spec.b * boost::math::quantile(
                        boost::math::chi_squared_distribution<>(2.0), p);
  }
  return dispatch(spec,
                  [&](const auto& d) { return boost::math::quantile(d, p); });
}

std::vector<QuantileCheck> quantile_check(const DistributionSpec& spec,
                                          int draws, SeededStream stream,
                                          const std::vector<double>& levels) {
  std::vector<double> values = sample(spec, draws, stream);
  std::sort(values.begin(), values.end());
  std::vector<QuantileCheck> out;
  out.reserve(levels.size());
  for (double q : levels) {
    QuantileCheck check;
    check.level = q;
    check.analytic = dist_quantile(spec, q);
    auto idx = static_cast<std::size_t>(q * draws);
    if (idx >= values.size()) idx = values.size() - 1;
    check.empirical = values[idx];
    check.abs_error = std::abs(check.empirical - check.analytic);
    out.push_back(check);
  }
  return out;
}

double ks_distance(const DistributionSpec& spec, std::vector<double> draws) {
  std::sort(draws.begin(), draws.end());
  const double n = static_cast<double>(draws.size());
  double d = 0.0;
  for (std::size_t i = 0; i < draws.size(); ++i) {
    const double f = dist_cdf(spec, draws[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return d;
}

}  // namespace lepage
