#include "recruit/distributions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "recruit/errors.hpp"
#include "recruit/special.hpp"

namespace recruit {

GammaParams GammaParams::from_mean(double shape, double mean) {
  GammaParams p{shape, shape / mean};
  p.validate();
  return p;
}

void GammaParams::validate(const char* what) const {
  if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) ||
      !std::isfinite(rate)) {
    throw std::domain_error(std::string(what) + ": requires shape > 0, rate > 0");
  }
}

void BetaParams::validate(const char* what) const {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error(std::string(what) + ": requires a > 0, b > 0");
  }
}

void NegBinParams::validate(const char* what) const {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw std::domain_error(std::string(what) + ": requires shape > 0");
  }
  if (!(success_prob > 0.0) || !(success_prob < 1.0)) {
    throw std::domain_error(std::string(what) + ": requires 0 < success_prob < 1");
  }
}

double negbin_log_pmf(long k, const NegBinParams& p) {
  p.validate("negbin_log_pmf");
  if (k < 0) throw std::domain_error("negbin_log_pmf: requires k >= 0");
  const double kd = static_cast<double>(k);
  return log_rising_sum(p.shape, k) - log_gamma_fn(kd + 1.0) +
         kd * std::log(p.success_prob) + p.shape * std::log1p(-p.success_prob);
}

namespace {

// Marsaglia-Tsang for unit-rate gamma, shape >= 1.
double gamma_unit_rate_ge1(double shape, Rng& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_pos();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double sample_gamma(const GammaParams& p, Rng& rng) {
  p.validate("sample_gamma");
  if (p.shape >= 1.0) return gamma_unit_rate_ge1(p.shape, rng) / p.rate;
  // Boost for shape < 1: X ~ Ga(shape+1), X U^{1/shape} ~ Ga(shape).
  const double g = gamma_unit_rate_ge1(p.shape + 1.0, rng);
  const double u = rng.uniform_pos();
  return g * std::pow(u, 1.0 / p.shape) / p.rate;
}

double sample_beta(const BetaParams& p, Rng& rng) {
  p.validate("sample_beta");
  for (int attempt = 0; attempt < 100; ++attempt) {
    const double x = sample_gamma({p.a, 1.0}, rng);
    const double y = sample_gamma({p.b, 1.0}, rng);
    const double s = x + y;
    if (s > 0.0) {
      const double r = x / s;
      if (r > 0.0 && r < 1.0) return r;
      // Underflowed to an endpoint; nudge into the open interval.
      if (r <= 0.0) return std::nextafter(0.0, 1.0);
      return std::nextafter(1.0, 0.0);
    }
  }
  throw NumericalError("sample_beta: repeated underflow (shapes too small)");
}

double sample_exponential(double rate, Rng& rng) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::domain_error("sample_exponential: requires rate > 0");
  }
  return -std::log(rng.uniform_pos()) / rate;
}

namespace {

// Hoermann's PTRD transformed rejection, exact for mean >= 10.
long poisson_ptrd(double mu, Rng& rng) {
  const double smu = std::sqrt(mu);
  const double b = 0.931 + 2.53 * smu;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double vr = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mu = std::log(mu);
  for (;;) {
    double u = rng.uniform01() - 0.5;
    double v = rng.uniform01();
    const double us = 0.5 - std::fabs(u);
    const double kd = std::floor((2.0 * a / us + b) * u + mu + 0.43);
    if (us >= 0.07 && v <= vr) return static_cast<long>(kd);
    if (kd < 0.0 || (us < 0.013 && v > us)) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kd * log_mu - mu - log_gamma_fn(kd + 1.0);
    if (lhs <= rhs) return static_cast<long>(kd);
  }
}

}  // namespace

long sample_poisson(double mean, Rng& rng) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw std::domain_error("sample_poisson: requires finite mean >= 0");
  }
  if (mean == 0.0) return 0;
  if (mean >= 10.0) return poisson_ptrd(mean, rng);
  // Knuth multiplication for small means.
  const double limit = std::exp(-mean);
  long k = 0;
  double prod = rng.uniform_pos();
  while (prod > limit) {
    ++k;
    prod *= rng.uniform_pos();
  }
  return k;
}

int sample_bernoulli(double prob, Rng& rng) {
  if (!(prob >= 0.0) || !(prob <= 1.0)) {
    throw std::domain_error("sample_bernoulli: requires prob in [0,1]");
  }
  return rng.uniform01() < prob ? 1 : 0;
}

}  // namespace recruit
