#ifndef RECRUIT_DISTRIBUTIONS_HPP
#define RECRUIT_DISTRIBUTIONS_HPP

#include "recruit/rng.hpp"

namespace recruit {

/// Shape/rate gamma; mean = shape/rate, variance = shape/rate^2.
struct GammaParams {
  double shape = 1.0;
  double rate = 1.0;

  double mean() const { return shape / rate; }
  double variance() const { return shape / (rate * rate); }
  /// Build from (shape, mean) instead of (shape, rate).
  static GammaParams from_mean(double shape, double mean);
  void validate(const char* what = "GammaParams") const;
};

struct BetaParams {
  double a = 1.0;
  double b = 1.0;

  double mean() const { return a / (a + b); }
  double variance() const {
    const double s = a + b;
    return a * b / (s * s * (s + 1.0));
  }
  /// E[r^2] under Beta(a, b).
  double second_moment() const { return a * (a + 1.0) / ((a + b) * (a + b + 1.0)); }
  /// E[r (1 - r)] under Beta(a, b).
  double mean_r_one_minus_r() const { return a * b / ((a + b) * (a + b + 1.0)); }
  void validate(const char* what = "BetaParams") const;
};

struct NegBinParams {
  double shape = 1.0;         // alpha
  double success_prob = 0.5;  // pi

  void validate(const char* what = "NegBinParams") const;
};

/// ln NegBin(k; alpha, pi) = ln[ G(alpha+k)/(k! G(alpha)) pi^k (1-pi)^alpha ].
double negbin_log_pmf(long k, const NegBinParams& p);

// Samplers. All draw orders are fixed, so equal handles reproduce
// identical sequences. Parameters are validated (std::domain_error).
double sample_gamma(const GammaParams& p, Rng& rng);
double sample_beta(const BetaParams& p, Rng& rng);
double sample_exponential(double rate, Rng& rng);
long sample_poisson(double mean, Rng& rng);
int sample_bernoulli(double prob, Rng& rng);

}  // namespace recruit

#endif
