#include "recruit/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace recruit {

namespace {

// Lanczos g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLogTwoPi = 0.91893853320467274178;

double lanczos_log_gamma(double x) {
  if (x < 0.5) {
    // Reflection keeps the series argument away from the pole at 0.
    return std::log(M_PI / std::sin(M_PI * x)) - lanczos_log_gamma(1.0 - x);
  }
  x -= 1.0;
  double a = kLanczos[0];
  const double t = x + 7.5;
  for (int k = 1; k < 9; ++k) a += kLanczos[k] / (x + k);
  return kHalfLogTwoPi + (x + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

double log_gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error("log_gamma_fn: requires finite x > 0, got " +
                            std::to_string(x));
  }
  return lanczos_log_gamma(x);
}

double log_beta_fn(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::domain_error("log_beta_fn: requires finite a, b > 0");
  }
  return log_gamma_fn(a) + log_gamma_fn(b) - log_gamma_fn(a + b);
}

double log_rising_sum(double a, long n) {
  if (!(a > 0.0) || n < 0) {
    throw std::domain_error("log_rising_sum: requires a > 0 and n >= 0");
  }
  double s = 0.0;
  for (long j = 0; j < n; ++j) s += std::log(a + static_cast<double>(j));
  return s;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); }

namespace {

// Acklam's rational approximation, then one Halley step against erfc.
double acklam_inverse_cdf(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - plow) {
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("normal_quantile: requires p in (0,1)");
  }
  double x = acklam_inverse_cdf(p);
  // Halley refinement: e = Phi(x) - p.
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double chi_square_quantile(double p, int dof) {
  if (dof < 1) throw std::domain_error("chi_square_quantile: dof >= 1");
  const double z = normal_quantile(p);
  const double nu = static_cast<double>(dof);
  const double t = 1.0 - 2.0 / (9.0 * nu) + z * std::sqrt(2.0 / (9.0 * nu));
  return nu * t * t * t;
}

}  // namespace recruit
