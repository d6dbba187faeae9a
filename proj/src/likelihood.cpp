#include "recruit/likelihood.hpp"

#include <cmath>
#include <stdexcept>

#include "recruit/errors.hpp"
#include "recruit/special.hpp"

namespace recruit {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw std::domain_error(std::string(what) + " must be finite and > 0");
  }
}

long as_count(double x) { return static_cast<long>(std::llround(x)); }

}  // namespace

double loglik_recruitment(double alpha, double mu, const InterimSnapshot& snap) {
  require_positive(alpha, "loglik_recruitment: alpha");
  require_positive(mu, "loglik_recruitment: mu");
  const double log_mu_over_alpha = std::log(mu) - std::log(alpha);
  double ll = 0.0;
  for (Eigen::Index i = 0; i < snap.n_centres(); ++i) {
    if (!(snap.tau[i] > 0.0)) continue;
    const long n_i = as_count(snap.n[i]);
    ll += log_rising_sum(alpha, n_i) + n_i * log_mu_over_alpha -
          (n_i + alpha) * std::log1p(mu * snap.tau[i] / alpha);
  }
  return ll;
}

double loglik_beta_binomial(double psi1, double psi2, const InterimSnapshot& snap,
                            bool use_tilde) {
  require_positive(psi1, "loglik_beta_binomial: psi1");
  require_positive(psi2, "loglik_beta_binomial: psi2");
  double ll = 0.0;
  for (Eigen::Index i = 0; i < snap.n_centres(); ++i) {
    if (!(snap.tau[i] > 0.0)) continue;
    const long x = as_count(use_tilde ? snap.k_tilde[i] : snap.k[i]);
    const long m = as_count(use_tilde ? snap.n[i] : snap.n[i] - snap.nu[i]);
    // ln B(x+psi1, m-x+psi2) - ln B(psi1, psi2) without lgamma cancellation.
    ll += log_rising_sum(psi1, x) + log_rising_sum(psi2, m - x) -
          log_rising_sum(psi1 + psi2, m);
  }
  return ll;
}

double loglik_theta_prior(double alpha2, double beta2, const InterimSnapshot& snap) {
  require_positive(alpha2, "loglik_theta_prior: alpha2");
  require_positive(beta2, "loglik_theta_prior: beta2");
  double ll = 0.0;
  for (Eigen::Index i = 0; i < snap.n_centres(); ++i) {
    if (!(snap.tau[i] > 0.0)) continue;
    const long l_i = as_count(snap.l[i]);
    const double t_i = snap.t_screen_sum[i];
    if (l_i == 0 && t_i <= 0.0) continue;  // degenerate term, identically 0
    ll += log_rising_sum(alpha2, l_i) -
          (l_i + alpha2) * std::log1p(t_i / beta2) - l_i * std::log(beta2);
  }
  return ll;
}

double loglik_r_block(double r, double successes, double failures) {
  double ll = 0.0;
  if (successes > 0.0) {
    if (!(r > 0.0)) return -std::numeric_limits<double>::infinity();
    ll += successes * std::log(r);
  }
  if (failures > 0.0) {
    if (!(r < 1.0)) return -std::numeric_limits<double>::infinity();
    ll += failures * std::log1p(-r);
  }
  return ll;
}

double estimate_r_pooled(const InterimSnapshot& snap, bool use_tilde) {
  double successes = 0.0, total = 0.0;
  for (Eigen::Index i = 0; i < snap.n_centres(); ++i) {
    if (use_tilde) {
      successes += snap.k_tilde[i];
      total += snap.n[i];
    } else {
      // Patients still in screening have no known outcome yet.
      successes += snap.k[i];
      total += snap.n[i] - snap.nu[i];
    }
  }
  if (!(total > 0.0)) {
    throw DataError("estimate_r_pooled: no patients with known outcomes by t1");
  }
  return successes / total;
}

double estimate_theta_pooled(const InterimSnapshot& snap) {
  const double events = snap.l_total();
  const double exposure = snap.t_screen_total();
  if (!(exposure > 0.0)) {
    throw DataError("estimate_theta_pooled: no screening exposure by t1");
  }
  return events / exposure;
}

}  // namespace recruit
