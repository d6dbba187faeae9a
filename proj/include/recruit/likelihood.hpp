#ifndef RECRUIT_LIKELIHOOD_HPP
#define RECRUIT_LIKELIHOOD_HPP

#include "recruit/snapshot.hpp"

namespace recruit {

// Marginal log-likelihood blocks over centres, each up to an additive
// constant independent of its parameters. Centres not yet open (tau <= 0)
// contribute nothing. Rising-factorial-log forms keep every block stable
// when an optimizer walks a flat ridge towards very large parameters.

/// Recruitment block in (alpha, mu): the summed negative-binomial
/// log-mass of the per-centre arrival counts.
double loglik_recruitment(double alpha, double mu, const InterimSnapshot& snap);

/// Beta-binomial block in (psi1, psi2). With use_tilde the successes are
/// k~_i out of n_i (screening models); otherwise k_i out of the patients
/// with known outcomes (n_i - nu_i, which is n_i when nothing is pending).
double loglik_beta_binomial(double psi1, double psi2, const InterimSnapshot& snap,
                            bool use_tilde);

/// Gamma-prior block for the screening-dropout rates, in (alpha2, beta2).
double loglik_theta_prior(double alpha2, double beta2, const InterimSnapshot& snap);

/// Bernoulli block in r at fixed counts (used for loglik reporting).
double loglik_r_block(double r, double successes, double failures);

/// Pooled closed-form MLE of the staying probability.
/// Throws DataError when no patient outcomes are available.
double estimate_r_pooled(const InterimSnapshot& snap, bool use_tilde);

/// Pooled closed-form MLE of the screening-dropout rate: sum l_i / sum T_i.
/// Throws DataError when there is no screening exposure.
double estimate_theta_pooled(const InterimSnapshot& snap);

}  // namespace recruit

#endif
