#ifndef RECRUIT_FIT_HPP
#define RECRUIT_FIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "recruit/optimize.hpp"
#include "recruit/snapshot.hpp"

namespace recruit {

struct BlockDiagnostics {
  std::string block;
  int evals = 0;
  bool converged = true;
  double value = 0.0;
};

/// Population-level point estimates plus the per-centre conjugate posteriors
/// implied by them. Only the blocks demanded by the variant are populated.
struct FittedModel {
  Variant variant = Variant::A1;
  double t1 = 0.0;
  double screening_window = 0.0;

  double alpha_hat = 1.0;
  double mu_hat = 1.0;
  std::optional<double> r_hat;
  std::optional<double> theta_hat;
  std::optional<BetaParams> psi_hat;
  std::optional<GammaParams> theta_prior_hat;
  double loglik_at_optimum = 0.0;

  std::vector<GammaParams> lambda_post;  // Ga(alpha + n_i, beta + tau_i)
  std::vector<BetaParams> r_post;        // A.2 / B.3 only, else empty
  std::vector<GammaParams> theta_post;   // B.2 / B.3 only, else empty

  std::vector<BlockDiagnostics> diagnostics;
  std::vector<std::string> warnings;

  double beta_hat() const { return alpha_hat / mu_hat; }
  double sigma2_hat() const { return mu_hat * mu_hat / alpha_hat; }
};

/// Method-of-moments starting points for the likelihood blocks.
std::array<double, 2> recruitment_start(const InterimSnapshot& snap);
std::array<double, 2> beta_binomial_start(const InterimSnapshot& snap, bool use_tilde);
std::array<double, 2> theta_prior_start(const InterimSnapshot& snap);

/// Interim estimation for one dropout model: block MLEs (closed-form where
/// available, 2-d simplex search otherwise) and per-centre posteriors.
FittedModel fit(const InterimSnapshot& snap, Variant variant,
                const OptimizerSettings& settings = {});

/// Rebuild the per-centre posteriors from given population estimates
/// (fit() with the optimization already done; exposed for tests and JSON IO).
FittedModel fitted_from_estimates(const InterimSnapshot& snap, Variant variant,
                                  double alpha_hat, double mu_hat,
                                  std::optional<double> r_hat,
                                  std::optional<double> theta_hat,
                                  std::optional<BetaParams> psi_hat,
                                  std::optional<GammaParams> theta_prior_hat);

}  // namespace recruit

#endif
