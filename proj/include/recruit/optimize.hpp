#ifndef RECRUIT_OPTIMIZE_HPP
#define RECRUIT_OPTIMIZE_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>

namespace recruit {

struct OptimizerSettings {
  int max_evals = 2000;   // per start
  double rel_tol = 1e-8;  // simplex diameter tolerance in log-parameter space
  std::optional<std::array<double, 2>> init;  // overrides the caller's default
  bool log_params = true;  // optimize in log space to enforce positivity
  int restarts = 3;        // total starts (initial + perturbed)

  void validate() const;  // throws ConfigError
};

struct OptimResult {
  std::array<double, 2> argmax{1.0, 1.0};
  double value = 0.0;
  int evals = 0;
  bool converged = false;
  std::string message;
};

/// Derivative-free maximization of a two-argument function over the
/// positive quadrant (Nelder-Mead over log parameters, deterministic
/// perturbed restarts, parameters boxed to [1e-8, 1e8]).
/// Throws NumericalError when no start yields a finite objective.
OptimResult maximize_2d(const std::function<double(double, double)>& loglik,
                        const OptimizerSettings& settings,
                        std::array<double, 2> default_init);

}  // namespace recruit

#endif
