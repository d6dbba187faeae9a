#include "recruit/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "recruit/errors.hpp"
#include "recruit/rng.hpp"

namespace recruit {

void OptimizerSettings::validate() const {
  if (max_evals < 100) throw ConfigError("optimizer: max_evals must be >= 100");
  if (!(rel_tol > 0.0)) throw ConfigError("optimizer: rel_tol must be > 0");
  if (restarts < 1) throw ConfigError("optimizer: restarts must be >= 1");
  if (init) {
    if (!((*init)[0] > 0.0) || !((*init)[1] > 0.0)) {
      throw ConfigError("optimizer: init must be positive");
    }
  }
}

namespace {

constexpr double kLogLo = -18.420680743952367;  // ln 1e-8
constexpr double kLogHi = 18.420680743952367;   // ln 1e8
constexpr double kInf = std::numeric_limits<double>::infinity();

using Point = std::array<double, 2>;

double clamp_log(double z) { return std::min(std::max(z, kLogLo), kLogHi); }

struct Simplex {
  Point x[3];
  double f[3];  // objective is negated log-likelihood (minimized)

  void order() {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (f[j] < f[i]) {
          std::swap(f[i], f[j]);
          std::swap(x[i], x[j]);
        }
      }
    }
  }
  double diameter() const {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        d = std::max(d, std::hypot(x[i][0] - x[j][0], x[i][1] - x[j][1]));
      }
    }
    return d;
  }
};

}  // namespace

OptimResult maximize_2d(const std::function<double(double, double)>& loglik,
                        const OptimizerSettings& settings,
                        std::array<double, 2> default_init) {
  settings.validate();
  const Point init = settings.init.value_or(default_init);
  if (!(init[0] > 0.0) || !(init[1] > 0.0)) {
    throw NumericalError("maximize_2d: starting point must be positive");
  }

  int total_evals = 0;
  auto eval = [&](const Point& z) {
    ++total_evals;
    if (z[0] < kLogLo || z[0] > kLogHi || z[1] < kLogLo || z[1] > kLogHi) {
      return kInf;
    }
    const double v = loglik(std::exp(z[0]), std::exp(z[1]));
    return std::isfinite(v) ? -v : kInf;
  };

  // Fixed-seed perturbations keep restarts deterministic run to run.
  Rng restart_rng(0x5EEDu, 0x0Du);

  OptimResult best;
  best.value = -kInf;
  bool any_finite = false;

  for (int start = 0; start < settings.restarts; ++start) {
    Point z0{clamp_log(std::log(init[0])), clamp_log(std::log(init[1]))};
    if (start > 0) {
      z0[0] = clamp_log(z0[0] + 1.2 * (restart_rng.uniform01() - 0.5));
      z0[1] = clamp_log(z0[1] + 1.2 * (restart_rng.uniform01() - 0.5));
    }

    Simplex s;
    const double step = 0.25;
    s.x[0] = z0;
    s.x[1] = {clamp_log(z0[0] + step), z0[1]};
    s.x[2] = {z0[0], clamp_log(z0[1] + step)};
    for (int i = 0; i < 3; ++i) s.f[i] = eval(s.x[i]);
    s.order();
    if (!std::isfinite(s.f[0])) continue;  // start point hopeless, try next
    any_finite = true;

    int evals = 3;
    bool converged = false;
    while (evals < settings.max_evals) {
      s.order();
      if (s.diameter() <= settings.rel_tol ||
          (std::isfinite(s.f[2]) &&
           s.f[2] - s.f[0] <= 1e-13 * (std::abs(s.f[0]) + 1.0))) {
        converged = true;
        break;
      }
      const Point c{0.5 * (s.x[0][0] + s.x[1][0]), 0.5 * (s.x[0][1] + s.x[1][1])};
      const Point refl{c[0] + (c[0] - s.x[2][0]), c[1] + (c[1] - s.x[2][1])};
      const double fr = eval(refl);
      ++evals;
      if (fr < s.f[0]) {
        const Point exp_{c[0] + 2.0 * (refl[0] - c[0]), c[1] + 2.0 * (refl[1] - c[1])};
        const double fe = eval(exp_);
        ++evals;
        if (fe < fr) {
          s.x[2] = exp_;
          s.f[2] = fe;
        } else {
          s.x[2] = refl;
          s.f[2] = fr;
        }
        continue;
      }
      if (fr < s.f[1]) {
        s.x[2] = refl;
        s.f[2] = fr;
        continue;
      }
      const bool outside = fr < s.f[2];
      const Point& anchor = outside ? refl : s.x[2];
      const Point contr{c[0] + 0.5 * (anchor[0] - c[0]), c[1] + 0.5 * (anchor[1] - c[1])};
      const double fc = eval(contr);
      ++evals;
      if (fc < (outside ? fr : s.f[2])) {
        s.x[2] = contr;
        s.f[2] = fc;
        continue;
      }
      // Shrink toward the best vertex.
      for (int i = 1; i < 3; ++i) {
        s.x[i] = {s.x[0][0] + 0.5 * (s.x[i][0] - s.x[0][0]),
                  s.x[0][1] + 0.5 * (s.x[i][1] - s.x[0][1])};
        s.f[i] = eval(s.x[i]);
      }
      evals += 2;
    }
    s.order();
    const double value = -s.f[0];
    if (value > best.value) {
      best.argmax = {std::exp(s.x[0][0]), std::exp(s.x[0][1])};
      best.value = value;
      best.converged = converged;
    }
  }

  best.evals = total_evals;
  if (!any_finite) {
    throw NumericalError(
        "maximize_2d: objective not finite at any starting simplex");
  }
  if (!best.converged) {
    best.message = "evaluation budget reached before simplex collapsed";
  }
  return best;
}

}  // namespace recruit
