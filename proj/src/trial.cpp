#include "recruit/trial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "recruit/errors.hpp"

namespace recruit {

namespace {

// Substream tags. Fixed constants so stream layouts never shift between runs.
constexpr std::uint64_t kCentreTag = 101;

}  // namespace

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::A1: return "A1";
    case Variant::A2: return "A2";
    case Variant::B1: return "B1";
    case Variant::B2: return "B2";
    case Variant::B3: return "B3";
  }
  return "?";
}

Variant variant_from_name(const std::string& name) {
  if (name == "A1" || name == "A.1") return Variant::A1;
  if (name == "A2" || name == "A.2") return Variant::A2;
  if (name == "B1" || name == "B.1") return Variant::B1;
  if (name == "B2" || name == "B.2") return Variant::B2;
  if (name == "B3" || name == "B.3") return Variant::B3;
  throw ConfigError("unknown model tag: " + name);
}

bool has_screening(Variant v) {
  return v == Variant::B1 || v == Variant::B2 || v == Variant::B3;
}

Variant variant_of(const DropoutSpec& d) {
  return std::visit(
      [](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, DropoutA1>) return Variant::A1;
        else if constexpr (std::is_same_v<T, DropoutA2>) return Variant::A2;
        else if constexpr (std::is_same_v<T, DropoutB1>) return Variant::B1;
        else if constexpr (std::is_same_v<T, DropoutB2>) return Variant::B2;
        else return Variant::B3;
      },
      d);
}

std::string status_name(PatientStatus s) {
  switch (s) {
    case PatientStatus::Randomized: return "RANDOMIZED";
    case PatientStatus::LostOnArrival: return "LOST_ON_ARRIVAL";
    case PatientStatus::LostInScreening: return "LOST_IN_SCREENING";
    case PatientStatus::InScreening: return "IN_SCREENING";
  }
  return "?";
}

PatientStatus status_from_name(const std::string& name) {
  if (name == "RANDOMIZED") return PatientStatus::Randomized;
  if (name == "LOST_ON_ARRIVAL") return PatientStatus::LostOnArrival;
  if (name == "LOST_IN_SCREENING") return PatientStatus::LostInScreening;
  if (name == "IN_SCREENING") return PatientStatus::InScreening;
  throw DataError("unknown patient status: " + name);
}

double expected_stay_probability(const DropoutSpec& d) {
  return std::visit(
      [](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, DropoutA1> || std::is_same_v<T, DropoutB1> ||
                      std::is_same_v<T, DropoutB2>) {
          return spec.r;
        } else {
          return spec.psi.mean();
        }
      },
      d);
}

double expected_screening_survival(const DropoutSpec& d, double window) {
  if (window <= 0.0) return 1.0;
  return std::visit(
      [window](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, DropoutB1>) {
          return std::exp(-spec.theta * window);
        } else if constexpr (std::is_same_v<T, DropoutB2> ||
                             std::is_same_v<T, DropoutB3>) {
          // E[e^{-theta R}] under Ga(shape, rate).
          return std::exp(-spec.theta_prior.shape *
                          std::log1p(window / spec.theta_prior.rate));
        } else {
          return 1.0;
        }
      },
      d);
}

double theoretical_duration(const TrialConfig& config) {
  const double rate = config.n_centres * config.mu() *
                      expected_stay_probability(config.dropout) *
                      expected_screening_survival(config.dropout,
                                                  config.screening_window);
  if (!(rate > 0.0)) {
    throw ConfigError("theoretical_duration: expected randomization rate is zero");
  }
  return config.screening_window + config.target / rate;
}

double TrialConfig::effective_horizon() const {
  return horizon > 0.0 ? horizon : 4.0 * theoretical_duration(*this);
}

void TrialConfig::validate() const {
  if (n_centres < 1) throw ConfigError("config: n_centres must be >= 1");
  if (target < 1) throw ConfigError("config: target must be >= 1");
  try {
    recruitment.validate("config.recruitment");
    std::visit(
        [](const auto& spec) {
          using T = std::decay_t<decltype(spec)>;
          if constexpr (std::is_same_v<T, DropoutA1>) {
            if (!(spec.r >= 0.0 && spec.r <= 1.0))
              throw std::domain_error("dropout A1: r must be in [0,1]");
          } else if constexpr (std::is_same_v<T, DropoutA2>) {
            spec.psi.validate("dropout A2 psi");
          } else if constexpr (std::is_same_v<T, DropoutB1>) {
            if (!(spec.r >= 0.0 && spec.r <= 1.0))
              throw std::domain_error("dropout B1: r must be in [0,1]");
            if (!(spec.theta > 0.0))
              throw std::domain_error("dropout B1: theta must be > 0");
          } else if constexpr (std::is_same_v<T, DropoutB2>) {
            if (!(spec.r >= 0.0 && spec.r <= 1.0))
              throw std::domain_error("dropout B2: r must be in [0,1]");
            spec.theta_prior.validate("dropout B2 theta_prior");
          } else {
            spec.psi.validate("dropout B3 psi");
            spec.theta_prior.validate("dropout B3 theta_prior");
          }
        },
        dropout);
  } catch (const std::domain_error& e) {
    throw ConfigError(e.what());
  }
  const bool screening = has_screening(variant_of(dropout));
  if (!screening && screening_window != 0.0) {
    throw ConfigError("config: screening_window must be 0 for A-variant models");
  }
  if (screening && !(screening_window > 0.0)) {
    throw ConfigError("config: screening_window must be > 0 for B-variant models");
  }
  if (!centre_openings.empty() &&
      static_cast<int>(centre_openings.size()) != n_centres) {
    throw ConfigError("config: centre_openings length must equal n_centres");
  }
  double max_u = 0.0;
  for (double u : centre_openings) {
    if (!(u >= 0.0)) throw ConfigError("config: centre openings must be >= 0");
    max_u = std::max(max_u, u);
  }
  if (horizon > 0.0 && horizon <= max_u) {
    throw ConfigError("config: horizon must exceed every centre opening time");
  }
}

Trial generate_trial(const TrialConfig& config, RngHandle rng) {
  config.validate();
  const double horizon = config.effective_horizon();
  const Variant variant = variant_of(config.dropout);
  const bool screening = has_screening(variant);

  Trial trial;
  trial.config = config;
  trial.config.horizon = horizon;
  trial.centres.reserve(config.n_centres);

  for (int i = 0; i < config.n_centres; ++i) {
    Rng centre_rng(rng.substream(kCentreTag, static_cast<std::uint64_t>(i)));
    CentreLatents latents;
    latents.centre_id = i;
    latents.lambda = sample_gamma(config.recruitment, centre_rng);
    std::visit(
        [&](const auto& spec) {
          using T = std::decay_t<decltype(spec)>;
          if constexpr (std::is_same_v<T, DropoutA1>) {
            latents.r = spec.r;
          } else if constexpr (std::is_same_v<T, DropoutA2>) {
            latents.r = sample_beta(spec.psi, centre_rng);
          } else if constexpr (std::is_same_v<T, DropoutB1>) {
            latents.r = spec.r;
            latents.theta = spec.theta;
          } else if constexpr (std::is_same_v<T, DropoutB2>) {
            latents.r = spec.r;
            latents.theta = sample_gamma(spec.theta_prior, centre_rng);
          } else {
            latents.r = sample_beta(spec.psi, centre_rng);
            latents.theta = sample_gamma(spec.theta_prior, centre_rng);
          }
        },
        config.dropout);

    double t = config.opening(i);
    for (;;) {
      t += sample_exponential(latents.lambda, centre_rng);
      if (t > horizon) break;
      PatientRecord p;
      p.centre_id = i;
      p.arrival = t;
      p.chi = sample_bernoulli(1.0 - latents.r, centre_rng) != 0;
      if (screening) p.z = sample_exponential(*latents.theta, centre_rng);
      trial.patients.push_back(p);
    }
    trial.centres.push_back(latents);
  }
  return trial;
}

PatientState classify_patient(const PatientRecord& p, double screening_window,
                              double t1) {
  if (p.arrival > t1) {
    throw DataError("classify_patient: arrival after interim time t1");
  }
  if (p.chi) return {PatientStatus::LostOnArrival, p.arrival};
  if (screening_window <= 0.0 || !p.z.has_value()) {
    // No screening delay: survivors randomize at arrival.
    return {PatientStatus::Randomized, p.arrival};
  }
  const double z = *p.z;
  const double in_window = std::min(screening_window, t1 - p.arrival);
  if (z <= in_window) return {PatientStatus::LostInScreening, p.arrival + z};
  if (p.arrival <= t1 - screening_window) {
    return {PatientStatus::Randomized, p.arrival + screening_window};
  }
  return {PatientStatus::InScreening, t1};
}

std::vector<double> randomization_times(const Trial& trial) {
  const double window = trial.config.screening_window;
  std::vector<double> times;
  times.reserve(trial.patients.size());
  for (const auto& p : trial.patients) {
    if (p.chi) continue;
    if (p.z.has_value() && *p.z <= window) continue;
    times.push_back(p.arrival + window);
  }
  std::sort(times.begin(), times.end());
  return times;
}

double recruitment_stop_time(const Trial& trial) {
  const auto times = randomization_times(trial);
  const std::size_t target = static_cast<std::size_t>(trial.config.target);
  if (times.size() < target) return std::numeric_limits<double>::infinity();
  const double t = times[target - 1];
  if (t > trial.config.effective_horizon()) {
    return std::numeric_limits<double>::infinity();
  }
  return t;
}

}  // namespace recruit
