#ifndef RECRUIT_TRIAL_HPP
#define RECRUIT_TRIAL_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "recruit/distributions.hpp"
#include "recruit/rng.hpp"

namespace recruit {

enum class Variant { A1, A2, B1, B2, B3 };

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);
/// True for B.1/B.2/B.3 (screening-period dropout present).
bool has_screening(Variant v);

// Dropout model parameters. r is the probability of staying at arrival;
// Z ~ Exp(theta) is the screening-dropout clock where applicable.
struct DropoutA1 {
  double r = 0.8;
};
struct DropoutA2 {
  BetaParams psi;  // r_i ~ Beta(psi1, psi2)
};
struct DropoutB1 {
  double r = 0.8;
  double theta = 2.0;  // shared across centres
};
struct DropoutB2 {
  double r = 0.8;
  GammaParams theta_prior;  // theta_i ~ Ga(alpha2, beta2)
};
struct DropoutB3 {
  BetaParams psi;
  GammaParams theta_prior;
};

using DropoutSpec = std::variant<DropoutA1, DropoutA2, DropoutB1, DropoutB2, DropoutB3>;

Variant variant_of(const DropoutSpec& d);

struct TrialConfig {
  int n_centres = 1;
  int target = 1;                       // randomized patients to recruit
  GammaParams recruitment;              // lambda_i ~ Ga(alpha, beta); mu = alpha/beta
  double screening_window = 0.0;        // R; must be 0 for A-variants
  DropoutSpec dropout = DropoutA1{};
  std::vector<double> centre_openings;  // u_i; empty = all open at 0
  double horizon = 0.0;                 // <= 0 picks 4x theoretical duration

  double mu() const { return recruitment.mean(); }
  double opening(int centre) const {
    return centre_openings.empty() ? 0.0 : centre_openings[centre];
  }
  double effective_horizon() const;
  void validate() const;  // throws ConfigError
};

/// Expected duration from the configured means: R + target / (M mu E[r] E[surv]).
double theoretical_duration(const TrialConfig& config);

struct CentreLatents {
  int centre_id = 0;
  double lambda = 0.0;
  double r = 1.0;
  std::optional<double> theta;  // present for B.2/B.3; B.1 carries the shared theta
};

struct PatientRecord {
  int centre_id = 0;
  double arrival = 0.0;
  bool chi = false;         // true = lost immediately upon arrival
  std::optional<double> z;  // screening-dropout clock; absent for A-variants
};

enum class PatientStatus { Randomized, LostOnArrival, LostInScreening, InScreening };

std::string status_name(PatientStatus s);
PatientStatus status_from_name(const std::string& name);

struct PatientState {
  PatientStatus status;
  double last_seen;  // s_ij in [arrival, min(arrival + R, t1)]
};

struct Trial {
  TrialConfig config;
  std::vector<CentreLatents> centres;
  std::vector<PatientRecord> patients;  // ordered by (centre, arrival)
};

/// Sample centre latents and all patient-level variables up to the horizon.
/// Per-centre substreams keep centres independent of each other and of M.
Trial generate_trial(const TrialConfig& config, RngHandle rng);

/// Status of one patient at interim time t1 (requires arrival <= t1).
PatientState classify_patient(const PatientRecord& p, double screening_window,
                              double t1);

/// First time the cumulative randomized count reaches config.target;
/// +infinity when the horizon is exhausted first.
double recruitment_stop_time(const Trial& trial);

/// Sorted randomization event times (arrival + R for surviving patients).
std::vector<double> randomization_times(const Trial& trial);

}  // namespace recruit

#endif
