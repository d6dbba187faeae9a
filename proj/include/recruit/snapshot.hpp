#ifndef RECRUIT_SNAPSHOT_HPP
#define RECRUIT_SNAPSHOT_HPP

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "recruit/trial.hpp"

namespace recruit {

/// Per-centre sufficient statistics observed at interim time t1.
/// Column arrays are indexed by centre; counts are stored as doubles but
/// hold integers (validated). pending_arrivals[i] lists the arrival times
/// of centre i's patients still in screening (the set Omega_i).
struct InterimSnapshot {
  double t1 = 0.0;
  double screening_window = 0.0;  // R

  std::vector<int> centre_ids;
  Eigen::ArrayXd tau;           // exposure t1 - u_i, floored at 0
  Eigen::ArrayXd n;             // arrivals by t1
  Eigen::ArrayXd k;             // randomized by t1
  Eigen::ArrayXd k_tilde;       // not lost immediately upon arrival
  Eigen::ArrayXd l;             // lost during screening
  Eigen::ArrayXd nu;            // still in screening (|Omega_i|)
  Eigen::ArrayXd t_screen_sum;  // T_i = sum_j (s_ij - t_ij)
  std::vector<std::vector<double>> pending_arrivals;

  Eigen::Index n_centres() const { return tau.size(); }
  double n_total() const { return n.sum(); }
  double k_total() const { return k.sum(); }
  double k_tilde_total() const { return k_tilde.sum(); }
  double l_total() const { return l.sum(); }
  double nu_total() const { return nu.sum(); }
  double t_screen_total() const { return t_screen_sum.sum(); }

  /// Check count identities (n = k + l + nu + lost-on-arrival, integrality,
  /// pending arrivals within (t1 - R, t1]). Throws DataError on violation.
  void validate() const;
};

InterimSnapshot take_snapshot(const Trial& trial, double t1);
InterimSnapshot take_snapshot(const Trial& trial, double screening_window, double t1);

/// One row of the flat patient table (the CSV interchange format).
/// Rows with no arrival mark a centre with zero patients so that centre
/// exposures survive the round trip.
struct PatientRow {
  int centre_id = 0;
  double opening_time = 0.0;
  std::optional<double> arrival_time;
  std::optional<double> last_seen_time;
  std::optional<PatientStatus> status;
};

/// Patient table of a generated trial, with statuses evaluated at the horizon.
std::vector<PatientRow> patient_rows(const Trial& trial);

void write_patient_csv(const std::vector<PatientRow>& rows, std::ostream& out);
void write_patient_csv(const std::vector<PatientRow>& rows, const std::string& path);
void write_latents_csv(const Trial& trial, const std::string& path);

std::vector<PatientRow> read_patient_csv(std::istream& in);
std::vector<PatientRow> read_patient_csv(const std::string& path);

/// Rebuild the interim snapshot at t1 from a patient table. Statuses in the
/// table may refer to any observation time >= t1; rows whose last_seen falls
/// after t1 are rewound to IN_SCREENING at t1. A missing status column is
/// derived from arrival/last_seen geometry, which requires R > 0.
InterimSnapshot snapshot_from_rows(const std::vector<PatientRow>& rows,
                                   double screening_window, double t1);

}  // namespace recruit

#endif
