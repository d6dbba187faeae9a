#include "recruit/snapshot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "recruit/errors.hpp"

namespace recruit {

namespace {

bool is_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

struct CentreAccumulator {
  int centre_id = 0;
  double opening = 0.0;
  double n = 0, k = 0, k_tilde = 0, l = 0;
  double t_screen = 0.0;
  std::vector<double> pending;
};

InterimSnapshot assemble(std::vector<CentreAccumulator>& acc, double window,
                         double t1) {
  const Eigen::Index m = static_cast<Eigen::Index>(acc.size());
  InterimSnapshot snap;
  snap.t1 = t1;
  snap.screening_window = window;
  snap.centre_ids.resize(m);
  snap.tau.resize(m);
  snap.n.resize(m);
  snap.k.resize(m);
  snap.k_tilde.resize(m);
  snap.l.resize(m);
  snap.nu.resize(m);
  snap.t_screen_sum.resize(m);
  snap.pending_arrivals.resize(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    auto& c = acc[i];
    std::sort(c.pending.begin(), c.pending.end());
    snap.centre_ids[i] = c.centre_id;
    snap.tau[i] = std::max(t1 - c.opening, 0.0);
    snap.n[i] = c.n;
    snap.k[i] = c.k;
    snap.k_tilde[i] = c.k_tilde;
    snap.l[i] = c.l;
    snap.nu[i] = static_cast<double>(c.pending.size());
    snap.t_screen_sum[i] = c.t_screen;
    snap.pending_arrivals[i] = std::move(c.pending);
  }
  snap.validate();
  return snap;
}

void tally(CentreAccumulator& c, double arrival, PatientStatus status,
           double last_seen) {
  c.n += 1;
  c.t_screen += last_seen - arrival;
  switch (status) {
    case PatientStatus::Randomized:
      c.k += 1;
      c.k_tilde += 1;
      break;
    case PatientStatus::LostOnArrival:
      break;
    case PatientStatus::LostInScreening:
      c.l += 1;
      c.k_tilde += 1;
      break;
    case PatientStatus::InScreening:
      c.k_tilde += 1;
      c.pending.push_back(arrival);
      break;
  }
}

}  // namespace

void InterimSnapshot::validate() const {
  const Eigen::Index m = n_centres();
  for (Eigen::Index i = 0; i < m; ++i) {
    const double lost_on_arrival = n[i] - k_tilde[i];
    if (!is_integer(n[i]) || !is_integer(k[i]) || !is_integer(k_tilde[i]) ||
        !is_integer(l[i]) || !is_integer(nu[i])) {
      throw DataError("snapshot: counts must be integers");
    }
    if (n[i] < 0 || k[i] < 0 || l[i] < 0 || nu[i] < 0 || lost_on_arrival < -1e-9) {
      throw DataError("snapshot: negative count");
    }
    if (std::abs(n[i] - (k[i] + l[i] + nu[i] + lost_on_arrival)) > 1e-9) {
      throw DataError("snapshot: count partition identity violated");
    }
    if (t_screen_sum[i] < -1e-9) throw DataError("snapshot: negative T_i");
    if (static_cast<double>(pending_arrivals[i].size()) != nu[i]) {
      throw DataError("snapshot: pending list size does not match nu");
    }
    for (double a : pending_arrivals[i]) {
      if (a > t1 + 1e-9 || a <= t1 - screening_window - 1e-9) {
        throw DataError("snapshot: pending arrival outside (t1 - R, t1]");
      }
    }
    if (tau[i] <= 0.0 && n[i] > 0) {
      throw DataError("snapshot: arrivals recorded for an unopened centre");
    }
  }
}

InterimSnapshot take_snapshot(const Trial& trial, double t1) {
  return take_snapshot(trial, trial.config.screening_window, t1);
}

InterimSnapshot take_snapshot(const Trial& trial, double screening_window,
                              double t1) {
  if (!(t1 > 0.0)) throw DataError("take_snapshot: requires t1 > 0");
  std::vector<CentreAccumulator> acc(trial.config.n_centres);
  for (int i = 0; i < trial.config.n_centres; ++i) {
    acc[i].centre_id = i;
    acc[i].opening = trial.config.opening(i);
  }
  for (const auto& p : trial.patients) {
    if (p.arrival > t1) continue;
    const PatientState s = classify_patient(p, screening_window, t1);
    tally(acc[p.centre_id], p.arrival, s.status, s.last_seen);
  }
  return assemble(acc, screening_window, t1);
}

std::vector<PatientRow> patient_rows(const Trial& trial) {
  const double horizon = trial.config.effective_horizon();
  const double window = trial.config.screening_window;
  std::vector<PatientRow> rows;
  rows.reserve(trial.patients.size() + trial.centres.size());
  std::vector<bool> seen(trial.centres.size(), false);
  for (const auto& p : trial.patients) {
    const PatientState s = classify_patient(p, window, horizon);
    PatientRow row;
    row.centre_id = p.centre_id;
    row.opening_time = trial.config.opening(p.centre_id);
    row.arrival_time = p.arrival;
    row.last_seen_time = s.last_seen;
    row.status = s.status;
    rows.push_back(row);
    seen[p.centre_id] = true;
  }
  for (const auto& c : trial.centres) {
    if (seen[c.centre_id]) continue;
    PatientRow row;
    row.centre_id = c.centre_id;
    row.opening_time = trial.config.opening(c.centre_id);
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const PatientRow& a, const PatientRow& b) {
    if (a.centre_id != b.centre_id) return a.centre_id < b.centre_id;
    return a.arrival_time.value_or(-1.0) < b.arrival_time.value_or(-1.0);
  });
  return rows;
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

void write_patient_csv(const std::vector<PatientRow>& rows, std::ostream& out) {
  out << "centre_id,opening_time,arrival_time,last_seen_time,status\n";
  for (const auto& r : rows) {
    out << r.centre_id << ',' << fmt(r.opening_time) << ',';
    if (r.arrival_time) out << fmt(*r.arrival_time);
    out << ',';
    if (r.last_seen_time) out << fmt(*r.last_seen_time);
    out << ',';
    if (r.status) out << status_name(*r.status);
    out << '\n';
  }
}

void write_patient_csv(const std::vector<PatientRow>& rows,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path);
  write_patient_csv(rows, out);
}

void write_latents_csv(const Trial& trial, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path);
  out << "centre_id,opening_time,lambda,r,theta\n";
  for (const auto& c : trial.centres) {
    out << c.centre_id << ',' << fmt(trial.config.opening(c.centre_id)) << ','
        << fmt(c.lambda) << ',' << fmt(c.r) << ',';
    if (c.theta) out << fmt(*c.theta);
    out << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError(std::string("patient table: bad ") + what + " value: " + s);
  }
}

}  // namespace

std::vector<PatientRow> read_patient_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw DataError("patient table: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split_csv_line(line);
  const std::vector<std::string> required = {"centre_id", "opening_time",
                                             "arrival_time", "last_seen_time"};
  for (std::size_t i = 0; i < required.size(); ++i) {
    if (header.size() <= i || header[i] != required[i]) {
      throw DataError("patient table: header must start with "
                      "centre_id,opening_time,arrival_time,last_seen_time");
    }
  }
  const bool has_status = header.size() > 4 && header[4] == "status";

  std::vector<PatientRow> rows;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() < 4) throw DataError("patient table: short row: " + line);
    PatientRow row;
    row.centre_id = static_cast<int>(parse_double(fields[0], "centre_id"));
    row.opening_time = parse_double(fields[1], "opening_time");
    if (!fields[2].empty()) row.arrival_time = parse_double(fields[2], "arrival_time");
    if (!fields[3].empty()) {
      row.last_seen_time = parse_double(fields[3], "last_seen_time");
    }
    if (has_status && fields.size() > 4 && !fields[4].empty()) {
      row.status = status_from_name(fields[4]);
    }
    if (row.arrival_time.has_value() != row.last_seen_time.has_value()) {
      throw DataError("patient table: arrival/last_seen must both be set or empty");
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<PatientRow> read_patient_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open patient table: " + path);
  return read_patient_csv(in);
}

namespace {

constexpr double kTimeEps = 1e-9;

PatientStatus derive_status(const PatientRow& row, double window, double t1) {
  const double arrival = *row.arrival_time;
  const double last_seen = *row.last_seen_time;
  if (!(window > 0.0)) {
    throw DataError(
        "patient table: status column required when the screening window is 0 "
        "(arrival == last_seen is ambiguous)");
  }
  if (std::abs(last_seen - arrival) <= kTimeEps) return PatientStatus::LostOnArrival;
  if (std::abs(last_seen - (arrival + window)) <= kTimeEps) {
    return PatientStatus::Randomized;
  }
  if (last_seen < arrival + window) {
    // Inside the window: either still pending at the observation time or lost.
    if (last_seen >= t1 - kTimeEps) return PatientStatus::InScreening;
    return PatientStatus::LostInScreening;
  }
  throw DataError("patient table: last_seen after arrival + screening window");
}

}  // namespace

InterimSnapshot snapshot_from_rows(const std::vector<PatientRow>& rows,
                                   double screening_window, double t1) {
  if (!(t1 > 0.0)) throw DataError("snapshot_from_rows: requires t1 > 0");
  std::map<int, CentreAccumulator> centres;
  for (const auto& row : rows) {
    auto [it, inserted] = centres.try_emplace(row.centre_id);
    if (inserted) {
      it->second.centre_id = row.centre_id;
      it->second.opening = row.opening_time;
    } else if (std::abs(it->second.opening - row.opening_time) > kTimeEps) {
      throw DataError("patient table: inconsistent opening time for centre " +
                      std::to_string(row.centre_id));
    }
    if (!row.arrival_time) continue;
    const double arrival = *row.arrival_time;
    if (arrival > t1) continue;
    double last_seen = *row.last_seen_time;
    if (last_seen < arrival - kTimeEps) {
      throw DataError("patient table: last_seen before arrival");
    }
    PatientStatus status;
    if (last_seen > t1 + kTimeEps) {
      // Outcome resolved only after t1; at t1 the patient was still pending.
      if (!(screening_window > 0.0)) {
        throw DataError("patient table: last_seen after t1 with no screening window");
      }
      status = PatientStatus::InScreening;
      last_seen = t1;
    } else {
      status = row.status ? *row.status : derive_status(row, screening_window, t1);
    }
    if (status == PatientStatus::InScreening) {
      last_seen = t1;
      if (arrival <= t1 - screening_window - kTimeEps) {
        throw DataError("patient table: pending patient arrived before t1 - R");
      }
    }
    tally(it->second, arrival, status, last_seen);
  }
  std::vector<CentreAccumulator> acc;
  acc.reserve(centres.size());
  for (auto& [id, c] : centres) acc.push_back(std::move(c));
  return assemble(acc, screening_window, t1);
}

}  // namespace recruit
