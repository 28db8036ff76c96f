#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wpt {

/// One timestamped battery reading pair (consumer + provider) in a session.
struct MonitoringRecord {
  std::string session_id;
  std::int64_t timestamp_s = 0;  // seconds since session start, >= 0
  double consumer_level_mah = 0.0;
  double consumer_level_pct = 0.0;  // [0, 100]
  double provider_level_mah = 0.0;
  double provider_level_pct = 0.0;  // [0, 100]
};

/// Ordered series of records at a fixed coil distance, spaced mt_min apart.
/// Invariants: records non-empty, timestamps strictly increasing, consecutive
/// gaps exactly mt_min * 60 seconds.
struct Session {
  std::string session_id;
  double coil_distance_cm = 0.0;  // > 0
  double mt_min = 1.0;            // monitoring interval, minutes > 0
  std::vector<MonitoringRecord> records;
  double baseline_consumer_mah = 0.0;  // consumer level at session start
};

/// One regression sample: features (distance, duration), label in Ah.
/// received_ah may be negative (consumer drained); such points are kept.
struct TrainingPoint {
  double distance_cm = 0.0;
  double duration_min = 0.0;  // > 0, a multiple of the source session's mt_min
  double received_ah = 0.0;
  std::string session_id;  // provenance
};

struct Dataset {
  std::vector<TrainingPoint> points;
  std::vector<std::string> provenance;  // source session ids
  int schema_version = 1;
};

inline constexpr const char* kMonitoringCsvHeader =
    "session_id,timestamp_s,distance_cm,consumer_mah,consumer_pct,provider_mah,provider_pct";
inline constexpr const char* kPointsCsvHeader = "distance_cm,duration_min,received_ah";

/// Parses the monitoring CSV (header above, UTF-8, LF or CRLF). One Session
/// per distinct session_id, in order of first appearance; records sorted by
/// timestamp. Throws Error with codes malformed_row, non_monotone_timestamp
/// or irregular_interval, each naming session id and line number.
std::vector<Session> parse_monitoring_csv(std::istream& in);
std::vector<Session> parse_monitoring_csv(const std::string& text);

/// Canonical serialization: LF newlines, shortest round-trip float format.
/// Field values survive a serialize/parse round trip bit-exactly.
std::string serialize_monitoring_csv(const std::vector<Session>& sessions);

/// mAh -> Ah, i.e. value / 1000. Throws non_finite for non-finite input.
double mah_to_ah(double value_mah);

/// One TrainingPoint per record with timestamp_s > 0: duration = t/60,
/// label = (consumer level - baseline) / 1000, distance copied. The t=0
/// baseline record produces no point. Throws empty_session.
std::vector<TrainingPoint> extract_training_points(const Session& session);

/// extract_training_points over all sessions; provenance lists session ids.
Dataset make_dataset(const std::vector<Session>& sessions);

/// Training-point CSV (header kPointsCsvHeader), same conventions as above.
Dataset parse_points_csv(std::istream& in);
Dataset parse_points_csv(const std::string& text);
std::string serialize_points_csv(const Dataset& ds);

/// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

}  // namespace wpt
