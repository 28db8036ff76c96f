#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpt/dataset.hpp"

namespace wpt {

/// Synthetic charging-session generator: a deterministic desk-scale stand-in
/// for lab monitoring data. Consumer level at minute t of a clean session is
///   baseline + base_rate * efficiency(distance) * t + gaussian noise,
/// and a configurable number of sessions carry a persistent additive spike
/// from a random minute onward (anomalous charging processes).
struct GeneratorConfig {
  std::vector<double> distances_cm{1.0, 1.5, 2.0};
  int sessions_per_distance = 5;
  int duration_min = 30;  // monitored steps per session (records = duration_min + 1)
  double mt_min = 1.0;    // minutes between records; mt_min * 60 must be integral
  double base_rate_mah_per_min = 10.0;  // transfer rate at the 1 cm reference distance
  double decay_beta = 0.8;              // per-cm exponential efficiency decay, >= 0
  double noise_sigma_mah = 2.0;         // gaussian reading noise
  int anomaly_session_count = 6;        // sessions to corrupt, <= total sessions
  double anomaly_spike_mah = 400.0;     // additive spike magnitude
  std::uint64_t seed = 7;
};

struct GeneratedSessions {
  std::vector<Session> sessions;                   // generation order
  std::vector<std::string> anomalous_session_ids;  // which sessions carry spikes
};

/// Throws invalid_config if any field is out of range.
void validate(const GeneratorConfig& config);

/// exp(-decay_beta * (distance_cm - 1)), clamped to (0, 1]. Strictly
/// decreasing in distance for decay_beta > 0. Throws non_positive_distance.
double efficiency(double distance_cm, double decay_beta);

/// Deterministic: identical seed + config give bit-identical sessions.
/// Produces |distances| * sessions_per_distance sessions of duration_min + 1
/// records each (t=0 baseline included); exactly anomaly_session_count of
/// them are spiked.
GeneratedSessions generate(const GeneratorConfig& config);

}  // namespace wpt
