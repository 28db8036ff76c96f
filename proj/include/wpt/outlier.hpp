#pragma once

#include <string>
#include <vector>

#include "wpt/dataset.hpp"

namespace wpt {

/// Per-session reduction used for outlier detection: a whole charging
/// process collapses to (coil distance, end-to-end battery increase).
struct SessionSummary {
  std::string session_id;
  double distance_cm = 0.0;
  double total_increase_mah = 0.0;  // final consumer level minus baseline
};

struct DbscanParams {
  double eps = 0.9;  // neighborhood radius in standardized units, > 0
  int min_pts = 3;   // neighbors (self included) making a core point, >= 1
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr int kNoise = -1;

struct DbscanLabeling {
  std::vector<int> labels;  // cluster id >= 0 or kNoise, one per input point
  int cluster_count = 0;    // cluster ids are contiguous from 0
};

/// One summary per session, order preserved. Throws empty_session.
std::vector<SessionSummary> summarize_sessions(const std::vector<Session>& sessions);

/// Per-dimension z-score with population stddev; a zero-variance dimension
/// maps to all zeros. Throws too_few_points for fewer than 2 points.
std::vector<Vec2> standardize(const std::vector<Vec2>& points);

/// Classic DBSCAN with Euclidean distance (neighborhoods compare squared
/// distance against eps^2). A point is core iff its eps-neighborhood,
/// itself included, holds at least min_pts points. Clusters are grown in
/// index order, so border points join the first discovered adjacent cluster
/// and the labeling is deterministic given input order.
DbscanLabeling dbscan(const std::vector<Vec2>& points, const DbscanParams& params);

struct CleaningResult {
  std::vector<Session> kept_sessions;  // input order preserved
  std::vector<std::string> rejected_session_ids;
  DbscanParams params;
};

/// summarize -> standardize -> dbscan; sessions whose summary lands in NOISE
/// are rejected wholesale. Throws all_sessions_rejected if nothing survives
/// and too_few_points for fewer than 2 sessions.
CleaningResult clean_dataset(const std::vector<Session>& sessions, const DbscanParams& params);

}  // namespace wpt
