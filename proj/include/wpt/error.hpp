#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace wpt {

enum class errc {
  // csv / dataset
  malformed_row,
  non_monotone_timestamp,
  irregular_interval,
  non_finite,
  empty_session,
  empty_dataset,
  // generator
  invalid_config,
  non_positive_distance,
  // outlier removal
  too_few_points,
  invalid_params,
  all_sessions_rejected,
  // models
  non_finite_label,
  empty_grid,
  shape_mismatch,
  diverged_loss,
  model_mismatch,
  // evaluation
  empty_vector,
  k_too_small,
  k_too_large,
  // io
  io_failure,
};

const char* errc_name(errc code);

/// Library-wide error type. Parse errors carry the offending session id and
/// 1-based line number so CLI diagnostics can point at the input.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Error(errc code, const std::string& message, std::string session_id, long line)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message + " (session '" +
                           session_id + "', line " + std::to_string(line) + ")"),
        code_(code),
        session_id_(std::move(session_id)),
        line_(line) {}

  errc code() const noexcept { return code_; }
  const std::optional<std::string>& session_id() const noexcept { return session_id_; }
  const std::optional<long>& line() const noexcept { return line_; }

 private:
  errc code_;
  std::optional<std::string> session_id_;
  std::optional<long> line_;
};

}  // namespace wpt
