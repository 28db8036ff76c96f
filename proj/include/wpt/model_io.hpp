#pragma once

#include <string>

#include "wpt/eval.hpp"
#include "wpt/gbrt.hpp"
#include "wpt/mlp.hpp"
#include "wpt/outlier.hpp"

// JSON persistence for models and reports. Layouts are version-tagged; key
// order is pinned (insertion order) so identical inputs serialize to
// identical bytes.

namespace wpt {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kGbrtFormat = "wpt-gbrt";
inline constexpr const char* kMlpFormat = "wpt-mlp";
inline constexpr const char* kEvalReportFormat = "wpt-eval-report";
inline constexpr const char* kCleaningReportFormat = "wpt-cleaning-report";

std::string gbrt_to_json(const GbrtModel& m);
GbrtModel gbrt_from_json(const std::string& text);  // throws model_mismatch

std::string mlp_to_json(const MlpModel& m);
MlpModel mlp_from_json(const std::string& text);  // throws model_mismatch

enum class ModelKind { gbrt, mlp };
/// Inspects the "format" tag; throws model_mismatch for anything else.
ModelKind peek_model_kind(const std::string& text);

std::string eval_report_to_json(const EvalReport& r);
EvalReport eval_report_from_json(const std::string& text);

/// Box-plot geometry as `model,stat,value` rows (9 significant digits).
std::string boxplot_csv(const EvalReport& r);

std::string cleaning_report_to_json(const CleaningResult& r);

std::string read_file(const std::string& path);                       // throws io_failure
void write_file(const std::string& path, const std::string& content); // throws io_failure

}  // namespace wpt
