#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wpt/dataset.hpp"

namespace wpt {

struct PredictionVector {
  std::vector<double> predicted;  // Ah
  std::vector<double> truth;      // Ah
};

/// sqrt(sum((predicted - truth)^2) / n). Throws empty_vector, non_finite,
/// shape_mismatch.
double rmse(const PredictionVector& v);

struct FoldSplit {
  std::vector<std::vector<std::size_t>> folds;  // disjoint, exhaustive over 0..n-1
  std::uint64_t seed = 0;
};

/// Seeded shuffle of 0..n-1 then contiguous chunks; the first n % k folds
/// get one extra element. Requires 2 <= k <= n (k_too_small / k_too_large).
FoldSplit kfold_split(std::size_t n, int k, std::uint64_t seed);

/// A trained model reduced to its prediction function (distance, duration) -> Ah.
using Predictor = std::function<double(double distance_cm, double duration_min)>;
/// Trains on a dataset and yields a predictor.
using ModelRecipe = std::function<Predictor(const Dataset& train)>;

/// Per fold: train the recipe on every point outside the fold, score RMSE on
/// the fold. Fold order fixed; training errors are rethrown tagged with the
/// fold index.
std::vector<double> cross_validate(const Dataset& data, const ModelRecipe& recipe,
                                   const FoldSplit& split);
std::vector<double> cross_validate(const Dataset& data, const ModelRecipe& recipe, int k,
                                   std::uint64_t seed);

struct BoxplotStats {
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0;
  double whisker_low = 0, whisker_high = 0;  // furthest data within 1.5 IQR of the box
  std::vector<double> outliers;              // beyond the whiskers, ascending
};

/// Quartiles by linear interpolation at position (n-1)*p. Throws empty_vector.
BoxplotStats boxplot_stats(std::vector<double> values);

struct ModelEval {
  std::string name;
  std::vector<double> fold_rmse;  // Ah, one per fold
  BoxplotStats boxplot;
};

struct EvalReport {
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<ModelEval> models;
  std::string winner_by_median;  // first listed model wins ties
};

struct NamedRecipe {
  std::string name;
  ModelRecipe recipe;
};

/// Evaluates every recipe against one shared FoldSplit so the comparison is
/// fair fold-for-fold.
EvalReport compare_models(const Dataset& data, const std::vector<NamedRecipe>& recipes, int k,
                          std::uint64_t seed);

}  // namespace wpt
