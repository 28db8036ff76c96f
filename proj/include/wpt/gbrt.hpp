#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpt/dataset.hpp"

namespace wpt {

/// Gradient-boosted regression trees with second-order squared-error
/// boosting and exact greedy split search (dataset sizes here are at most a
/// few hundred points, so no histogram approximation).
struct GbrtParams {
  int n_rounds = 50;
  double eta = 0.1;        // shrinkage, (0, 1]
  int max_depth = 3;
  double lambda = 1.0;     // L2 leaf regularizer, >= 0
  double gamma = 0.0;      // split penalty, >= 0
  double min_child_weight = 1.0;  // minimum hessian sum per child, >= 0
};

/// Flat binary tree; root at index 0, leaves have left == right == -1.
struct TreeNode {
  int feature = -1;        // 0 = distance_cm, 1 = duration_min
  double threshold = 0.0;  // go left iff value < threshold (ties route right)
  double gain = 0.0;       // split gain, kept for introspection
  int left = -1;
  int right = -1;
  double weight = 0.0;     // leaf value, Ah
};

struct RegressionTree {
  std::vector<TreeNode> nodes;
  double value_at(double distance_cm, double duration_min) const;
};

struct GbrtModel {
  GbrtParams params;
  double base_score = 0.0;  // mean training label, Ah
  std::vector<RegressionTree> trees;
  std::vector<std::string> feature_names{"distance_cm", "duration_min"};
  std::vector<double> train_mse;  // per-round training MSE, non-increasing
};

/// Squared-error boosting: per round g_i = yhat_i - y_i, h_i = 1; splits
/// maximize 0.5*(GL^2/(HL+l) + GR^2/(HR+l) - G^2/(H+l)) - gamma over all
/// (feature, midpoint between consecutive sorted unique values) candidates;
/// a split is accepted only if its gain is > 0 and both children carry at
/// least min_child_weight hessian. Leaf weight is -G/(H+lambda).
/// Throws empty_dataset, non_finite_label, invalid_params.
GbrtModel fit_gbrt(const Dataset& data, const GbrtParams& params);

/// base_score + eta * sum of routed leaf weights.
double predict_gbrt(const GbrtModel& model, double distance_cm, double duration_min);

/// Value lists per hyperparameter; an empty list means "use the default".
/// Combinations are enumerated with values sorted ascending, nesting in the
/// documented key order n_rounds, eta, max_depth, lambda, gamma,
/// min_child_weight, which also defines the tie-break (first minimum wins).
struct GbrtGrid {
  std::vector<int> n_rounds;
  std::vector<double> eta;
  std::vector<int> max_depth;
  std::vector<double> lambda;
  std::vector<double> gamma;
  std::vector<double> min_child_weight;

  static GbrtGrid default_grid();  // depth {2,3,4}, eta {0.1,0.3}, rounds {50,100}, lambda {0,1}
};

struct GridComboResult {
  GbrtParams params;
  std::vector<double> fold_rmse;
  double mean_rmse = 0.0;
};

struct GridSearchResult {
  GbrtParams best;
  std::vector<GridComboResult> combos;  // enumeration order
};

/// Evaluates every combination with k-fold CV on one shared fold split.
/// Throws empty_grid when every value list is empty.
GridSearchResult grid_search(const Dataset& data, const GbrtGrid& grid, int k,
                             std::uint64_t seed);

}  // namespace wpt
