#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wpt/dataset.hpp"

namespace wpt {

struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> a;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
  double* row(std::size_t i) { return a.data() + i * cols; }
  const double* row(std::size_t i) const { return a.data() + i * cols; }
  double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Fully connected regressor: 2 inputs, exactly three ReLU hidden layers,
/// one identity output.
struct MlpArchitecture {
  std::vector<int> layer_sizes{2, 32, 32, 32, 1};  // [2, h1, h2, h3, 1], widths >= 1
};

/// Throws shape_mismatch unless layer_sizes is [2, h1, h2, h3, 1].
void validate(const MlpArchitecture& arch);

/// Per-feature standardization fitted on training data; a zero-stddev
/// (constant) feature standardizes to 0.
struct FeatureScaler {
  std::vector<double> mean;
  std::vector<double> stddev;  // population stddev; 0 marks a constant feature
};

enum class Optimizer { adam, sgd };

struct TrainConfig {
  int epochs = 2000;
  int batch_size = 32;
  double learning_rate = 1e-3;
  Optimizer optimizer = Optimizer::adam;
  double beta1 = 0.9, beta2 = 0.999, epsilon = 1e-8;
  std::uint64_t seed = 1;
  bool shuffle = true;
};

struct MlpModel {
  MlpArchitecture architecture;
  std::vector<Matrix> weights;  // weights[l] is layer_sizes[l+1] x layer_sizes[l]
  std::vector<std::vector<double>> biases;
  FeatureScaler input_scaler;
  TrainConfig train_config;  // echo of how the model was trained
  /// loss_history[0] is the pre-training MSE; one entry per epoch follows.
  std::vector<double> loss_history;
};

/// Standardize with the stored scaler, then affine+ReLU through the hidden
/// layers and an identity output. Throws shape_mismatch on inconsistent
/// weight shapes.
double forward(const MlpModel& model, double distance_cm, double duration_min);

/// Mini-batch backpropagation on MSE (Ah^2). Weights start scaled-uniform
/// with bound sqrt(6 / (fan_in + fan_out)), biases zero, seeded; the shuffle
/// stream is pinned, so identical seed + data + config reproduce the final
/// weights bit-for-bit. Throws empty_dataset, non_finite_label,
/// invalid_config (batch larger than dataset) and diverged_loss (non-finite
/// epoch loss, the signature of a bad learning rate).
MlpModel train(const Dataset& data, const MlpArchitecture& arch, const TrainConfig& cfg);

/// Max over parameters of |g_analytic - g_numeric| / max(1e-8, |ga| + |gn|),
/// with central finite differences at step 1e-5 on the batch MSE. Pure: the
/// model is not modified. Throws empty_vector on an empty batch.
double gradient_check(const MlpModel& model, const std::vector<TrainingPoint>& batch);

}  // namespace wpt
