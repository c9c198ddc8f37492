// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0
//
// From-scratch multilayer perceptron (one hidden layer, tan-sigmoid on both
// layers) trained by backpropagation to map desired-beam descriptors to
// element phases.

#ifndef BEAMSYNTH_MLP_HPP
#define BEAMSYNTH_MLP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "beamsynth/array.hpp"
#include "beamsynth/dataset.hpp"

namespace beamsynth {

struct TrainingPattern {
  std::vector<double> input;
  std::vector<double> target;
};

using TrainingSet = std::vector<TrainingPattern>;

/// One-hidden-layer perceptron, y = tanh(Wo * tanh(Wh * x + bh) + bo).
/// Weight matrices are row-major over the destination layer.
struct Mlp {
  int n_in = 0;
  int n_hidden = 0;
  int n_out = 0;
  std::vector<double> hidden_w;  // n_hidden x n_in
  std::vector<double> hidden_b;  // n_hidden
  std::vector<double> output_w;  // n_out x n_hidden
  std::vector<double> output_b;  // n_out

  Mlp() = default;
  Mlp(int in, int hidden, int out);

  /// Seeded uniform [-0.5, 0.5] initialization; draw order is hidden weights,
  /// hidden biases, output weights, output biases.
  static Mlp seeded(int in, int hidden, int out, std::uint64_t seed);

  std::vector<double> forward(const std::vector<double>& input) const;

  int parameter_count() const {
    return n_hidden * n_in + n_hidden + n_out * n_hidden + n_out;
  }
};

/// Mean over patterns of (1/2) * sum_k (y_k - d_k)^2.
double mse(const Mlp& mlp, const TrainingSet& set);

/// One full-batch step: every weight and bias moves by -eta times the
/// analytic gradient of mse over the batch. The input network is untouched.
Mlp backprop_step(const Mlp& mlp, const TrainingSet& batch, double eta);

struct TraceRow {
  long epoch;
  double train_mse;
  double val_mse;
};

struct TrainingTrace {
  std::vector<TraceRow> rows;
  double final_test_mse = 0.0;
  double regression_slope = 0.0;
  double regression_intercept = 0.0;
};

/// Backpropagation training on the dataset's train partition, one sequential
/// per-pattern pass per epoch in fixed dataset order. Stops when the epoch's
/// train MSE drops below cfg.target_mse or max_epochs is exhausted. Returns
/// the final-epoch weights together with the trace (per-epoch train and
/// validation MSE), the test MSE and the pooled predicted-vs-target
/// regression fit on the test partition.
std::pair<Mlp, TrainingTrace> train(const Mlp& mlp, const SynthesisDataset& data,
                                    const TrainingConfig& cfg);

/// Encodes the steering direction, runs the network, denormalizes the outputs
/// to degrees and pairs them with the signed Fourier coefficient profile of
/// the default desired pattern (magnitudes |c_m|, plus 180 deg where c_m < 0).
Excitation predict_phases(const Mlp& mlp, double steer_deg);

}  // namespace beamsynth

#endif  // BEAMSYNTH_MLP_HPP
