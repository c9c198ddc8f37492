// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0
//
// Training-pair generation for the neural phase synthesizer: encodes steering
// directions as sampled desired-pattern magnitudes and pairs them with the
// progressive phases of the Fourier-steered excitation.

#ifndef BEAMSYNTH_DATASET_HPP
#define BEAMSYNTH_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "beamsynth/array.hpp"
#include "beamsynth/synthesis.hpp"

namespace beamsynth {

inline constexpr int kInputDim = 18;
inline constexpr int kOutputDim = 16;
inline constexpr double kSteerMinDeg = 40.0;
inline constexpr double kSteerMaxDeg = 140.0;

/// Targets are wrapped phases scaled by 0.9/180, keeping them off the tanh
/// asymptotes.
inline constexpr double kTargetScale = 0.9;

/// Stamped into model files so a trained network is never fed inputs from a
/// different encoding.
inline constexpr const char* kInputEncodingVersion = "rc-sector-samples-v1";

/// Encoding sector width. Wider than the synthesis default so the cos^2
/// taper bands always straddle at least one of the 18 sample angles and the
/// encoding stays injective along the steering range.
inline constexpr double kEncodingWidthU = 0.60;

enum class Split { kTrain, kValidation, kTest };

std::string to_string(Split s);
Split split_from_string(const std::string& s);

struct SynthesisPair {
  double steer_deg;
  std::vector<double> input;   // kInputDim entries in [-1, 1]
  std::vector<double> target;  // kOutputDim entries in [-0.9, 0.9]
  Split split;
};

struct SynthesisDataset {
  std::vector<SynthesisPair> pairs;

  std::vector<const SynthesisPair*> subset(Split s) const;
  int count(Split s) const;
};

/// Shared run configuration for dataset generation and training.
struct TrainingConfig {
  double eta = 0.02;
  long max_epochs = 50000;
  double target_mse = 1e-3;
  std::uint64_t seed = 42;
  double train_frac = 0.70;
  double val_frac = 0.15;
  double test_frac = 0.15;

  void validate() const;
};

/// The 101 canonical training directions, 40:1:140 degrees.
std::vector<double> default_directions();

/// Samples the encoding sector's magnitude at 18 angles uniformly spanning
/// [40, 140] degrees, mapped to [-1, 1] via 2*D - 1.
std::vector<double> encode_input(double steer_deg, double width_u = kEncodingWidthU);

/// Progressive phases of the Fourier-steered excitation, referenced to the
/// array midpoint and wrapped to (-180, 180]. Exactly zero at broadside.
std::vector<double> pipeline_phases_deg(const ArrayGeometry& geom, double steer_deg);

/// Input/target pairs for every direction, split by a seeded shuffle into
/// train/validation/test (floor counts for validation and test, remainder
/// to train). Pairs are ordered by direction.
SynthesisDataset generate(const ArrayGeometry& geom, const std::vector<double>& directions,
                          const TrainingConfig& cfg);

}  // namespace beamsynth

#endif  // BEAMSYNTH_DATASET_HPP
