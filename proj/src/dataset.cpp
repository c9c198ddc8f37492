// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamsynth/dataset.hpp"

#include <algorithm>
#include <cmath>

#include "beamsynth/error.hpp"
#include "beamsynth/rng.hpp"

namespace beamsynth {

std::string to_string(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kValidation: return "validation";
    case Split::kTest: return "test";
  }
  return "?";
}

Split split_from_string(const std::string& s) {
  if (s == "train") return Split::kTrain;
  if (s == "validation") return Split::kValidation;
  if (s == "test") return Split::kTest;
  throw ArgumentError("unknown split label: " + s);
}

std::vector<const SynthesisPair*> SynthesisDataset::subset(Split s) const {
  std::vector<const SynthesisPair*> out;
  for (const auto& p : pairs) {
    if (p.split == s) out.push_back(&p);
  }
  return out;
}

int SynthesisDataset::count(Split s) const {
  return static_cast<int>(std::count_if(pairs.begin(), pairs.end(),
                                        [s](const SynthesisPair& p) { return p.split == s; }));
}

void TrainingConfig::validate() const {
  if (!(eta >= 0.0)) throw ArgumentError("TrainingConfig: eta must be >= 0");
  if (max_epochs < 0) throw ArgumentError("TrainingConfig: max_epochs must be >= 0");
  if (!(train_frac > 0.0 && val_frac > 0.0 && test_frac > 0.0)) {
    throw ArgumentError("TrainingConfig: split fractions must be positive");
  }
  if (std::abs(train_frac + val_frac + test_frac - 1.0) > 1e-9) {
    throw ArgumentError("TrainingConfig: split fractions must sum to 1");
  }
}

std::vector<double> default_directions() {
  std::vector<double> dirs;
  for (int d = 40; d <= 140; ++d) dirs.push_back(static_cast<double>(d));
  return dirs;
}

std::vector<double> encode_input(double steer_deg, double width_u) {
  if (!(steer_deg >= kSteerMinDeg && steer_deg <= kSteerMaxDeg)) {
    throw ArgumentError("encode_input: steer angle outside [40, 140]");
  }
  const DesiredPattern sector(steer_deg, width_u, SectorShape::kRaisedCosineEdge,
                              kDefaultEdgeTaper);
  std::vector<double> x(kInputDim);
  for (int j = 0; j < kInputDim; ++j) {
    const double theta = kSteerMinDeg + (kSteerMaxDeg - kSteerMinDeg) * j / (kInputDim - 1);
    x[static_cast<std::size_t>(j)] = 2.0 * sector.magnitude(std::cos(deg2rad(theta))) - 1.0;
  }
  return x;
}

std::vector<double> pipeline_phases_deg(const ArrayGeometry& geom, double steer_deg) {
  // Broadside is pinned to exactly zero phase (cos(pi/2) is not exact in
  // floating point).
  const double u0 = steer_deg == 90.0 ? 0.0 : std::cos(deg2rad(steer_deg));
  const double psi0_deg = rad2deg(geom.kd()) * u0;
  const double center = (geom.n_elements - 1) / 2.0;
  std::vector<double> ph(static_cast<std::size_t>(geom.n_elements));
  for (int e = 0; e < geom.n_elements; ++e) {
    ph[static_cast<std::size_t>(e)] = wrap_deg(-(e - center) * psi0_deg);
  }
  return ph;
}

SynthesisDataset generate(const ArrayGeometry& geom, const std::vector<double>& directions,
                          const TrainingConfig& cfg) {
  cfg.validate();
  if (directions.empty()) throw ArgumentError("generate: empty direction list");
  if (geom.n_elements != kOutputDim) {
    throw DimensionError("generate: dataset targets are defined for 16-element arrays");
  }

  std::vector<double> dirs(directions);
  std::sort(dirs.begin(), dirs.end());
  for (double d : dirs) {
    if (!(d >= kSteerMinDeg && d <= kSteerMaxDeg)) {
      throw ArgumentError("generate: direction outside [40, 140]");
    }
  }

  SynthesisDataset ds;
  ds.pairs.reserve(dirs.size());
  for (double d : dirs) {
    SynthesisPair p;
    p.steer_deg = d;
    p.input = encode_input(d);
    p.target.resize(kOutputDim);
    const auto phases = pipeline_phases_deg(geom, d);
    for (int e = 0; e < kOutputDim; ++e) {
      p.target[static_cast<std::size_t>(e)] =
          phases[static_cast<std::size_t>(e)] * kTargetScale / 180.0;
    }
    p.split = Split::kTrain;
    ds.pairs.push_back(std::move(p));
  }

  // Seeded shuffle; validation and test take floor counts, train the rest.
  std::vector<std::size_t> idx(ds.pairs.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  SeededRng rng(cfg.seed);
  rng.shuffle(idx);
  const std::size_t n_val = static_cast<std::size_t>(cfg.val_frac * static_cast<double>(idx.size()));
  const std::size_t n_test =
      static_cast<std::size_t>(cfg.test_frac * static_cast<double>(idx.size()));
  for (std::size_t i = 0; i < n_val; ++i) ds.pairs[idx[i]].split = Split::kValidation;
  for (std::size_t i = n_val; i < n_val + n_test; ++i) ds.pairs[idx[i]].split = Split::kTest;
  return ds;
}

}  // namespace beamsynth
