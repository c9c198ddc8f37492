// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0
//
// File formats: pattern/trace/dataset/comparison CSV, excitation and model
// JSON. Every writer accepts the resolved run configuration and echoes it
// as '# key=value' header lines (CSV) or a "config" object (JSON).

#ifndef BEAMSYNTH_IO_HPP
#define BEAMSYNTH_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "beamsynth/array.hpp"
#include "beamsynth/dataset.hpp"
#include "beamsynth/mlp.hpp"
#include "beamsynth/synthesis.hpp"

namespace beamsynth {

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

/// Decimal text with 9 significant digits.
std::string fmt9(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

// CSV ------------------------------------------------------------------

/// Header `theta_deg,af_db,af_re,af_im`, one row per grid angle.
void write_pattern_csv(const std::string& path, const Pattern& p, const ConfigEcho& config);

/// Header `method,peak_deg,sll_db,hpbw_deg`.
void write_comparison_csv(const std::string& path, const std::vector<MethodRow>& rows,
                          const ConfigEcho& config);

struct ScanRow {
  double steer_deg;
  PatternMetrics metrics;
};

/// Header `steer_deg,peak_deg,sll_db,hpbw_deg`.
void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows,
                    const ConfigEcho& config);

/// Header `epoch,train_mse,val_mse`.
void write_trace_csv(const std::string& path, const TrainingTrace& trace,
                     const ConfigEcho& config);

/// Header `steer_deg,split,in_1..in_18,tgt_1..tgt_16`.
void write_dataset_csv(const std::string& path, const SynthesisDataset& ds,
                       const ConfigEcho& config);
SynthesisDataset read_dataset_csv(const std::string& path);

// JSON -----------------------------------------------------------------

void write_excitation_json(const std::string& path, const ArrayGeometry& geom,
                           const Excitation& exc, const ConfigEcho& config);
std::pair<ArrayGeometry, Excitation> read_excitation_json(const std::string& path);

void write_model_json(const std::string& path, const Mlp& mlp, const ConfigEcho& config);
Mlp read_model_json(const std::string& path);

}  // namespace beamsynth

#endif  // BEAMSYNTH_IO_HPP
