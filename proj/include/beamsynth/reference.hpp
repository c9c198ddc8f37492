// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0
//
// Bundled reference tables: the published Fourier amplitude table and the
// published hybrid-synthesis phase table for the 16-element half-wave array,
// stored verbatim as CSV with a SHA-256 manifest.

#ifndef BEAMSYNTH_REFERENCE_HPP
#define BEAMSYNTH_REFERENCE_HPP

#include <string>
#include <vector>

#include "beamsynth/array.hpp"

namespace beamsynth {

enum class ReferenceKind { kFourierAmplitudes, kWwlNnPhases };

std::string reference_file_name(ReferenceKind kind);

/// Values laid out as rows = element labels 1..16, columns = steering angles.
struct ReferenceTable {
  ReferenceKind kind;
  std::vector<double> column_angles_deg;
  std::vector<std::vector<double>> values;  // [element-1][column]

  bool has_column(double angle_deg) const;
  /// element is the 1-based label from the published table.
  double value(int element, double angle_deg) const;
};

/// Parses a bundled table, verifies its SHA-256 against data/manifest.json
/// and checks the load-time invariants (exact element and mirror symmetry of
/// the amplitude table; <= 6 deg mirror antisymmetry of the phase table).
ReferenceTable load_reference(ReferenceKind kind, const std::string& data_dir);

struct ColumnReport {
  double steer_deg = 0.0;
  bool skipped = false;
  double peak_deg = 0.0;
  double sll_db = 0.0;
};

/// Informational cross-check: drives the published phases with generated
/// Fourier amplitudes and reports per-column peak direction and sidelobe
/// level. The broadside column is reported as skipped (the published phase
/// table has no 90 deg column).
std::vector<ColumnReport> validate_reference_against_pipeline(const ReferenceTable& table,
                                                              const ArrayGeometry& geom);

}  // namespace beamsynth

#endif  // BEAMSYNTH_REFERENCE_HPP
