// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamsynth/reference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "beamsynth/error.hpp"
#include "beamsynth/io.hpp"
#include "beamsynth/synthesis.hpp"

namespace beamsynth {

namespace {

constexpr int kElements = 16;

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  return fields;
}

void check_amplitude_invariants(const ReferenceTable& t) {
  const int ncols = static_cast<int>(t.column_angles_deg.size());
  for (int c = 0; c < ncols; ++c) {
    const double angle = t.column_angles_deg[static_cast<std::size_t>(c)];
    for (int e = 1; e <= kElements; ++e) {
      // Exact pairing value(m) = value(17-m) within a column.
      if (t.value(e, angle) != t.value(kElements + 1 - e, angle)) {
        throw DataIntegrityError("reference table: element symmetry violated");
      }
      // Exact mirror value(theta) = value(180 - theta) across columns.
      if (t.has_column(180.0 - angle) && t.value(e, angle) != t.value(e, 180.0 - angle)) {
        throw DataIntegrityError("reference table: mirror symmetry violated");
      }
    }
  }
}

void check_phase_invariants(const ReferenceTable& t) {
  for (double angle : t.column_angles_deg) {
    const double mirror = 180.0 - angle;
    if (!t.has_column(mirror)) continue;
    for (int e = 1; e <= kElements; ++e) {
      if (std::abs(t.value(e, angle) + t.value(e, mirror)) > 6.0) {
        throw DataIntegrityError("reference table: mirror antisymmetry above 6 degrees");
      }
    }
  }
}

}  // namespace

std::string reference_file_name(ReferenceKind kind) {
  return kind == ReferenceKind::kFourierAmplitudes ? "table1_fourier_amplitudes.csv"
                                                   : "table3_wwl_nn_phases.csv";
}

bool ReferenceTable::has_column(double angle_deg) const {
  return std::any_of(column_angles_deg.begin(), column_angles_deg.end(),
                     [angle_deg](double a) { return a == angle_deg; });
}

double ReferenceTable::value(int element, double angle_deg) const {
  if (element < 1 || element > static_cast<int>(values.size())) {
    throw ArgumentError("ReferenceTable::value: element label out of range");
  }
  for (std::size_t c = 0; c < column_angles_deg.size(); ++c) {
    if (column_angles_deg[c] == angle_deg) {
      return values[static_cast<std::size_t>(element - 1)][c];
    }
  }
  throw ArgumentError("ReferenceTable::value: no such column angle");
}

ReferenceTable load_reference(ReferenceKind kind, const std::string& data_dir) {
  const std::string file = reference_file_name(kind);
  const std::string raw = read_file(data_dir + "/" + file);

  const auto manifest = nlohmann::json::parse(read_file(data_dir + "/manifest.json"));
  const std::string expected = manifest.at(file).get<std::string>();
  const std::string actual = sha256_hex(raw);
  if (actual != expected) {
    throw DataIntegrityError("reference table " + file + ": checksum mismatch (" + actual + ")");
  }

  ReferenceTable t;
  t.kind = kind;
  std::istringstream in(raw);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_fields(line);
    if (header) {
      header = false;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        t.column_angles_deg.push_back(std::stod(fields[i]));
      }
      continue;
    }
    if (fields.size() != t.column_angles_deg.size() + 1) {
      throw DataIntegrityError("reference table " + file + ": ragged row");
    }
    std::vector<double> row;
    for (std::size_t i = 1; i < fields.size(); ++i) row.push_back(std::stod(fields[i]));
    t.values.push_back(std::move(row));
  }
  if (static_cast<int>(t.values.size()) != kElements) {
    throw DataIntegrityError("reference table " + file + ": expected 16 element rows");
  }

  if (kind == ReferenceKind::kFourierAmplitudes) {
    check_amplitude_invariants(t);
  } else {
    check_phase_invariants(t);
  }
  return t;
}

std::vector<ColumnReport> validate_reference_against_pipeline(const ReferenceTable& table,
                                                              const ArrayGeometry& geom) {
  if (table.kind != ReferenceKind::kWwlNnPhases) {
    throw ArgumentError("validate_reference_against_pipeline: expects the phase table");
  }
  const Excitation profile = fourier_weights(geom, DesiredPattern(90.0));
  const auto amplitudes = profile.amplitudes();
  const AngleGrid grid = AngleGrid::uniform();

  std::vector<ColumnReport> reports;
  for (double angle = 40.0; angle <= 140.0; angle += 10.0) {
    ColumnReport r;
    r.steer_deg = angle;
    if (!table.has_column(angle)) {
      r.skipped = true;
      reports.push_back(r);
      continue;
    }
    std::vector<double> phases(static_cast<std::size_t>(geom.n_elements));
    for (int e = 1; e <= geom.n_elements; ++e) {
      phases[static_cast<std::size_t>(e - 1)] = table.value(e, angle);
    }
    const auto metrics =
        pattern_metrics(array_factor(geom, Excitation::from_polar(amplitudes, phases), grid));
    r.peak_deg = metrics.peak_deg;
    r.sll_db = metrics.sll_db.value_or(-std::numeric_limits<double>::infinity());
    reports.push_back(r);
  }
  return reports;
}

}  // namespace beamsynth
