// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "beamsynth/error.hpp"
#include "beamsynth/io.hpp"
#include "beamsynth/reference.hpp"

using namespace beamsynth;

namespace {
const std::string kDataDir = BEAMSYNTH_DATA_DIR;
}

TEST_CASE("load_reference: published amplitude table") {
  const ReferenceTable t = load_reference(ReferenceKind::kFourierAmplitudes, kDataDir);
  CHECK(t.column_angles_deg.size() == 11);
  CHECK(t.value(1, 90.0) == 0.0166);
  CHECK(t.value(16, 90.0) == 0.0166);
  CHECK(t.value(8, 90.0) == 0.1845);
  CHECK(t.value(3, 90.0) == 0.0048);
  CHECK_THROWS_AS(t.value(0, 90.0), ArgumentError);
  CHECK_THROWS_AS(t.value(1, 91.0), ArgumentError);
}

TEST_CASE("load_reference: published phase table") {
  const ReferenceTable t = load_reference(ReferenceKind::kWwlNnPhases, kDataDir);
  CHECK(t.column_angles_deg.size() == 10);
  CHECK(!t.has_column(90.0));
  CHECK(t.value(8, 100.0) == -18.088);
  CHECK(t.value(1, 40.0) == 17.208);
  CHECK(t.value(1, 140.0) == -15.368);
  CHECK(std::abs(t.value(1, 40.0) + t.value(1, 140.0)) == doctest::Approx(1.84).epsilon(1e-9));
}

TEST_CASE("load_reference: corrupted data fails the checksum") {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / "beamsynth_ref_test";
  fs::create_directories(tmp);
  for (const char* f : {"table1_fourier_amplitudes.csv", "table3_wwl_nn_phases.csv",
                        "manifest.json"}) {
    fs::copy_file(fs::path(kDataDir) / f, tmp / f, fs::copy_options::overwrite_existing);
  }
  // Flip one digit in the amplitude table.
  std::string contents = read_file((tmp / "table1_fourier_amplitudes.csv").string());
  const auto pos = contents.find("0.1845");
  REQUIRE(pos != std::string::npos);
  contents[pos + 3] = '9';
  write_file((tmp / "table1_fourier_amplitudes.csv").string(), contents);

  CHECK_THROWS_AS(load_reference(ReferenceKind::kFourierAmplitudes, tmp.string()),
                  DataIntegrityError);
  // The untouched phase table still loads from the same directory.
  CHECK_NOTHROW(load_reference(ReferenceKind::kWwlNnPhases, tmp.string()));
  fs::remove_all(tmp);
}

TEST_CASE("validate_reference_against_pipeline: informational column reports") {
  const ReferenceTable t = load_reference(ReferenceKind::kWwlNnPhases, kDataDir);
  const auto reports = validate_reference_against_pipeline(t, ArrayGeometry(16, 0.5));
  REQUIRE(reports.size() == 11);  // 40:10:140

  SUBCASE("the broadside column is marked skipped") {
    bool found = false;
    for (const auto& r : reports) {
      if (r.steer_deg == 90.0) {
        found = true;
        CHECK(r.skipped);
      }
    }
    CHECK(found);
  }

  SUBCASE("non-skipped columns carry peak and sidelobe fields") {
    for (const auto& r : reports) {
      if (!r.skipped) {
        CHECK(r.peak_deg > 0.0);
        CHECK(r.sll_db < 0.0);
      }
    }
  }

  SUBCASE("mirrored columns peak symmetrically about broadside") {
    auto peak_of = [&](double steer) {
      for (const auto& r : reports) {
        if (r.steer_deg == steer) return r.peak_deg;
      }
      FAIL("missing column");
      return 0.0;
    };
    for (double steer : {40.0, 50.0, 60.0, 70.0, 80.0}) {
      CHECK(std::abs(peak_of(steer) + peak_of(180.0 - steer) - 180.0) <= 3.0);
    }
  }
}
