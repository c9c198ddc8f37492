// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0
//
// beamsynth CLI: classical synthesis, scanning, dataset generation, training
// and neural inference with reproducible file outputs.
//
// Exit codes: 0 success, 1 numeric/runtime failure, 2 usage/domain error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beamsynth/array.hpp"
#include "beamsynth/dataset.hpp"
#include "beamsynth/error.hpp"
#include "beamsynth/io.hpp"
#include "beamsynth/mlp.hpp"
#include "beamsynth/reference.hpp"
#include "beamsynth/synthesis.hpp"

#ifndef BEAMSYNTH_DATA_DIR
#define BEAMSYNTH_DATA_DIR "data"
#endif

namespace {

using namespace beamsynth;

std::string fmt_sll(const std::optional<double>& sll) {
  return sll.has_value() ? fmt9(*sll) : "-inf";
}

void echo_config(const ConfigEcho& config) {
  for (const auto& [k, v] : config) std::cout << "# " << k << "=" << v << "\n";
}

struct GeometryOpts {
  int n = 16;
  double spacing = 0.5;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "Number of array elements")->capture_default_str();
    cmd->add_option("--spacing", spacing, "Element spacing in wavelengths")
        ->capture_default_str();
  }
  ArrayGeometry geometry() const { return ArrayGeometry(n, spacing); }
};

struct DesiredOpts {
  double steer = 90.0;
  double width_u = kDefaultWidthU;
  std::string shape = "raised-cosine";
  double edge_taper = kDefaultEdgeTaper;

  void attach(CLI::App* cmd) {
    cmd->add_option("--steer", steer, "Main-beam direction in degrees")->capture_default_str();
    cmd->add_option("--width-u", width_u, "Full sector width in u = cos(theta)")
        ->capture_default_str();
    cmd->add_option("--shape", shape, "Sector shape: sector | raised-cosine")
        ->check(CLI::IsMember({"sector", "raised-cosine"}))
        ->capture_default_str();
    cmd->add_option("--edge-taper", edge_taper,
                    "cos^2 edge fraction of the half-width (raised-cosine shape)")
        ->capture_default_str();
  }
  DesiredPattern desired() const {
    const SectorShape s =
        shape == "sector" ? SectorShape::kSector : SectorShape::kRaisedCosineEdge;
    return DesiredPattern(steer, width_u, s, edge_taper);
  }
  void echo(ConfigEcho& c) const {
    c.emplace_back("steer_deg", fmt9(steer));
    c.emplace_back("width_u", fmt9(width_u));
    c.emplace_back("shape", shape);
    c.emplace_back("edge_taper", fmt9(edge_taper));
  }
};

std::vector<double> parse_null_list(const std::string& text) {
  std::vector<double> nulls;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) nulls.push_back(std::stod(item));
  }
  return nulls;
}

Excitation synthesize(const std::string& method, const ArrayGeometry& geom,
                      const DesiredOpts& desired, double sll_db, int nbar,
                      const std::string& nulls_text) {
  if (method == "fourier") return fourier_weights(geom, desired.desired());
  if (method == "woodward-lawson") return woodward_lawson(geom, desired.desired()).first;
  if (method == "chebyshev") return chebyshev_weights(geom, ChebyshevSpec(sll_db));
  if (method == "taylor") return taylor_weights(geom, TaylorSpec(sll_db, nbar));
  if (method == "schelkunoff") {
    std::vector<double> nulls = nulls_text.empty()
                                    ? chebyshev_null_angles(geom, ChebyshevSpec(sll_db))
                                    : parse_null_list(nulls_text);
    return schelkunoff_weights(geom, nulls);
  }
  if (method == "uniform") return Excitation::uniform(geom.n_elements);
  throw ArgumentError("unknown synthesis method: " + method);
}

void print_metrics_line(const std::string& method, const PatternMetrics& m) {
  std::cout << "method=" << method << " peak=" << fmt9(m.peak_deg) << " sll=" << fmt_sll(m.sll_db)
            << " hpbw=" << fmt9(m.hpbw_deg) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Phased-array radiation-pattern synthesis toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value config file; flags override file values");

  std::string data_dir = BEAMSYNTH_DATA_DIR;
  app.add_option("--data-dir", data_dir, "Directory holding the bundled reference tables")
      ->capture_default_str();

  // ---- synth ----
  auto* synth = app.add_subcommand("synth", "Synthesize one excitation and its pattern");
  std::string method;
  synth->add_option("method", method, "fourier | woodward-lawson | schelkunoff | chebyshev | taylor | uniform")
      ->required();
  GeometryOpts synth_geom;
  synth_geom.attach(synth);
  DesiredOpts synth_desired;
  synth_desired.attach(synth);
  double synth_sll = -30.0;
  int synth_nbar = 5;
  std::string synth_nulls;
  double synth_step = 0.05;
  std::string synth_out = "";
  synth->add_option("--sll", synth_sll, "Design sidelobe level in dB (chebyshev/taylor)")
      ->capture_default_str();
  synth->add_option("--nbar", synth_nbar, "Controlled near-in sidelobes (taylor)")
      ->capture_default_str();
  synth->add_option("--nulls", synth_nulls,
                    "Comma-separated null angles in degrees (schelkunoff); default: the "
                    "chebyshev design's nulls");
  synth->add_option("--grid-step", synth_step, "Analysis grid step in degrees")
      ->capture_default_str();
  synth->add_option("--out", synth_out, "Output prefix (default: the method name)");

  // ---- scan ----
  auto* scan = app.add_subcommand("scan", "Synthesize one pattern per steering direction");
  GeometryOpts scan_geom;
  scan_geom.attach(scan);
  std::string scan_method = "fourier";
  double scan_from = 40.0, scan_to = 140.0, scan_step = 6.25, scan_grid_step = 0.05;
  std::string scan_out_dir = "scan-out";
  double scan_width = kDefaultWidthU;
  scan->add_option("--method", scan_method, "fourier | woodward-lawson")->capture_default_str();
  scan->add_option("--from", scan_from, "First steering angle in degrees")->capture_default_str();
  scan->add_option("--to", scan_to, "Last steering angle in degrees")->capture_default_str();
  scan->add_option("--step", scan_step, "Steering step in degrees")->capture_default_str();
  scan->add_option("--width-u", scan_width, "Sector width in u")->capture_default_str();
  scan->add_option("--grid-step", scan_grid_step, "Analysis grid step in degrees")
      ->capture_default_str();
  scan->add_option("--out-dir", scan_out_dir, "Output directory")->capture_default_str();

  // ---- compare ----
  auto* compare = app.add_subcommand("compare", "Run all five methods at one geometry");
  GeometryOpts cmp_geom;
  cmp_geom.attach(compare);
  DesiredOpts cmp_desired;
  cmp_desired.attach(compare);
  double cmp_sll = -30.0;
  int cmp_nbar = 5;
  std::string cmp_out = "comparison.csv";
  compare->add_option("--sll", cmp_sll, "Design sidelobe level for the taper methods")
      ->capture_default_str();
  compare->add_option("--nbar", cmp_nbar, "Controlled near-in sidelobes (taylor)")
      ->capture_default_str();
  compare->add_option("--out", cmp_out, "Comparison CSV path")->capture_default_str();

  // ---- dataset ----
  auto* dataset = app.add_subcommand("dataset", "Generate the training dataset CSV");
  GeometryOpts ds_geom;
  ds_geom.attach(dataset);
  double ds_from = 40.0, ds_to = 140.0, ds_step = 1.0;
  TrainingConfig ds_cfg;
  std::string ds_out = "dataset.csv";
  dataset->add_option("--from", ds_from, "First direction in degrees")->capture_default_str();
  dataset->add_option("--to", ds_to, "Last direction in degrees")->capture_default_str();
  dataset->add_option("--step", ds_step, "Direction step in degrees")->capture_default_str();
  dataset->add_option("--seed", ds_cfg.seed, "Split shuffle seed")
      ->envname("BEAMSYNTH_SEED")
      ->capture_default_str();
  dataset->add_option("--split-train", ds_cfg.train_frac, "Train fraction")->capture_default_str();
  dataset->add_option("--split-val", ds_cfg.val_frac, "Validation fraction")
      ->capture_default_str();
  dataset->add_option("--split-test", ds_cfg.test_frac, "Test fraction")->capture_default_str();
  dataset->add_option("--out", ds_out, "Output CSV path")->capture_default_str();

  // ---- train ----
  auto* train_cmd = app.add_subcommand("train", "Train the neural phase synthesizer");
  std::string train_dataset_path;
  TrainingConfig train_cfg;
  std::string out_model = "model.json", out_trace = "trace.csv";
  train_cmd->add_option("--dataset", train_dataset_path,
                        "Dataset CSV (default: generate the canonical 101-direction set)");
  train_cmd->add_option("--seed", train_cfg.seed, "Weight-init and split seed")
      ->envname("BEAMSYNTH_SEED")
      ->capture_default_str();
  train_cmd->add_option("--eta", train_cfg.eta, "Learning rate")->capture_default_str();
  train_cmd->add_option("--epochs", train_cfg.max_epochs, "Maximum training epochs")
      ->capture_default_str();
  train_cmd->add_option("--target-mse", train_cfg.target_mse, "Stop when train MSE drops below")
      ->capture_default_str();
  train_cmd->add_option("--out-model", out_model, "Model JSON path")->capture_default_str();
  train_cmd->add_option("--trace", out_trace, "Training trace CSV path")->capture_default_str();

  // ---- infer ----
  auto* infer = app.add_subcommand("infer", "Predict phases for a steering direction");
  std::string infer_model = "model.json", infer_out = "infer";
  double infer_steer = 90.0;
  bool no_gate = false;
  infer->add_option("--model", infer_model, "Trained model JSON")->capture_default_str();
  infer->add_option("--steer", infer_steer, "Steering direction in degrees")->required();
  infer->add_option("--out", infer_out, "Output prefix")->capture_default_str();
  infer->add_flag("--no-gate", no_gate, "Report metrics without gating the exit code");

  // ---- validate-ref ----
  auto* vref = app.add_subcommand("validate-ref", "Check the bundled reference tables");
  std::string vref_kind = "wwl-nn-phases";
  vref->add_option("--kind", vref_kind, "fourier-amplitudes | wwl-nn-phases")
      ->check(CLI::IsMember({"fourier-amplitudes", "wwl-nn-phases"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (synth->parsed()) {
    const ArrayGeometry geom = synth_geom.geometry();
    const Excitation exc = synthesize(method, geom, synth_desired, synth_sll, synth_nbar,
                                      synth_nulls);
    const AngleGrid grid = AngleGrid::uniform(0.0, 180.0, synth_step);
    const Pattern pattern = array_factor(geom, exc, grid);
    const PatternMetrics m = pattern_metrics(pattern);

    ConfigEcho cfg{{"command", "synth"}, {"method", method},
                   {"n_elements", std::to_string(geom.n_elements)},
                   {"spacing_wl", fmt9(geom.spacing_wl)}};
    synth_desired.echo(cfg);
    cfg.emplace_back("sll_db", fmt9(synth_sll));
    cfg.emplace_back("nbar", std::to_string(synth_nbar));
    if (!synth_nulls.empty()) cfg.emplace_back("nulls_deg", synth_nulls);
    cfg.emplace_back("grid_step_deg", fmt9(synth_step));

    const std::string prefix = synth_out.empty() ? method : synth_out;
    write_excitation_json(prefix + ".excitation.json", geom, exc, cfg);
    write_pattern_csv(prefix + ".pattern.csv", pattern, cfg);
    echo_config(cfg);
    print_metrics_line(method, m);
    return 0;
  }

  if (scan->parsed()) {
    if (!(scan_from > 0.0 && scan_to < 180.0 && scan_from <= scan_to)) {
      throw ArgumentError("scan: need 0 < from <= to < 180");
    }
    if (!(scan_step > 0.0)) throw ArgumentError("scan: step must be positive");
    const ArrayGeometry geom = scan_geom.geometry();
    const AngleGrid grid = AngleGrid::uniform(0.0, 180.0, scan_grid_step);
    std::filesystem::create_directories(scan_out_dir);

    ConfigEcho cfg{{"command", "scan"},       {"method", scan_method},
                   {"n_elements", std::to_string(geom.n_elements)},
                   {"spacing_wl", fmt9(geom.spacing_wl)},
                   {"from_deg", fmt9(scan_from)}, {"to_deg", fmt9(scan_to)},
                   {"step_deg", fmt9(scan_step)}, {"width_u", fmt9(scan_width)},
                   {"grid_step_deg", fmt9(scan_grid_step)}};
    echo_config(cfg);

    std::vector<ScanRow> rows;
    for (double steer = scan_from; steer <= scan_to + 1e-9; steer += scan_step) {
      const DesiredPattern desired(steer, scan_width);
      const Excitation exc = scan_method == "woodward-lawson"
                                 ? woodward_lawson(geom, desired).first
                                 : fourier_weights(geom, desired);
      const Pattern pattern = array_factor(geom, exc, grid);
      const PatternMetrics m = pattern_metrics(pattern);
      rows.push_back({steer, m});
      std::ostringstream name;
      name << scan_out_dir << "/pattern_" << fmt9(steer) << ".csv";
      write_pattern_csv(name.str(), pattern, cfg);
      std::cout << "steer=" << fmt9(steer) << " peak=" << fmt9(m.peak_deg)
                << " sll=" << fmt_sll(m.sll_db) << " hpbw=" << fmt9(m.hpbw_deg) << "\n";
    }
    write_scan_csv(scan_out_dir + "/scan_summary.csv", rows, cfg);
    return 0;
  }

  if (compare->parsed()) {
    const ArrayGeometry geom = cmp_geom.geometry();
    CompareSpecs specs{ChebyshevSpec(cmp_sll), TaylorSpec(cmp_sll, cmp_nbar), {}, {}};
    const auto rows =
        compare_methods(geom, cmp_desired.desired(), specs, AngleGrid::uniform());

    ConfigEcho cfg{{"command", "compare"},
                   {"n_elements", std::to_string(geom.n_elements)},
                   {"spacing_wl", fmt9(geom.spacing_wl)}};
    cmp_desired.echo(cfg);
    cfg.emplace_back("sll_db", fmt9(cmp_sll));
    cfg.emplace_back("nbar", std::to_string(cmp_nbar));
    write_comparison_csv(cmp_out, rows, cfg);
    echo_config(cfg);
    for (const auto& r : rows) print_metrics_line(r.method, r.metrics);
    return 0;
  }

  if (dataset->parsed()) {
    const ArrayGeometry geom = ds_geom.geometry();
    std::vector<double> dirs;
    for (double d = ds_from; d <= ds_to + 1e-9; d += ds_step) dirs.push_back(d);
    const SynthesisDataset ds = generate(geom, dirs, ds_cfg);

    ConfigEcho cfg{{"command", "dataset"},
                   {"n_elements", std::to_string(geom.n_elements)},
                   {"spacing_wl", fmt9(geom.spacing_wl)},
                   {"from_deg", fmt9(ds_from)},
                   {"to_deg", fmt9(ds_to)},
                   {"step_deg", fmt9(ds_step)},
                   {"seed", std::to_string(ds_cfg.seed)},
                   {"split", fmt9(ds_cfg.train_frac) + "/" + fmt9(ds_cfg.val_frac) + "/" +
                                 fmt9(ds_cfg.test_frac)},
                   {"encoding", kInputEncodingVersion}};
    write_dataset_csv(ds_out, ds, cfg);
    echo_config(cfg);
    std::cout << "pairs=" << ds.pairs.size() << " train=" << ds.count(Split::kTrain)
              << " validation=" << ds.count(Split::kValidation)
              << " test=" << ds.count(Split::kTest) << " out=" << ds_out << "\n";
    return 0;
  }

  if (train_cmd->parsed()) {
    const ArrayGeometry geom(kOutputDim, 0.5);
    const SynthesisDataset ds = train_dataset_path.empty()
                                    ? generate(geom, default_directions(), train_cfg)
                                    : read_dataset_csv(train_dataset_path);
    const Mlp init = Mlp::seeded(kInputDim, 30, kOutputDim, train_cfg.seed);
    auto [model, trace] = train(init, ds, train_cfg);

    ConfigEcho cfg{{"command", "train"},
                   {"dataset", train_dataset_path.empty() ? "<generated 40:1:140>"
                                                          : train_dataset_path},
                   {"layer_sizes", "18/30/16"},
                   {"eta", fmt9(train_cfg.eta)},
                   {"max_epochs", std::to_string(train_cfg.max_epochs)},
                   {"target_mse", fmt9(train_cfg.target_mse)},
                   {"seed", std::to_string(train_cfg.seed)},
                   {"encoding", kInputEncodingVersion}};
    write_model_json(out_model, model, cfg);
    write_trace_csv(out_trace, trace, cfg);
    echo_config(cfg);

    const double final_train = trace.rows.empty() ? -1.0 : trace.rows.back().train_mse;
    const double final_val = trace.rows.empty() ? -1.0 : trace.rows.back().val_mse;
    std::cout << "epochs=" << trace.rows.size() << " train_mse=" << fmt9(final_train)
              << " val_mse=" << fmt9(final_val) << " test_mse=" << fmt9(trace.final_test_mse)
              << " slope=" << fmt9(trace.regression_slope)
              << " intercept=" << fmt9(trace.regression_intercept) << "\n";
    return 0;
  }

  if (infer->parsed()) {
    const Mlp model = read_model_json(infer_model);
    const Excitation exc = predict_phases(model, infer_steer);
    const ArrayGeometry geom(model.n_out, 0.5);
    const AngleGrid grid = AngleGrid::uniform();
    const Pattern pattern = array_factor(geom, exc, grid);
    const PatternMetrics m = pattern_metrics(pattern);

    ConfigEcho cfg{{"command", "infer"},
                   {"model", infer_model},
                   {"steer_deg", fmt9(infer_steer)},
                   {"gate", no_gate ? "off" : "peak±2deg, sll<=-20dB"}};
    write_excitation_json(infer_out + ".excitation.json", geom, exc, cfg);
    write_pattern_csv(infer_out + ".pattern.csv", pattern, cfg);
    echo_config(cfg);
    print_metrics_line("wwl-nn", m);

    if (no_gate) return 0;
    const bool peak_ok = std::abs(m.peak_deg - infer_steer) <= 2.0;
    const bool sll_ok = m.sll_db.has_value() && *m.sll_db <= -20.0;
    std::cout << "gate=" << (peak_ok && sll_ok ? "pass" : "fail") << "\n";
    return peak_ok && sll_ok ? 0 : 1;
  }

  if (vref->parsed()) {
    if (vref_kind == "fourier-amplitudes") {
      const ReferenceTable t = load_reference(ReferenceKind::kFourierAmplitudes, data_dir);
      std::cout << "table=fourier-amplitudes columns=" << t.column_angles_deg.size()
                << " symmetry=ok\n";
      for (double a : t.column_angles_deg) {
        double sum = 0.0;
        for (int e = 1; e <= 16; ++e) sum += t.value(e, a);
        std::cout << "column=" << fmt9(a) << " sum=" << fmt9(sum) << "\n";
      }
      return 0;
    }
    const ReferenceTable t = load_reference(ReferenceKind::kWwlNnPhases, data_dir);
    const auto reports = validate_reference_against_pipeline(t, ArrayGeometry(16, 0.5));
    for (const auto& r : reports) {
      if (r.skipped) {
        std::cout << "column=" << fmt9(r.steer_deg) << " skipped (no such column)\n";
      } else {
        std::cout << "column=" << fmt9(r.steer_deg) << " peak=" << fmt9(r.peak_deg)
                  << " sll=" << fmt9(r.sll_db) << "\n";
      }
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const beamsynth::ArgumentError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const beamsynth::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const beamsynth::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
