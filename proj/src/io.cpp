// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamsynth/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "beamsynth/error.hpp"

namespace beamsynth {

namespace {

using nlohmann::json;

std::string fmt_sll(const std::optional<double>& sll) {
  return sll.has_value() ? fmt9(*sll) : "-inf";
}

void write_config_header(std::ostream& os, const ConfigEcho& config) {
  for (const auto& [k, v] : config) os << "# " << k << "=" << v << "\n";
}

json config_object(const ConfigEcho& config) {
  json obj = json::object();
  for (const auto& [k, v] : config) obj[k] = v;
  return obj;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

std::string fmt9(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ArgumentError("cannot write file: " + path);
  out << content;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256_hex: digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

void write_pattern_csv(const std::string& path, const Pattern& p, const ConfigEcho& config) {
  std::ostringstream os;
  write_config_header(os, config);
  os << "theta_deg,af_db,af_re,af_im\n";
  for (std::size_t i = 0; i < p.grid.theta_deg.size(); ++i) {
    os << fmt9(p.grid.theta_deg[i]) << "," << fmt9(p.af_db[i]) << "," << fmt9(p.af_complex[i].real())
       << "," << fmt9(p.af_complex[i].imag()) << "\n";
  }
  write_file(path, os.str());
}

void write_comparison_csv(const std::string& path, const std::vector<MethodRow>& rows,
                          const ConfigEcho& config) {
  std::ostringstream os;
  write_config_header(os, config);
  os << "method,peak_deg,sll_db,hpbw_deg\n";
  for (const auto& r : rows) {
    os << r.method << "," << fmt9(r.metrics.peak_deg) << "," << fmt_sll(r.metrics.sll_db) << ","
       << fmt9(r.metrics.hpbw_deg) << "\n";
  }
  write_file(path, os.str());
}

void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows,
                    const ConfigEcho& config) {
  std::ostringstream os;
  write_config_header(os, config);
  os << "steer_deg,peak_deg,sll_db,hpbw_deg\n";
  for (const auto& r : rows) {
    os << fmt9(r.steer_deg) << "," << fmt9(r.metrics.peak_deg) << "," << fmt_sll(r.metrics.sll_db)
       << "," << fmt9(r.metrics.hpbw_deg) << "\n";
  }
  write_file(path, os.str());
}

void write_trace_csv(const std::string& path, const TrainingTrace& trace,
                     const ConfigEcho& config) {
  std::ostringstream os;
  write_config_header(os, config);
  os << "epoch,train_mse,val_mse\n";
  for (const auto& r : trace.rows) {
    os << r.epoch << "," << fmt9(r.train_mse) << "," << fmt9(r.val_mse) << "\n";
  }
  write_file(path, os.str());
}

void write_dataset_csv(const std::string& path, const SynthesisDataset& ds,
                       const ConfigEcho& config) {
  std::ostringstream os;
  write_config_header(os, config);
  os << "steer_deg,split";
  for (int j = 1; j <= kInputDim; ++j) os << ",in_" << j;
  for (int k = 1; k <= kOutputDim; ++k) os << ",tgt_" << k;
  os << "\n";
  for (const auto& p : ds.pairs) {
    os << fmt9(p.steer_deg) << "," << to_string(p.split);
    for (double v : p.input) os << "," << fmt9(v);
    for (double v : p.target) os << "," << fmt9(v);
    os << "\n";
  }
  write_file(path, os.str());
}

SynthesisDataset read_dataset_csv(const std::string& path) {
  std::istringstream in(read_file(path));
  std::string line;
  SynthesisDataset ds;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column names line
      continue;
    }
    const auto f = split_csv_line(line);
    if (static_cast<int>(f.size()) != 2 + kInputDim + kOutputDim) {
      throw DataIntegrityError("dataset csv: wrong field count in: " + line);
    }
    SynthesisPair p;
    p.steer_deg = std::stod(f[0]);
    p.split = split_from_string(f[1]);
    for (int j = 0; j < kInputDim; ++j) p.input.push_back(std::stod(f[static_cast<std::size_t>(2 + j)]));
    for (int k = 0; k < kOutputDim; ++k) {
      p.target.push_back(std::stod(f[static_cast<std::size_t>(2 + kInputDim + k)]));
    }
    ds.pairs.push_back(std::move(p));
  }
  if (ds.pairs.empty()) throw DataIntegrityError("dataset csv: no rows in " + path);
  return ds;
}

void write_excitation_json(const std::string& path, const ArrayGeometry& geom,
                           const Excitation& exc, const ConfigEcho& config) {
  json j;
  j["n_elements"] = geom.n_elements;
  j["spacing_wl"] = geom.spacing_wl;
  j["amplitudes"] = exc.amplitudes();
  j["phases_deg"] = exc.phases_deg();
  if (!config.empty()) j["config"] = config_object(config);
  write_file(path, j.dump(2) + "\n");
}

std::pair<ArrayGeometry, Excitation> read_excitation_json(const std::string& path) {
  const json j = json::parse(read_file(path));
  ArrayGeometry geom(j.at("n_elements").get<int>(), j.at("spacing_wl").get<double>());
  auto exc = Excitation::from_polar(j.at("amplitudes").get<std::vector<double>>(),
                                    j.at("phases_deg").get<std::vector<double>>());
  if (exc.size() != geom.n_elements) {
    throw DataIntegrityError("excitation json: weight count does not match n_elements");
  }
  return {geom, std::move(exc)};
}

void write_model_json(const std::string& path, const Mlp& mlp, const ConfigEcho& config) {
  json j;
  j["layer_sizes"] = {mlp.n_in, mlp.n_hidden, mlp.n_out};
  j["hidden_weights"] = mlp.hidden_w;
  j["hidden_biases"] = mlp.hidden_b;
  j["output_weights"] = mlp.output_w;
  j["output_biases"] = mlp.output_b;
  j["input_encoding_version"] = kInputEncodingVersion;
  if (!config.empty()) j["config"] = config_object(config);
  write_file(path, j.dump(2) + "\n");
}

Mlp read_model_json(const std::string& path) {
  const json j = json::parse(read_file(path));
  const auto sizes = j.at("layer_sizes").get<std::vector<int>>();
  if (sizes.size() != 3) throw DataIntegrityError("model json: layer_sizes must have 3 entries");
  const auto version = j.at("input_encoding_version").get<std::string>();
  if (version != kInputEncodingVersion) {
    throw DataIntegrityError("model json: unsupported input encoding version " + version);
  }
  Mlp m(sizes[0], sizes[1], sizes[2]);
  m.hidden_w = j.at("hidden_weights").get<std::vector<double>>();
  m.hidden_b = j.at("hidden_biases").get<std::vector<double>>();
  m.output_w = j.at("output_weights").get<std::vector<double>>();
  m.output_b = j.at("output_biases").get<std::vector<double>>();
  if (static_cast<int>(m.hidden_w.size()) != sizes[1] * sizes[0] ||
      static_cast<int>(m.hidden_b.size()) != sizes[1] ||
      static_cast<int>(m.output_w.size()) != sizes[2] * sizes[1] ||
      static_cast<int>(m.output_b.size()) != sizes[2]) {
    throw DataIntegrityError("model json: weight array sizes do not match layer_sizes");
  }
  for (double v : m.hidden_w) {
    if (!std::isfinite(v)) throw DataIntegrityError("model json: non-finite weight");
  }
  return m;
}

}  // namespace beamsynth
