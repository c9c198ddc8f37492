// Copyright 2026 The beamsynth Authors
// SPDX-License-Identifier: Apache-2.0

#include "beamsynth/mlp.hpp"

#include <cmath>

#include "beamsynth/error.hpp"
#include "beamsynth/rng.hpp"
#include "beamsynth/synthesis.hpp"

namespace beamsynth {

namespace {

void check_pattern_dims(const Mlp& mlp, const TrainingPattern& p) {
  if (static_cast<int>(p.input.size()) != mlp.n_in ||
      static_cast<int>(p.target.size()) != mlp.n_out) {
    throw DimensionError("mlp: pattern dimensions do not match the network");
  }
}

/// Forward pass keeping the hidden activations for backprop.
void forward_into(const Mlp& m, const double* x, double* hidden, double* out) {
  for (int i = 0; i < m.n_hidden; ++i) {
    double z = m.hidden_b[static_cast<std::size_t>(i)];
    const double* row = &m.hidden_w[static_cast<std::size_t>(i) * m.n_in];
    for (int j = 0; j < m.n_in; ++j) z += row[j] * x[j];
    hidden[i] = std::tanh(z);
  }
  for (int k = 0; k < m.n_out; ++k) {
    double z = m.output_b[static_cast<std::size_t>(k)];
    const double* row = &m.output_w[static_cast<std::size_t>(k) * m.n_hidden];
    for (int i = 0; i < m.n_hidden; ++i) z += row[i] * hidden[i];
    out[k] = std::tanh(z);
  }
}

/// Accumulates the gradient of (1/2)|y - d|^2 for one pattern into g*.
void accumulate_gradient(const Mlp& m, const TrainingPattern& p, std::vector<double>& hidden,
                         std::vector<double>& out, std::vector<double>& dz_out,
                         std::vector<double>& dz_hidden, std::vector<double>& g_hw,
                         std::vector<double>& g_hb, std::vector<double>& g_ow,
                         std::vector<double>& g_ob) {
  forward_into(m, p.input.data(), hidden.data(), out.data());
  for (int k = 0; k < m.n_out; ++k) {
    const double y = out[static_cast<std::size_t>(k)];
    dz_out[static_cast<std::size_t>(k)] =
        (y - p.target[static_cast<std::size_t>(k)]) * (1.0 - y * y);
  }
  for (int i = 0; i < m.n_hidden; ++i) {
    double acc = 0.0;
    for (int k = 0; k < m.n_out; ++k) {
      acc += m.output_w[static_cast<std::size_t>(k) * m.n_hidden + i] *
             dz_out[static_cast<std::size_t>(k)];
    }
    const double h = hidden[static_cast<std::size_t>(i)];
    dz_hidden[static_cast<std::size_t>(i)] = acc * (1.0 - h * h);
  }
  for (int k = 0; k < m.n_out; ++k) {
    const double d = dz_out[static_cast<std::size_t>(k)];
    double* row = &g_ow[static_cast<std::size_t>(k) * m.n_hidden];
    for (int i = 0; i < m.n_hidden; ++i) row[i] += d * hidden[static_cast<std::size_t>(i)];
    g_ob[static_cast<std::size_t>(k)] += d;
  }
  for (int i = 0; i < m.n_hidden; ++i) {
    const double d = dz_hidden[static_cast<std::size_t>(i)];
    double* row = &g_hw[static_cast<std::size_t>(i) * m.n_in];
    for (int j = 0; j < m.n_in; ++j) row[j] += d * p.input[static_cast<std::size_t>(j)];
    g_hb[static_cast<std::size_t>(i)] += d;
  }
}

double set_mse(const Mlp& m, const std::vector<const SynthesisPair*>& set) {
  std::vector<double> hidden(static_cast<std::size_t>(m.n_hidden));
  std::vector<double> out(static_cast<std::size_t>(m.n_out));
  double acc = 0.0;
  for (const auto* p : set) {
    forward_into(m, p->input.data(), hidden.data(), out.data());
    for (int k = 0; k < m.n_out; ++k) {
      const double e = out[static_cast<std::size_t>(k)] - p->target[static_cast<std::size_t>(k)];
      acc += e * e;
    }
  }
  return 0.5 * acc / static_cast<double>(set.size());
}

}  // namespace

Mlp::Mlp(int in, int hidden, int out) : n_in(in), n_hidden(hidden), n_out(out) {
  if (in < 1 || hidden < 1 || out < 1) throw ArgumentError("Mlp: layer sizes must be positive");
  hidden_w.assign(static_cast<std::size_t>(hidden) * in, 0.0);
  hidden_b.assign(static_cast<std::size_t>(hidden), 0.0);
  output_w.assign(static_cast<std::size_t>(out) * hidden, 0.0);
  output_b.assign(static_cast<std::size_t>(out), 0.0);
}

Mlp Mlp::seeded(int in, int hidden, int out, std::uint64_t seed) {
  Mlp m(in, hidden, out);
  SeededRng rng(seed);
  for (auto& w : m.hidden_w) w = rng.uniform(-0.5, 0.5);
  for (auto& b : m.hidden_b) b = rng.uniform(-0.5, 0.5);
  for (auto& w : m.output_w) w = rng.uniform(-0.5, 0.5);
  for (auto& b : m.output_b) b = rng.uniform(-0.5, 0.5);
  return m;
}

std::vector<double> Mlp::forward(const std::vector<double>& input) const {
  if (static_cast<int>(input.size()) != n_in) {
    throw DimensionError("Mlp::forward: input length does not match the input layer");
  }
  std::vector<double> hidden(static_cast<std::size_t>(n_hidden));
  std::vector<double> out(static_cast<std::size_t>(n_out));
  forward_into(*this, input.data(), hidden.data(), out.data());
  return out;
}

double mse(const Mlp& mlp, const TrainingSet& set) {
  if (set.empty()) throw ArgumentError("mse: empty pattern set");
  std::vector<double> hidden(static_cast<std::size_t>(mlp.n_hidden));
  std::vector<double> out(static_cast<std::size_t>(mlp.n_out));
  double acc = 0.0;
  for (const auto& p : set) {
    check_pattern_dims(mlp, p);
    forward_into(mlp, p.input.data(), hidden.data(), out.data());
    for (int k = 0; k < mlp.n_out; ++k) {
      const double e = out[static_cast<std::size_t>(k)] - p.target[static_cast<std::size_t>(k)];
      acc += e * e;
    }
  }
  return 0.5 * acc / static_cast<double>(set.size());
}

Mlp backprop_step(const Mlp& mlp, const TrainingSet& batch, double eta) {
  if (batch.empty()) throw ArgumentError("backprop_step: empty batch");
  if (eta < 0.0) throw ArgumentError("backprop_step: eta must be >= 0");
  for (const auto& p : batch) check_pattern_dims(mlp, p);

  std::vector<double> hidden(static_cast<std::size_t>(mlp.n_hidden));
  std::vector<double> out(static_cast<std::size_t>(mlp.n_out));
  std::vector<double> dz_out(static_cast<std::size_t>(mlp.n_out));
  std::vector<double> dz_hidden(static_cast<std::size_t>(mlp.n_hidden));
  std::vector<double> g_hw(mlp.hidden_w.size(), 0.0), g_hb(mlp.hidden_b.size(), 0.0);
  std::vector<double> g_ow(mlp.output_w.size(), 0.0), g_ob(mlp.output_b.size(), 0.0);
  for (const auto& p : batch) {
    accumulate_gradient(mlp, p, hidden, out, dz_out, dz_hidden, g_hw, g_hb, g_ow, g_ob);
  }

  const double scale = eta / static_cast<double>(batch.size());
  Mlp next = mlp;
  for (std::size_t i = 0; i < g_hw.size(); ++i) next.hidden_w[i] -= scale * g_hw[i];
  for (std::size_t i = 0; i < g_hb.size(); ++i) next.hidden_b[i] -= scale * g_hb[i];
  for (std::size_t i = 0; i < g_ow.size(); ++i) next.output_w[i] -= scale * g_ow[i];
  for (std::size_t i = 0; i < g_ob.size(); ++i) next.output_b[i] -= scale * g_ob[i];
  return next;
}

std::pair<Mlp, TrainingTrace> train(const Mlp& mlp, const SynthesisDataset& data,
                                    const TrainingConfig& cfg) {
  cfg.validate();
  const auto train_set = data.subset(Split::kTrain);
  const auto val_set = data.subset(Split::kValidation);
  const auto test_set = data.subset(Split::kTest);
  if (train_set.empty() || val_set.empty() || test_set.empty()) {
    throw ArgumentError("train: every split partition must be non-empty");
  }
  for (const auto* p : data.subset(Split::kTrain)) {
    if (static_cast<int>(p->input.size()) != mlp.n_in ||
        static_cast<int>(p->target.size()) != mlp.n_out) {
      throw DimensionError("train: dataset dimensions do not match the network");
    }
  }

  Mlp current = mlp;
  TrainingTrace trace;

  std::vector<double> hidden(static_cast<std::size_t>(mlp.n_hidden));
  std::vector<double> out(static_cast<std::size_t>(mlp.n_out));
  std::vector<double> dz_out(static_cast<std::size_t>(mlp.n_out));
  std::vector<double> dz_hidden(static_cast<std::size_t>(mlp.n_hidden));

  if (set_mse(current, train_set) >= cfg.target_mse) {
    for (long epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
      for (const auto* p : train_set) {
        forward_into(current, p->input.data(), hidden.data(), out.data());
        for (int k = 0; k < current.n_out; ++k) {
          const double y = out[static_cast<std::size_t>(k)];
          dz_out[static_cast<std::size_t>(k)] =
              (y - p->target[static_cast<std::size_t>(k)]) * (1.0 - y * y);
        }
        for (int i = 0; i < current.n_hidden; ++i) {
          double acc = 0.0;
          for (int k = 0; k < current.n_out; ++k) {
            acc += current.output_w[static_cast<std::size_t>(k) * current.n_hidden + i] *
                   dz_out[static_cast<std::size_t>(k)];
          }
          const double h = hidden[static_cast<std::size_t>(i)];
          dz_hidden[static_cast<std::size_t>(i)] = acc * (1.0 - h * h);
        }
        for (int k = 0; k < current.n_out; ++k) {
          const double d = cfg.eta * dz_out[static_cast<std::size_t>(k)];
          double* row = &current.output_w[static_cast<std::size_t>(k) * current.n_hidden];
          for (int i = 0; i < current.n_hidden; ++i) {
            row[i] -= d * hidden[static_cast<std::size_t>(i)];
          }
          current.output_b[static_cast<std::size_t>(k)] -= d;
        }
        for (int i = 0; i < current.n_hidden; ++i) {
          const double d = cfg.eta * dz_hidden[static_cast<std::size_t>(i)];
          double* row = &current.hidden_w[static_cast<std::size_t>(i) * current.n_in];
          for (int j = 0; j < current.n_in; ++j) {
            row[j] -= d * p->input[static_cast<std::size_t>(j)];
          }
          current.hidden_b[static_cast<std::size_t>(i)] -= d;
        }
      }

      const double tm = set_mse(current, train_set);
      const double vm = set_mse(current, val_set);
      if (!std::isfinite(tm) || !std::isfinite(vm)) {
        throw Error("train: loss became non-finite");
      }
      trace.rows.push_back({epoch, tm, vm});
      if (tm < cfg.target_mse) break;
    }
  }

  const Mlp& result = current;
  trace.final_test_mse = set_mse(result, test_set);

  // Pooled predicted-vs-target linear fit over the test partition.
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  long count = 0;
  for (const auto* p : test_set) {
    const auto y = result.forward(p->input);
    for (int k = 0; k < result.n_out; ++k) {
      const double t = p->target[static_cast<std::size_t>(k)];
      st += t;
      sy += y[static_cast<std::size_t>(k)];
      stt += t * t;
      sty += t * y[static_cast<std::size_t>(k)];
      ++count;
    }
  }
  const double n = static_cast<double>(count);
  const double var_t = stt / n - (st / n) * (st / n);
  trace.regression_slope = var_t == 0.0 ? 0.0 : (sty / n - st / n * sy / n) / var_t;
  trace.regression_intercept = sy / n - trace.regression_slope * st / n;

  return {result, std::move(trace)};
}

Excitation predict_phases(const Mlp& mlp, double steer_deg) {
  if (!(steer_deg >= kSteerMinDeg && steer_deg <= kSteerMaxDeg)) {
    throw DomainError("predict_phases: steer angle outside the trained domain [40, 140]");
  }
  if (mlp.n_in != kInputDim || mlp.n_out != kOutputDim) {
    throw DimensionError("predict_phases: network does not match the dataset encoding");
  }

  const auto y = mlp.forward(encode_input(steer_deg));

  // Signed broadside coefficient profile of the default desired pattern:
  // amplitudes |c_m| plus a 180 deg offset where c_m < 0 (without the signs
  // the outer elements add incoherently and the sidelobe gate is lost).
  const ArrayGeometry geom(kOutputDim, 0.5);
  const Excitation profile = fourier_weights(geom, DesiredPattern(90.0));

  std::vector<std::complex<double>> w(static_cast<std::size_t>(kOutputDim));
  for (int e = 0; e < kOutputDim; ++e) {
    const double c = profile[e].real();
    const double phase_deg =
        wrap_deg(y[static_cast<std::size_t>(e)] * 180.0 / kTargetScale + (c < 0.0 ? 180.0 : 0.0));
    w[static_cast<std::size_t>(e)] = std::polar(std::abs(c), deg2rad(phase_deg));
  }
  return Excitation(std::move(w));
}

}  // namespace beamsynth
